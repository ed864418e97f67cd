/*
 * Copyright 2026 The firm-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FIRM_INDEX_FILE_HPP
#define FIRM_INDEX_FILE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "firm/filter_core.hpp"

namespace firm {

// On-disk layout, all integers little-endian:
//
//   offset  size  field
//   0       8     magic "FIRMIDX\0"
//   8       4     format version (currently 1)
//   12      4     bin_length
//   16      8     bin count n
//   24      128n  presence bits, one 128-byte record per bin in bin-id
//                 order; token j is bit (j % 8) of byte (j / 8)
inline constexpr char kIndexMagic[8] = {'F', 'I', 'R', 'M', 'I', 'D', 'X', '\0'};
inline constexpr std::uint32_t kIndexVersion = 1;
inline constexpr std::size_t kIndexHeaderBytes = 24;
inline constexpr std::size_t kIndexRecordBytes = kTokenCount / 8;

struct BinIndex {
  std::uint32_t bin_length = 0;
  std::vector<BinVector> bins;
};

void write_index(std::ostream& out, std::uint32_t bin_length, std::span<const BinVector> bins);
void write_index_file(const std::string& path, std::uint32_t bin_length,
                      std::span<const BinVector> bins);

/// Throws FormatError on a bad magic, unknown version or truncated file.
BinIndex read_index(std::istream& in);
BinIndex read_index_file(const std::string& path);

}  // namespace firm

#endif  // FIRM_INDEX_FILE_HPP
