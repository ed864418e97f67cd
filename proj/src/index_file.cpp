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

#include "firm/index_file.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "firm/errors.hpp"

namespace firm {

namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> b{};
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    b[i] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xffu);
  }
  out.write(b.data(), b.size());
}

template <typename T>
T get_le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return static_cast<T>(v);
}

}  // namespace

void write_index(std::ostream& out, std::uint32_t bin_length, std::span<const BinVector> bins) {
  out.write(kIndexMagic, sizeof(kIndexMagic));
  put_le<std::uint32_t>(out, kIndexVersion);
  put_le<std::uint32_t>(out, bin_length);
  put_le<std::uint64_t>(out, bins.size());
  std::array<char, kIndexRecordBytes> rec{};
  for (const BinVector& b : bins) {
    rec.fill(0);
    for (std::size_t j = 0; j < kTokenCount; ++j) {
      if (b.bits.test(j)) rec[j / 8] = static_cast<char>(rec[j / 8] | (1 << (j % 8)));
    }
    out.write(rec.data(), rec.size());
  }
  if (!out) throw FormatError("failed to write index");
}

void write_index_file(const std::string& path, std::uint32_t bin_length,
                      std::span<const BinVector> bins) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot create " + path);
  write_index(out, bin_length, bins);
}

BinIndex read_index(std::istream& in) {
  std::array<unsigned char, kIndexHeaderBytes> hdr{};
  if (!in.read(reinterpret_cast<char*>(hdr.data()), hdr.size())) {
    throw FormatError("index truncated: missing header");
  }
  if (std::memcmp(hdr.data(), kIndexMagic, sizeof(kIndexMagic)) != 0) {
    throw FormatError("not an index file (bad magic)");
  }
  const auto version = get_le<std::uint32_t>(hdr.data() + 8);
  if (version != kIndexVersion) {
    throw FormatError("unsupported index version " + std::to_string(version));
  }
  BinIndex idx;
  idx.bin_length = get_le<std::uint32_t>(hdr.data() + 12);
  const auto count = get_le<std::uint64_t>(hdr.data() + 16);
  idx.bins.resize(count);
  std::array<unsigned char, kIndexRecordBytes> rec{};
  for (std::uint64_t k = 0; k < count; ++k) {
    if (!in.read(reinterpret_cast<char*>(rec.data()), rec.size())) {
      throw FormatError("index truncated at bin " + std::to_string(k));
    }
    BinVector& b = idx.bins[k];
    b.bin_id = k;
    for (std::size_t j = 0; j < kTokenCount; ++j) {
      if ((rec[j / 8] >> (j % 8)) & 1u) b.bits.set(j);
    }
  }
  return idx;
}

BinIndex read_index_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  return read_index(in);
}

}  // namespace firm
