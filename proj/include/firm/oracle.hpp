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

#ifndef FIRM_ORACLE_HPP
#define FIRM_ORACLE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "firm/filter_core.hpp"
#include "firm/genome_io.hpp"
#include "firm/shift_engine.hpp"
#include "firm/trace.hpp"

namespace firm {

// Reference implementations used only for cross-checking. They work on raw
// strings and explicit track contents and share no code path with the
// bit-vector filter or the shift engine.

/// Scores every bin by searching each 5-symbol read window in the bin's
/// sequence. A window counts once per occurrence in the read.
FilterVerdict oracle_filter(std::string_view read, std::span<const ReferenceBin> bins,
                            std::uint32_t threshold, std::uint64_t read_id = 0);

/// Same scores as oracle_filter, but with the substring search precomputed
/// into per-window posting lists so that thousands of reads stay cheap.
class SubstringOracle {
 public:
  explicit SubstringOracle(std::span<const ReferenceBin> bins);
  FilterVerdict verdict(std::string_view read, std::uint32_t threshold,
                        std::uint64_t read_id = 0) const;

 private:
  std::size_t bin_count_;
  std::unordered_map<std::string, std::vector<std::uint64_t>> postings_;
};

struct OracleShiftCount {
  std::uint64_t total = 0;
  std::uint64_t reset = 0;
};

/// Replays `trace` on explicitly simulated track groups: every track group
/// of an accessed row is moved until a port faces the domain holding that
/// row, and every moved group is returned to position 0 whenever the read
/// id changes and at the end. `extent` is only used by two-port layouts.
OracleShiftCount oracle_shifts(std::span<const TraceEvent> trace, const DeviceGeometry& g,
                               PortPolicy policy, const ExtentFn& extent = {});

}  // namespace firm

#endif  // FIRM_ORACLE_HPP
