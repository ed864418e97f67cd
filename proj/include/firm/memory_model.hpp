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

#ifndef FIRM_MEMORY_MODEL_HPP
#define FIRM_MEMORY_MODEL_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "firm/filter_core.hpp"

namespace firm {

enum class Technology { Dram, Rtm };

std::string_view to_string(Technology t);

/**
 * Subarray/row/column organization of the memory layer. For RTM, a row is
 * one domain position across cols/tracks_per_group track groups that shift
 * in lockstep, and each subarray stacks rows/domains_per_track independent
 * vertical track-group regions ("vgroups"), each with its own port state.
 */
struct DeviceGeometry {
  std::uint32_t subarrays = 8192;
  std::uint32_t rows_per_subarray = 1024;
  std::uint32_t cols_per_subarray = 4096;
  std::uint32_t tracks_per_group = 512;
  std::uint32_t domains_per_track = 64;
  std::uint32_t ports_per_track = 1;
  Technology technology = Technology::Rtm;

  /// Throws std::invalid_argument when the stacking/tiling constraints fail.
  void validate() const;

  std::uint32_t vgroups_per_subarray() const { return rows_per_subarray / domains_per_track; }
  std::uint32_t hgroups_per_row() const { return cols_per_subarray / tracks_per_group; }
  std::uint64_t capacity_bits() const {
    return std::uint64_t{subarrays} * rows_per_subarray * cols_per_subarray;
  }
  /// Number of 1024-subarray groups the interleaved layout cycles through.
  std::uint32_t token_groups() const { return subarrays / static_cast<std::uint32_t>(kTokenCount); }

  friend bool operator==(const DeviceGeometry&, const DeviceGeometry&) = default;
};

/// One presence bit: the upper bits name the bin, the lower 10 the token.
struct LogicalBitAddress {
  std::uint64_t bin = 0;
  TokenIndex token;

  friend bool operator==(const LogicalBitAddress&, const LogicalBitAddress&) = default;
};

struct PhysicalAddress {
  std::uint32_t subarray = 0;
  std::uint32_t row = 0;
  std::uint32_t col = 0;

  std::uint32_t vgroup(const DeviceGeometry& g) const { return row / g.domains_per_track; }
  std::uint32_t domain(const DeviceGeometry& g) const { return row % g.domains_per_track; }
  std::uint32_t hgroup(const DeviceGeometry& g) const { return col / g.tracks_per_group; }
  std::uint32_t track(const DeviceGeometry& g) const { return col % g.tracks_per_group; }

  friend bool operator==(const PhysicalAddress&, const PhysicalAddress&) = default;
};

enum class MappingPolicy {
  Dram,   // row-major baseline: binset -> subarray, token -> row
  Alpha,  // same placement on RTM
  Firm,   // token -> subarray, binset -> row, binsets round-robin over groups
};

std::string_view to_string(MappingPolicy p);

/// Bins of one binset share a row; binset = bin / cols_per_subarray.
inline std::uint64_t binset_of(std::uint64_t bin, const DeviceGeometry& g) {
  return bin / g.cols_per_subarray;
}

/// Largest bin count the policy can place on `g`.
std::uint64_t bin_capacity(MappingPolicy policy, const DeviceGeometry& g);

PhysicalAddress map_alpha(LogicalBitAddress addr, const DeviceGeometry& g);
PhysicalAddress map_dram(LogicalBitAddress addr, const DeviceGeometry& g);
PhysicalAddress map_firm(LogicalBitAddress addr, const DeviceGeometry& g);
PhysicalAddress map_address(MappingPolicy policy, LogicalBitAddress addr, const DeviceGeometry& g);

/// Throws std::out_of_range for an address outside the geometry and
/// std::invalid_argument for one the policy never produces.
LogicalBitAddress inverse_map(MappingPolicy policy, PhysicalAddress phys, const DeviceGeometry& g);

/**
 * Aligned domain position of every (subarray, vgroup) port region. All
 * positions start at 0 (reset). The table remembers which regions moved
 * since the last clear_touched() so end-of-read resets only visit those.
 */
class PortTable {
 public:
  explicit PortTable(const DeviceGeometry& g);

  std::uint32_t position(std::uint32_t subarray, std::uint32_t vgroup) const {
    return positions_[key(subarray, vgroup)];
  }
  /// Moves by `distance` domains. Throws std::out_of_range if the result
  /// leaves [0, domains_per_track - 1].
  void shift(std::uint32_t subarray, std::uint32_t vgroup, std::int32_t distance);

  struct Region {
    std::uint32_t subarray;
    std::uint32_t vgroup;
  };
  /// Regions shifted since the last clear_touched(), in first-touch order.
  std::vector<Region> touched() const;
  void clear_touched();

  bool all_reset() const;
  std::uint32_t track_length() const { return length_; }

 private:
  std::size_t key(std::uint32_t s, std::uint32_t v) const {
    return std::size_t{s} * vgroups_ + v;
  }

  std::uint32_t vgroups_;
  std::uint32_t length_;
  std::vector<std::uint16_t> positions_;
  std::vector<std::uint8_t> touched_flag_;
  std::vector<std::uint32_t> touched_keys_;
};

}  // namespace firm

#endif  // FIRM_MEMORY_MODEL_HPP
