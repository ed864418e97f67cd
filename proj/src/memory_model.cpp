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

#include "firm/memory_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "firm/errors.hpp"

namespace firm {

std::string_view to_string(Technology t) { return t == Technology::Dram ? "DRAM" : "RTM"; }

std::string_view to_string(MappingPolicy p) {
  switch (p) {
    case MappingPolicy::Dram: return "dram";
    case MappingPolicy::Alpha: return "alpha";
    case MappingPolicy::Firm: return "firm";
  }
  return "?";
}

void DeviceGeometry::validate() const {
  if (subarrays == 0 || rows_per_subarray == 0 || cols_per_subarray == 0 ||
      tracks_per_group == 0 || domains_per_track == 0) {
    throw std::invalid_argument("geometry dimensions must be non-zero");
  }
  if (rows_per_subarray % domains_per_track != 0) {
    throw std::invalid_argument("rows_per_subarray must be a multiple of domains_per_track");
  }
  if (cols_per_subarray % tracks_per_group != 0) {
    throw std::invalid_argument("cols_per_subarray must be a multiple of tracks_per_group");
  }
  if (ports_per_track != 1 && ports_per_track != 2) {
    throw std::invalid_argument("ports_per_track must be 1 or 2");
  }
  if (ports_per_track == 2 && domains_per_track % 2 != 0) {
    throw std::invalid_argument("two-port tracks need an even domain count");
  }
}

std::uint64_t bin_capacity(MappingPolicy policy, const DeviceGeometry& g) {
  switch (policy) {
    case MappingPolicy::Dram:
    case MappingPolicy::Alpha:
      if (g.rows_per_subarray < kTokenCount) return 0;
      return std::uint64_t{g.subarrays} * g.cols_per_subarray;
    case MappingPolicy::Firm:
      return std::uint64_t{g.token_groups()} * g.rows_per_subarray * g.cols_per_subarray;
  }
  return 0;
}

namespace {

void check_capacity(MappingPolicy policy, LogicalBitAddress addr, const DeviceGeometry& g) {
  const std::uint64_t cap = bin_capacity(policy, g);
  if (addr.bin >= cap) {
    throw CapacityError("bin " + std::to_string(addr.bin) + " exceeds " +
                        std::string(to_string(policy)) + " capacity of " + std::to_string(cap) +
                        " bins");
  }
}

}  // namespace

PhysicalAddress map_alpha(LogicalBitAddress addr, const DeviceGeometry& g) {
  check_capacity(MappingPolicy::Alpha, addr, g);
  return {static_cast<std::uint32_t>(addr.bin / g.cols_per_subarray), addr.token.value(),
          static_cast<std::uint32_t>(addr.bin % g.cols_per_subarray)};
}

PhysicalAddress map_dram(LogicalBitAddress addr, const DeviceGeometry& g) {
  check_capacity(MappingPolicy::Dram, addr, g);
  return {static_cast<std::uint32_t>(addr.bin / g.cols_per_subarray), addr.token.value(),
          static_cast<std::uint32_t>(addr.bin % g.cols_per_subarray)};
}

// Consecutive binsets go to consecutive subarray groups, so a read's first
// `token_groups()` iterations touch row 0 of disjoint subarrays and the
// first revisit (one domain further) happens at iteration groups + 1.
PhysicalAddress map_firm(LogicalBitAddress addr, const DeviceGeometry& g) {
  check_capacity(MappingPolicy::Firm, addr, g);
  const std::uint64_t binset = binset_of(addr.bin, g);
  const std::uint32_t groups = g.token_groups();
  const auto group = static_cast<std::uint32_t>(binset % groups);
  return {group * static_cast<std::uint32_t>(kTokenCount) + addr.token.value(),
          static_cast<std::uint32_t>(binset / groups),
          static_cast<std::uint32_t>(addr.bin % g.cols_per_subarray)};
}

PhysicalAddress map_address(MappingPolicy policy, LogicalBitAddress addr,
                            const DeviceGeometry& g) {
  switch (policy) {
    case MappingPolicy::Dram: return map_dram(addr, g);
    case MappingPolicy::Alpha: return map_alpha(addr, g);
    case MappingPolicy::Firm: return map_firm(addr, g);
  }
  throw std::invalid_argument("unknown mapping policy");
}

LogicalBitAddress inverse_map(MappingPolicy policy, PhysicalAddress phys,
                              const DeviceGeometry& g) {
  if (phys.subarray >= g.subarrays || phys.row >= g.rows_per_subarray ||
      phys.col >= g.cols_per_subarray) {
    throw std::out_of_range("physical address outside geometry");
  }
  switch (policy) {
    case MappingPolicy::Dram:
    case MappingPolicy::Alpha:
      if (phys.row >= kTokenCount) {
        throw std::invalid_argument("row beyond the token space is never mapped");
      }
      return {std::uint64_t{phys.subarray} * g.cols_per_subarray + phys.col,
              TokenIndex(phys.row)};
    case MappingPolicy::Firm: {
      const std::uint32_t groups = g.token_groups();
      if (phys.subarray >= groups * kTokenCount) {
        throw std::invalid_argument("subarray outside the interleaved token groups");
      }
      const std::uint32_t group = phys.subarray / kTokenCount;
      const std::uint64_t binset = std::uint64_t{phys.row} * groups + group;
      return {binset * g.cols_per_subarray + phys.col, TokenIndex(phys.subarray % kTokenCount)};
    }
  }
  throw std::invalid_argument("unknown mapping policy");
}

PortTable::PortTable(const DeviceGeometry& g)
    : vgroups_(g.vgroups_per_subarray()),
      length_(g.domains_per_track),
      positions_(std::size_t{g.subarrays} * vgroups_, 0),
      touched_flag_(positions_.size(), 0) {}

void PortTable::shift(std::uint32_t subarray, std::uint32_t vgroup, std::int32_t distance) {
  const std::size_t k = key(subarray, vgroup);
  const std::int64_t next = std::int64_t{positions_.at(k)} + distance;
  if (next < 0 || next >= length_) throw std::out_of_range("shift beyond track end");
  positions_[k] = static_cast<std::uint16_t>(next);
  if (!touched_flag_[k]) {
    touched_flag_[k] = 1;
    touched_keys_.push_back(static_cast<std::uint32_t>(k));
  }
}

std::vector<PortTable::Region> PortTable::touched() const {
  std::vector<Region> out;
  out.reserve(touched_keys_.size());
  for (std::uint32_t k : touched_keys_) out.push_back({k / vgroups_, k % vgroups_});
  return out;
}

void PortTable::clear_touched() {
  for (std::uint32_t k : touched_keys_) touched_flag_[k] = 0;
  touched_keys_.clear();
}

bool PortTable::all_reset() const {
  return std::all_of(positions_.begin(), positions_.end(), [](auto p) { return p == 0; });
}

}  // namespace firm
