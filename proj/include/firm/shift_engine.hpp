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

#ifndef FIRM_SHIFT_ENGINE_HPP
#define FIRM_SHIFT_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "firm/memory_model.hpp"

namespace firm {

enum class PortPolicy {
  OnDemand,         // shift when the access arrives, reset explicitly after the read
  Preshift,         // align to the next needed row right after each access
  CircularTwoPort,  // preshift on a two-port track whose sweep ends at reset
};

std::string_view to_string(PortPolicy p);

struct ShiftEvent {
  std::uint32_t subarray = 0;
  std::uint32_t vgroup = 0;
  std::int32_t distance = 0;  // domains moved, never 0
  bool hidden = false;        // latency overlapped with other subarrays' accesses
  bool reset = false;         // end-of-read return to position 0

  friend bool operator==(const ShiftEvent&, const ShiftEvent&) = default;
};

/// Shift steps attached to one row access. `visible_steps` is S_effective,
/// the steps that sit on the access's critical path.
struct AccessShift {
  std::uint32_t visible_steps = 0;
  std::uint32_t hidden_steps = 0;
};

struct ShiftTotals {
  std::uint64_t visible = 0;
  std::uint64_t hidden = 0;
  std::uint64_t reset = 0;  // subset of visible + hidden

  std::uint64_t total() const { return visible + hidden; }
  ShiftTotals& operator+=(const ShiftTotals& o) {
    visible += o.visible;
    hidden += o.hidden;
    reset += o.reset;
    return *this;
  }
  friend bool operator==(const ShiftTotals&, const ShiftTotals&) = default;
};

ShiftTotals total_shifts(std::span<const ShiftEvent> events);

/// Number of populated rows in a (subarray, vgroup) region. The two-port
/// layout folds exactly these rows, so a sweep over them ends at reset.
using ExtentFn = std::function<std::uint32_t(std::uint32_t subarray, std::uint32_t vgroup)>;

/**
 * Tracks port alignment for every (subarray, vgroup) region and prices each
 * row access in shift steps under one port policy.
 *
 * Preshift and CircularTwoPort move the port right after the previous access
 * to the same region, so the movement is hidden as long as some access to a
 * different subarray came in between. The first access of a read in a region
 * is never preshifted.
 *
 * CircularTwoPort stores the first ceil(k/2) populated rows of a region in
 * order under port A and the remaining rows in reverse order under port B,
 * half a track away. A full in-order sweep of the k rows therefore costs
 * 2 * (ceil(k/2) - 1) single steps and finishes at position 0.
 */
class ShiftEngine {
 public:
  ShiftEngine(const DeviceGeometry& g, PortPolicy policy, ExtentFn extent = {});

  /// Aligns the port for `target`, appending any shift to `events`.
  AccessShift access_row(const PhysicalAddress& target, std::vector<ShiftEvent>* events = nullptr);

  /// Returns every moved region to position 0 and ends the read.
  std::vector<ShiftEvent> end_of_read_reset();

  /// Port position at which `row` of `subarray` is readable.
  std::uint32_t aligned_position(std::uint32_t subarray, std::uint32_t row) const;

  const PortTable& ports() const { return ports_; }
  PortPolicy policy() const { return policy_; }
  const DeviceGeometry& geometry() const { return geometry_; }

 private:
  std::uint64_t latest_access_excluding(std::uint32_t subarray) const;

  DeviceGeometry geometry_;
  PortPolicy policy_;
  ExtentFn extent_;
  PortTable ports_;

  std::uint64_t seq_ = 0;
  // Sequence number of the last access to each region in the current read.
  std::vector<std::uint64_t> last_access_;
  std::vector<std::uint32_t> accessed_keys_;
  // Most recent access overall, and the most recent one to any other subarray.
  std::uint32_t recent_subarray_ = 0;
  std::uint64_t recent_seq_ = 0;
  std::uint64_t recent_other_seq_ = 0;
};

/// Per-subarray shift-step totals, written as CSV for debugging placement.
class ShiftHistogram {
 public:
  void add(std::span<const ShiftEvent> events);
  void write_csv(std::ostream& out) const;
  bool empty() const { return bins_.empty(); }

 private:
  struct Counts {
    std::uint64_t visible = 0;
    std::uint64_t hidden = 0;
    std::uint64_t reset = 0;
    std::uint64_t events = 0;
  };
  std::map<std::uint32_t, Counts> bins_;
};

}  // namespace firm

#endif  // FIRM_SHIFT_ENGINE_HPP
