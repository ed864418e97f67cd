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

#include "firm/shift_engine.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace firm {

std::string_view to_string(PortPolicy p) {
  switch (p) {
    case PortPolicy::OnDemand: return "on-demand";
    case PortPolicy::Preshift: return "preshift";
    case PortPolicy::CircularTwoPort: return "circular-two-port";
  }
  return "?";
}

ShiftTotals total_shifts(std::span<const ShiftEvent> events) {
  ShiftTotals t;
  for (const ShiftEvent& e : events) {
    const auto steps = static_cast<std::uint64_t>(std::abs(e.distance));
    (e.hidden ? t.hidden : t.visible) += steps;
    if (e.reset) t.reset += steps;
  }
  return t;
}

ShiftEngine::ShiftEngine(const DeviceGeometry& g, PortPolicy policy, ExtentFn extent)
    : geometry_(g),
      policy_(policy),
      extent_(std::move(extent)),
      ports_(g),
      last_access_(std::size_t{g.subarrays} * g.vgroups_per_subarray(), 0) {
  g.validate();
  if (policy == PortPolicy::CircularTwoPort && g.ports_per_track != 2) {
    throw std::invalid_argument("circular two-port policy needs ports_per_track = 2");
  }
}

std::uint32_t ShiftEngine::aligned_position(std::uint32_t subarray, std::uint32_t row) const {
  const std::uint32_t length = geometry_.domains_per_track;
  const std::uint32_t local = row % length;
  if (policy_ != PortPolicy::CircularTwoPort) return local;

  const std::uint32_t vgroup = row / length;
  const std::uint32_t extent = extent_ ? extent_(subarray, vgroup) : length;
  if (local >= extent || extent > length) {
    throw std::out_of_range("row outside the populated extent of its track group");
  }
  const std::uint32_t half = (extent + 1) / 2;
  return local < half ? local : extent - 1 - local;
}

std::uint64_t ShiftEngine::latest_access_excluding(std::uint32_t subarray) const {
  return recent_subarray_ == subarray ? recent_other_seq_ : recent_seq_;
}

AccessShift ShiftEngine::access_row(const PhysicalAddress& target,
                                    std::vector<ShiftEvent>* events) {
  if (target.subarray >= geometry_.subarrays || target.row >= geometry_.rows_per_subarray) {
    throw std::out_of_range("access outside geometry");
  }
  const std::uint32_t vgroup = target.vgroup(geometry_);
  const std::size_t key = std::size_t{target.subarray} * geometry_.vgroups_per_subarray() + vgroup;
  const std::uint64_t previous = last_access_[key];
  const std::uint64_t now = ++seq_;

  const auto want = static_cast<std::int32_t>(aligned_position(target.subarray, target.row));
  const auto have = static_cast<std::int32_t>(ports_.position(target.subarray, vgroup));
  const std::int32_t distance = want - have;

  AccessShift result;
  if (distance != 0) {
    const bool preshifted = policy_ != PortPolicy::OnDemand && previous != 0 &&
                            latest_access_excluding(target.subarray) > previous;
    ports_.shift(target.subarray, vgroup, distance);
    const auto steps = static_cast<std::uint32_t>(std::abs(distance));
    (preshifted ? result.hidden_steps : result.visible_steps) = steps;
    if (events) events->push_back({target.subarray, vgroup, distance, preshifted, false});
  }

  if (previous == 0) accessed_keys_.push_back(static_cast<std::uint32_t>(key));
  last_access_[key] = now;
  if (target.subarray != recent_subarray_) {
    recent_other_seq_ = recent_seq_;
    recent_subarray_ = target.subarray;
  }
  recent_seq_ = now;
  return result;
}

std::vector<ShiftEvent> ShiftEngine::end_of_read_reset() {
  std::vector<ShiftEvent> out;
  const bool hidden = policy_ != PortPolicy::OnDemand;
  for (const PortTable::Region& r : ports_.touched()) {
    const auto pos = static_cast<std::int32_t>(ports_.position(r.subarray, r.vgroup));
    if (pos == 0) continue;
    ports_.shift(r.subarray, r.vgroup, -pos);
    out.push_back({r.subarray, r.vgroup, -pos, hidden, true});
  }
  ports_.clear_touched();
  for (std::uint32_t k : accessed_keys_) last_access_[k] = 0;
  accessed_keys_.clear();
  seq_ = 0;
  recent_subarray_ = 0;
  recent_seq_ = 0;
  recent_other_seq_ = 0;
  return out;
}

void ShiftHistogram::add(std::span<const ShiftEvent> events) {
  for (const ShiftEvent& e : events) {
    Counts& c = bins_[e.subarray];
    const auto steps = static_cast<std::uint64_t>(std::abs(e.distance));
    (e.hidden ? c.hidden : c.visible) += steps;
    if (e.reset) c.reset += steps;
    ++c.events;
  }
}

void ShiftHistogram::write_csv(std::ostream& out) const {
  out << "subarray,events,visible_steps,hidden_steps,reset_steps\n";
  for (const auto& [subarray, c] : bins_) {
    out << subarray << ',' << c.events << ',' << c.visible << ',' << c.hidden << ',' << c.reset
        << '\n';
  }
}

}  // namespace firm
