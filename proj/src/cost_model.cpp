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

#include "firm/cost_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace firm {

std::uint32_t row_access_latency(Technology tech, const TimingParams& t,
                                 std::uint32_t visible_shift_steps) {
  const std::uint32_t open_and_read = std::max(t.tRAS, t.tRCD + t.tCAS);
  if (tech == Technology::Dram) return open_and_read + t.tRP;
  return open_and_read + t.shift_cycles_per_step * visible_shift_steps;
}

Scheduler::Scheduler(Technology tech, const TimingParams& timing, std::uint32_t subarrays)
    : tech_(tech), timing_(timing), free_at_(subarrays, 0) {}

void Scheduler::clear() {
  for (std::uint32_t s : busy_) free_at_[s] = 0;
  busy_.clear();
  next_issue_ = 0;
  last_consume_ = 0;
  consumed_any_ = false;
  makespan_ = 0;
  row_accesses_ = 0;
}

void Scheduler::submit(const ScheduleOp& op) {
  std::uint64_t& free = free_at_.at(op.subarray);
  if (free == 0) busy_.push_back(op.subarray);
  const std::uint64_t step = timing_.shift_cycles_per_step;

  if (op.kind == OpKind::Reset && op.visible_steps == 0) {
    // Preshifted reset: runs on the idle subarray without a command slot.
    free += step * op.hidden_steps;
    return;
  }

  const std::uint64_t ready = free + step * op.hidden_steps;
  const std::uint64_t start = std::max(next_issue_, ready);
  next_issue_ = start + 1;

  if (op.kind == OpKind::Reset) {
    free = start + step * op.visible_steps;
    makespan_ = std::max(makespan_, free);
    return;
  }

  const std::uint64_t done = start + row_access_latency(tech_, timing_, op.visible_steps);
  free = done;
  const std::uint64_t consume = consumed_any_ ? std::max(done, last_consume_ + 1) : done;
  consumed_any_ = true;
  last_consume_ = consume;
  makespan_ = std::max({makespan_, done, consume});
  ++row_accesses_;
}

std::uint64_t schedule(std::span<const ScheduleOp> ops, Technology tech, const TimingParams& timing,
                       std::uint32_t subarrays) {
  Scheduler s(tech, timing, subarrays);
  for (const ScheduleOp& op : ops) s.submit(op);
  return s.makespan();
}

EnergyBreakdown energy(Technology tech, std::uint32_t ports, const WorkCounts& work,
                       std::uint32_t row_bits, const CostParams& params) {
  if (ports < 1 || ports > 2) throw std::invalid_argument("ports must be 1 or 2");
  const EnergyParams& e = params.energy;
  const double n = static_cast<double>(work.row_accesses);
  const double bits = static_cast<double>(row_bits);
  // mW x ns = pJ
  const double runtime_ns = static_cast<double>(work.cycles) / params.clock_ghz;

  EnergyBreakdown b;
  if (tech == Technology::Dram) {
    b.activation = n * e.dram_act_pre_pj;
    b.read = n * bits * e.dram_access_pj_per_bit;
    b.background = e.dram_background_mw * runtime_ns;
  } else {
    b.read = n * bits * e.rtm_read_pj_per_bit[ports - 1];
    b.shift = static_cast<double>(work.shift_steps) * bits * e.rtm_shift_pj_per_bit;
    b.background = e.rtm_background_mw[ports - 1] * runtime_ns;
  }
  b.io = n * bits * e.io_pj_per_bit;
  b.accelerator_dynamic = static_cast<double>(work.rows_accumulated) * e.accel_dynamic_pj_per_row;
  b.accelerator_leakage = e.accel_leakage_mw * runtime_ns;
  return b;
}

void normalize(std::span<CostReport> reports, const std::string& baseline) {
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [&](const CostReport& r) { return r.config == baseline; });
  if (it == reports.end()) throw std::invalid_argument("baseline " + baseline + " not run");
  const double cycles = static_cast<double>(it->total_cycles);
  const double joules = it->energy.total();
  for (CostReport& r : reports) {
    r.baseline = baseline;
    r.normalized_runtime = cycles > 0 ? static_cast<double>(r.total_cycles) / cycles : 0.0;
    r.normalized_energy = joules > 0 ? r.energy.total() / joules : 0.0;
  }
}

}  // namespace firm
