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

#ifndef FIRM_COST_MODEL_HPP
#define FIRM_COST_MODEL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "firm/memory_model.hpp"
#include "firm/shift_engine.hpp"

namespace firm {

/// Command timings in memory-clock cycles. For RTM the precharge slot is
/// taken by shifting, shift_cycles_per_step per domain moved.
struct TimingParams {
  std::uint32_t tRAS = 0;
  std::uint32_t tRCD = 0;
  std::uint32_t tRP = 0;
  std::uint32_t tCAS = 0;
  std::uint32_t tWR = 0;  // carried for completeness; the filter only reads
  std::uint32_t shift_cycles_per_step = 0;

  static TimingParams dram() { return {20, 8, 8, 8, 8, 0}; }
  static TimingParams rtm() { return {9, 4, 0, 4, 4, 2}; }
};

struct EnergyParams {
  double dram_act_pre_pj = 1964.0;  // per row activation + precharge
  double dram_access_pj_per_bit = 1.25;
  double io_pj_per_bit = 0.40;
  double dram_background_mw = 410.0;
  double rtm_read_pj_per_bit[2] = {0.647, 0.692};  // indexed by ports - 1
  double rtm_shift_pj_per_bit = 0.231;
  double rtm_background_mw[2] = {193.0, 208.0};
  double accel_dynamic_pj_per_row = 1785.0;
  double accel_leakage_mw = 16.40;
};

struct CostParams {
  TimingParams dram_timing = TimingParams::dram();
  TimingParams rtm_timing = TimingParams::rtm();
  EnergyParams energy;
  double clock_ghz = 1.0;

  const TimingParams& timing(Technology t) const {
    return t == Technology::Dram ? dram_timing : rtm_timing;
  }
};

/// Subarray occupancy of one row access: max(tRAS, tRCD + tCAS) plus the
/// precharge slot (tRP for DRAM, shifting for RTM).
std::uint32_t row_access_latency(Technology tech, const TimingParams& t,
                                 std::uint32_t visible_shift_steps);

enum class OpKind : std::uint8_t {
  RowAccess,
  Reset,  // end-of-read return of one port region to position 0
};

/// One command as seen by the scheduler. `hidden_steps` run on the subarray
/// before the command, starting as soon as the subarray went idle.
struct ScheduleOp {
  std::uint32_t subarray = 0;
  OpKind kind = OpKind::RowAccess;
  std::uint32_t visible_steps = 0;
  std::uint32_t hidden_steps = 0;
};

/**
 * In-order discrete-event schedule of one read. Commands issue at most one
 * per cycle and in trace order; a command waits for its subarray. A row
 * access occupies its subarray for row_access_latency() and its row is
 * accumulated by the near-memory accelerator at most one row per cycle.
 * Visible resets take an issue slot and occupy the subarray for the shift;
 * hidden resets only occupy the subarray and never extend the makespan.
 */
class Scheduler {
 public:
  Scheduler(Technology tech, const TimingParams& timing, std::uint32_t subarrays);

  void submit(const ScheduleOp& op);
  std::uint64_t makespan() const { return makespan_; }
  std::uint64_t row_accesses() const { return row_accesses_; }
  /// Starts a new read at cycle 0 with every subarray idle.
  void clear();

 private:
  Technology tech_;
  TimingParams timing_;
  std::vector<std::uint64_t> free_at_;
  std::vector<std::uint32_t> busy_;
  std::uint64_t next_issue_ = 0;
  std::uint64_t last_consume_ = 0;
  bool consumed_any_ = false;
  std::uint64_t makespan_ = 0;
  std::uint64_t row_accesses_ = 0;
};

std::uint64_t schedule(std::span<const ScheduleOp> ops, Technology tech, const TimingParams& timing,
                       std::uint32_t subarrays);

struct EnergyBreakdown {
  double activation = 0;
  double read = 0;
  double io = 0;
  double shift = 0;
  double background = 0;
  double accelerator_dynamic = 0;
  double accelerator_leakage = 0;

  double total() const {
    return activation + read + io + shift + background + accelerator_dynamic +
           accelerator_leakage;
  }
};

/// Work performed by one configuration, the input to the energy model.
struct WorkCounts {
  std::uint64_t row_accesses = 0;
  std::uint64_t rows_accumulated = 0;
  std::uint64_t shift_steps = 0;  // visible and hidden
  std::uint64_t cycles = 0;
};

/// Energy in pJ. Every accessed row moves cols bits; background terms are
/// power times the modeled runtime.
EnergyBreakdown energy(Technology tech, std::uint32_t ports, const WorkCounts& work,
                       std::uint32_t row_bits, const CostParams& params);

struct CostReport {
  std::string config;
  Technology technology = Technology::Rtm;
  std::uint32_t ports = 1;
  std::uint64_t reads = 0;
  std::uint64_t unfilterable_reads = 0;  // no valid token window
  std::uint64_t row_accesses = 0;
  std::uint64_t total_cycles = 0;
  ShiftTotals shifts;
  EnergyBreakdown energy;
  std::string baseline;
  double normalized_runtime = 0;
  double normalized_energy = 0;
};

/// Fills normalized_* of every report against the one named `baseline`.
/// Throws std::invalid_argument if the baseline is not among the reports.
void normalize(std::span<CostReport> reports, const std::string& baseline);

}  // namespace firm

#endif  // FIRM_COST_MODEL_HPP
