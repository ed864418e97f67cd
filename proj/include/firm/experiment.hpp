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

#ifndef FIRM_EXPERIMENT_HPP
#define FIRM_EXPERIMENT_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "firm/config_file.hpp"
#include "firm/cost_model.hpp"
#include "firm/filter_core.hpp"
#include "firm/shift_engine.hpp"
#include "firm/trace.hpp"

namespace firm {

/**
 * Presence-bit rows addressed physically: (subarray, row) -> the
 * cols_per_subarray bits stored there under one mapping policy. Rows that
 * would be all zero are not stored and read back as zero.
 */
class RowStore {
 public:
  RowStore(MappingPolicy policy, const DeviceGeometry& g, std::span<const BinVector> bins);

  /// nullptr for an unpopulated row.
  const std::uint64_t* row(PhysicalAddress addr) const;
  std::size_t words_per_row() const { return words_; }
  MappingPolicy policy() const { return policy_; }

 private:
  MappingPolicy policy_;
  std::uint32_t rows_per_subarray_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
  std::unordered_map<std::uint64_t, std::size_t> slots_;
};

/// Scores a read by replaying its trace against physical memory.
FilterVerdict replay_verdict(const AccessTrace& trace, const RowStore& store,
                             const DeviceGeometry& g, std::uint64_t bin_count,
                             std::uint32_t threshold, std::uint64_t read_id);

struct ExperimentOptions {
  std::uint32_t threshold = kDefaultThreshold;
  std::string baseline = "GRIM";
  // Reads whose verdicts are recomputed per configuration and compared with
  // the filter-core result.
  std::size_t verdict_check_reads = std::numeric_limits<std::size_t>::max();
  bool keep_verdicts = false;
  // Configuration whose shift events feed `histogram` (empty = none).
  std::string histogram_config;
  ShiftHistogram* histogram = nullptr;
};

struct ExperimentResult {
  std::vector<CostReport> reports;  // in configuration order
  std::size_t verdicts_checked = 0;
  std::uint64_t selected_bins_total = 0;  // over checked reads
  std::vector<std::uint64_t> unfilterable_reads;
  std::vector<FilterVerdict> verdicts;  // filter-core verdicts when keep_verdicts
  std::uint64_t bin_count = 0;
  std::uint32_t iterations = 0;
};

/// Per-configuration cost of one read, independent of every other read.
struct ReadCost {
  std::uint64_t cycles = 0;
  std::uint64_t row_accesses = 0;
  ShiftTotals shifts;
};

/**
 * Simulates reads one after another under a single configuration. Every
 * read starts from reset ports and idle subarrays, so reads can be costed
 * in any order and the totals are the same.
 */
class ConfigSimulator {
 public:
  ConfigSimulator(const Configuration& config, const DeviceGeometry& base,
                  const CostParams& cost, std::uint64_t bin_count);

  ReadCost run(const AccessTrace& trace, std::vector<ShiftEvent>* events = nullptr);
  const Configuration& config() const { return config_; }
  const DeviceGeometry& geometry() const { return geometry_; }

 private:
  Configuration config_;
  DeviceGeometry geometry_;
  ShiftEngine engine_;
  Scheduler scheduler_;
  std::vector<ShiftEvent> scratch_;
};

/// Runs every configuration over `reads`, checks that they select the same
/// bins, and fills per-configuration cost reports normalized to the
/// baseline. Throws VerdictMismatch or CapacityError.
ExperimentResult run_experiment(std::span<const Configuration> configs,
                                std::span<const BinVector> bins,
                                std::span<const QueryRead> reads, const SimParameters& params,
                                const ExperimentOptions& options = {});

}  // namespace firm

#endif  // FIRM_EXPERIMENT_HPP
