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

#include "firm/experiment.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>

#include "firm/errors.hpp"

namespace firm {

namespace {

std::uint64_t row_key(std::uint32_t subarray, std::uint32_t row, std::uint32_t rows) {
  return std::uint64_t{subarray} * rows + row;
}

}  // namespace

RowStore::RowStore(MappingPolicy policy, const DeviceGeometry& g, std::span<const BinVector> bins)
    : policy_(policy),
      rows_per_subarray_(g.rows_per_subarray),
      words_((g.cols_per_subarray + 63) / 64) {
  if (bins.size() > bin_capacity(policy, g)) {
    throw CapacityError("reference does not fit the " + std::string(to_string(policy)) +
                        " layout");
  }
  const std::uint32_t binsets = iteration_count(bins.size(), g);
  std::vector<std::uint64_t> scratch(std::size_t{kTokenCount} * words_);
  for (std::uint32_t b = 0; b < binsets; ++b) {
    std::fill(scratch.begin(), scratch.end(), 0);
    const std::uint64_t first = std::uint64_t{b} * g.cols_per_subarray;
    const std::uint64_t last = std::min<std::uint64_t>(first + g.cols_per_subarray, bins.size());
    for (std::uint64_t k = first; k < last; ++k) {
      const std::uint64_t col = k - first;
      const auto& bits = bins[k].bits;
      for (std::size_t j = 0; j < kTokenCount; ++j) {
        if (bits.test(j)) scratch[j * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
      }
    }
    for (std::uint32_t j = 0; j < kTokenCount; ++j) {
      const auto begin = scratch.begin() + static_cast<std::ptrdiff_t>(j * words_);
      if (std::all_of(begin, begin + static_cast<std::ptrdiff_t>(words_),
                      [](std::uint64_t w) { return w == 0; })) {
        continue;
      }
      const PhysicalAddress phys = map_address(policy, {first, TokenIndex(j)}, g);
      slots_[row_key(phys.subarray, phys.row, rows_per_subarray_)] = data_.size();
      data_.insert(data_.end(), begin, begin + static_cast<std::ptrdiff_t>(words_));
    }
  }
}

const std::uint64_t* RowStore::row(PhysicalAddress addr) const {
  const auto it = slots_.find(row_key(addr.subarray, addr.row, rows_per_subarray_));
  return it == slots_.end() ? nullptr : data_.data() + it->second;
}

FilterVerdict replay_verdict(const AccessTrace& trace, const RowStore& store,
                             const DeviceGeometry& g, std::uint64_t bin_count,
                             std::uint32_t threshold, std::uint64_t read_id) {
  FilterVerdict v;
  v.read_id = read_id;
  v.threshold = threshold;
  v.scores.assign(bin_count, 0);
  const std::size_t words = store.words_per_row();
  for (const TraceEvent& e : trace.events) {
    const std::uint64_t* row = store.row(e.address);
    if (row == nullptr) continue;
    const std::uint64_t first = std::uint64_t{e.iteration} * g.cols_per_subarray;
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
        const std::uint64_t bin = first + w * 64 + static_cast<unsigned>(std::countr_zero(bits));
        if (bin < bin_count) v.scores[bin] += e.weight;
      }
    }
  }
  select_bins(v);
  return v;
}

ConfigSimulator::ConfigSimulator(const Configuration& config, const DeviceGeometry& base,
                                 const CostParams& cost, std::uint64_t bin_count)
    : config_(config),
      geometry_(geometry_for(config, base)),
      engine_(geometry_, config.technology == Technology::Rtm ? config.port_policy
                                                              : PortPolicy::OnDemand,
              populated_extent(config.mapping, geometry_, bin_count)),
      scheduler_(config.technology, cost.timing(config.technology), geometry_.subarrays) {}

ReadCost ConfigSimulator::run(const AccessTrace& trace, std::vector<ShiftEvent>* events) {
  ReadCost cost;
  scheduler_.clear();
  const bool rtm = config_.technology == Technology::Rtm;
  std::vector<ShiftEvent>* sink = events;
  if (sink == nullptr) {
    scratch_.clear();
    sink = &scratch_;
  }
  for (const TraceEvent& e : trace.events) {
    AccessShift s;
    if (rtm) s = engine_.access_row(e.address, sink);
    scheduler_.submit({e.address.subarray, OpKind::RowAccess, s.visible_steps, s.hidden_steps});
  }
  if (rtm) {
    for (const ShiftEvent& r : engine_.end_of_read_reset()) {
      const auto steps = static_cast<std::uint32_t>(r.distance < 0 ? -r.distance : r.distance);
      scheduler_.submit({r.subarray, OpKind::Reset, r.hidden ? 0u : steps, r.hidden ? steps : 0u});
      sink->push_back(r);
    }
  }
  cost.cycles = scheduler_.makespan();
  cost.row_accesses = scheduler_.row_accesses();
  cost.shifts = total_shifts(*sink);
  return cost;
}

ExperimentResult run_experiment(std::span<const Configuration> configs,
                                std::span<const BinVector> bins,
                                std::span<const QueryRead> reads, const SimParameters& params,
                                const ExperimentOptions& options) {
  if (configs.empty()) throw std::invalid_argument("no configurations");
  ExperimentResult result;
  result.bin_count = bins.size();
  result.iterations = iteration_count(bins.size(), params.geometry);

  std::vector<ConfigSimulator> sims;
  sims.reserve(configs.size());
  for (const Configuration& c : configs) {
    if (bins.size() > bin_capacity(c.mapping, params.geometry)) {
      throw CapacityError(std::to_string(bins.size()) + " bins exceed the " + c.name +
                          " layout capacity of " +
                          std::to_string(bin_capacity(c.mapping, params.geometry)));
    }
    sims.emplace_back(c, params.geometry, params.cost, bins.size());
  }

  const std::size_t checked = std::min(options.verdict_check_reads, reads.size());
  std::map<MappingPolicy, std::unique_ptr<RowStore>> stores;
  if (checked > 0) {
    for (const Configuration& c : configs) {
      if (!stores.contains(c.mapping)) {
        stores[c.mapping] = std::make_unique<RowStore>(c.mapping, params.geometry, bins);
      }
    }
  }

  std::vector<ReadCost> totals(configs.size());
  AccessTrace trace;
  std::vector<ShiftEvent> events;

  for (std::size_t r = 0; r < reads.size(); ++r) {
    const ReadProfile profile = profile_read(reads[r]);
    if (profile.occurrences.empty()) result.unfilterable_reads.push_back(profile.read_id);

    FilterVerdict expected;
    const bool check = r < checked;
    if (check) {
      expected = score_bins(profile.counts, bins, options.threshold, profile.read_id);
      result.selected_bins_total += expected.selected_bins.size();
    }

    for (std::size_t c = 0; c < configs.size(); ++c) {
      build_trace(profile, configs[c], sims[c].geometry(), bins.size(), trace);
      events.clear();
      const ReadCost cost = sims[c].run(trace, &events);
      totals[c].cycles += cost.cycles;
      totals[c].row_accesses += cost.row_accesses;
      totals[c].shifts += cost.shifts;
      if (options.histogram != nullptr && configs[c].name == options.histogram_config) {
        options.histogram->add(events);
      }
      if (check) {
        const FilterVerdict got =
            replay_verdict(trace, *stores.at(configs[c].mapping), sims[c].geometry(),
                           bins.size(), options.threshold, profile.read_id);
        if (got != expected) {
          throw VerdictMismatch("read " + std::to_string(profile.read_id) + ": " +
                                configs[c].name + " selects " +
                                std::to_string(got.selected_bins.size()) +
                                " bins, filter core selects " +
                                std::to_string(expected.selected_bins.size()));
        }
      }
    }
    if (check) {
      ++result.verdicts_checked;
      if (options.keep_verdicts) result.verdicts.push_back(std::move(expected));
    }
  }

  for (std::size_t c = 0; c < configs.size(); ++c) {
    const Configuration& cfg = configs[c];
    CostReport rep;
    rep.config = cfg.name;
    rep.technology = cfg.technology;
    rep.ports = cfg.ports;
    rep.reads = reads.size();
    rep.unfilterable_reads = result.unfilterable_reads.size();
    rep.row_accesses = totals[c].row_accesses;
    rep.total_cycles = totals[c].cycles;
    rep.shifts = totals[c].shifts;
    const WorkCounts work{rep.row_accesses, rep.row_accesses, rep.shifts.total(),
                          rep.total_cycles};
    rep.energy = energy(cfg.technology, cfg.ports, work, params.geometry.cols_per_subarray,
                        params.cost);
    result.reports.push_back(std::move(rep));
  }
  const bool has_baseline =
      std::any_of(result.reports.begin(), result.reports.end(),
                  [&](const CostReport& r) { return r.config == options.baseline; });
  normalize(result.reports, has_baseline ? options.baseline : result.reports.front().config);
  return result;
}

}  // namespace firm
