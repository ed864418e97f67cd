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

#include "firm/report.hpp"

#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace firm {

namespace {

double category(const EnergyBreakdown& e, std::size_t i) {
  const double values[] = {e.activation, e.read,       e.io,
                           e.shift,      e.background, e.accelerator_dynamic,
                           e.accelerator_leakage};
  return values[i];
}

constexpr std::size_t kCategoryCount = std::size(kEnergyCategories);

}  // namespace

void write_report_json(std::ostream& out, const ExperimentResult& result,
                       const SimParameters& params, std::uint32_t threshold) {
  using nlohmann::ordered_json;
  const DeviceGeometry& g = params.geometry;
  ordered_json doc;
  doc["threshold"] = threshold;
  doc["bins"] = result.bin_count;
  doc["iterations_per_read"] = result.iterations;
  doc["geometry"] = {{"subarrays", g.subarrays},
                     {"rows_per_subarray", g.rows_per_subarray},
                     {"cols_per_subarray", g.cols_per_subarray},
                     {"tracks_per_group", g.tracks_per_group},
                     {"domains_per_track", g.domains_per_track}};
  doc["baseline"] = result.reports.empty() ? "" : result.reports.front().baseline;
  doc["verdicts"] = {{"checked_reads", result.verdicts_checked},
                     {"selected_bins", result.selected_bins_total},
                     {"unfilterable_reads", result.unfilterable_reads.size()}};
  ordered_json configs = ordered_json::array();
  for (const CostReport& r : result.reports) {
    ordered_json e;
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
      e[kEnergyCategories[i]] = category(r.energy, i);
    }
    e["total"] = r.energy.total();
    configs.push_back({{"name", r.config},
                       {"technology", std::string(to_string(r.technology))},
                       {"ports", r.ports},
                       {"reads", r.reads},
                       {"row_accesses", r.row_accesses},
                       {"cycles", r.total_cycles},
                       {"shifts",
                        {{"visible", r.shifts.visible},
                         {"hidden", r.shifts.hidden},
                         {"reset", r.shifts.reset},
                         {"total", r.shifts.total()}}},
                       {"energy_pj", e},
                       {"normalized", {{"runtime", r.normalized_runtime},
                                       {"energy", r.normalized_energy}}}});
  }
  doc["configs"] = configs;
  out << doc.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, std::span<const CostReport> reports) {
  out << "config,technology,ports,reads,row_accesses,cycles,shifts_visible,shifts_hidden,"
         "shifts_reset,shifts_total";
  for (const char* c : kEnergyCategories) out << ",energy_" << c << "_pj";
  out << ",energy_total_pj,baseline,normalized_runtime,normalized_energy\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const CostReport& r : reports) {
    out << r.config << ',' << to_string(r.technology) << ',' << r.ports << ',' << r.reads << ','
        << r.row_accesses << ',' << r.total_cycles << ',' << r.shifts.visible << ','
        << r.shifts.hidden << ',' << r.shifts.reset << ',' << r.shifts.total();
    for (std::size_t i = 0; i < kCategoryCount; ++i) out << ',' << category(r.energy, i);
    out << ',' << r.energy.total() << ',' << r.baseline << ',' << r.normalized_runtime << ','
        << r.normalized_energy << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace firm
