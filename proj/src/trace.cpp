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

#include "firm/trace.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "firm/errors.hpp"

namespace firm {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

Configuration make_configuration(std::string_view name) {
  const std::string n = upper(name);
  if (n == "GRIM") {
    return {"GRIM", MappingPolicy::Dram, PortPolicy::OnDemand, Technology::Dram,
            AccessOrdering::OccurrenceOrder, 1};
  }
  if (n == "ALPHA") {
    return {"ALPHA", MappingPolicy::Dram, PortPolicy::OnDemand, Technology::Dram,
            AccessOrdering::SortedDistinct, 1};
  }
  if (n == "ALPHA-RTM") {
    return {"ALPHA-RTM", MappingPolicy::Alpha, PortPolicy::OnDemand, Technology::Rtm,
            AccessOrdering::SortedDistinct, 1};
  }
  if (n == "FIRM") {
    return {"FIRM", MappingPolicy::Firm, PortPolicy::OnDemand, Technology::Rtm,
            AccessOrdering::SortedDistinct, 1};
  }
  if (n == "FIRMPR") {
    return {"FIRMPR", MappingPolicy::Firm, PortPolicy::Preshift, Technology::Rtm,
            AccessOrdering::SortedDistinct, 1};
  }
  if (n == "FIRMUS") {
    return {"FIRMUS", MappingPolicy::Firm, PortPolicy::CircularTwoPort, Technology::Rtm,
            AccessOrdering::SortedDistinct, 2};
  }
  throw std::invalid_argument("unknown configuration '" + std::string(name) + "'");
}

std::vector<Configuration> parse_configurations(std::string_view list) {
  std::vector<Configuration> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    std::string_view item = list.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      Configuration c = make_configuration(item);
      const bool dup = std::any_of(out.begin(), out.end(),
                                   [&](const Configuration& o) { return o.name == c.name; });
      if (dup) throw std::invalid_argument("configuration listed twice: " + c.name);
      out.push_back(std::move(c));
    }
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("no configurations given");
  return out;
}

std::vector<Configuration> all_configurations() {
  return parse_configurations("GRIM,ALPHA,ALPHA-RTM,FIRM,FIRMPR,FIRMUS");
}

DeviceGeometry geometry_for(const Configuration& c, const DeviceGeometry& base) {
  DeviceGeometry g = base;
  g.technology = c.technology;
  g.ports_per_track = c.ports;
  g.validate();
  return g;
}

ReadProfile profile_read(const QueryRead& read) {
  ReadProfile p;
  p.read_id = read.read_id;
  p.occurrences = tokenize(read.sequence);
  for (TokenIndex t : p.occurrences) p.counts.add(t);
  p.distinct = p.counts.distinct();
  return p;
}

std::uint32_t iteration_count(std::uint64_t bin_count, const DeviceGeometry& g) {
  return static_cast<std::uint32_t>((bin_count + g.cols_per_subarray - 1) / g.cols_per_subarray);
}

void build_trace(const ReadProfile& read, const Configuration& config, const DeviceGeometry& g,
                 std::uint64_t bin_count, AccessTrace& out) {
  out.events.clear();
  out.iterations = iteration_count(bin_count, g);
  if (bin_count > bin_capacity(config.mapping, g)) {
    throw CapacityError(std::to_string(bin_count) + " bins exceed the " + config.name +
                        " layout capacity of " +
                        std::to_string(bin_capacity(config.mapping, g)));
  }
  const bool by_occurrence = config.ordering == AccessOrdering::OccurrenceOrder;
  const std::vector<TokenIndex>& order = by_occurrence ? read.occurrences : read.distinct;
  out.events.reserve(std::size_t{out.iterations} * order.size());
  for (std::uint32_t it = 0; it < out.iterations; ++it) {
    const std::uint64_t first_bin = std::uint64_t{it} * g.cols_per_subarray;
    for (TokenIndex t : order) {
      out.events.push_back({read.read_id, it, map_address(config.mapping, {first_bin, t}, g),
                            by_occurrence ? 1u : read.counts[t.value()]});
    }
  }
}

AccessTrace build_trace(const ReadProfile& read, const Configuration& config,
                        const DeviceGeometry& g, std::uint64_t bin_count) {
  AccessTrace t;
  build_trace(read, config, g, bin_count, t);
  return t;
}

ExtentFn populated_extent(MappingPolicy mapping, const DeviceGeometry& g,
                          std::uint64_t bin_count) {
  const std::uint64_t binsets = iteration_count(bin_count, g);
  const std::uint32_t length = g.domains_per_track;
  auto clamp_to_vgroup = [length](std::uint64_t rows, std::uint32_t vgroup) -> std::uint32_t {
    const std::uint64_t below = std::uint64_t{vgroup} * length;
    if (rows <= below) return 0;
    return static_cast<std::uint32_t>(std::min<std::uint64_t>(rows - below, length));
  };
  if (mapping == MappingPolicy::Firm) {
    const std::uint64_t groups = g.token_groups();
    return [=](std::uint32_t subarray, std::uint32_t vgroup) {
      const std::uint64_t group = subarray / kTokenCount;
      const std::uint64_t rows = binsets > group ? (binsets - group + groups - 1) / groups : 0;
      return clamp_to_vgroup(rows, vgroup);
    };
  }
  const std::uint64_t token_rows = std::min<std::uint64_t>(kTokenCount, g.rows_per_subarray);
  return [=](std::uint32_t subarray, std::uint32_t vgroup) {
    return clamp_to_vgroup(subarray < binsets ? token_rows : 0, vgroup);
  };
}

}  // namespace firm
