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

#ifndef FIRM_TRACE_HPP
#define FIRM_TRACE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "firm/filter_core.hpp"
#include "firm/memory_model.hpp"
#include "firm/shift_engine.hpp"

namespace firm {

enum class AccessOrdering {
  OccurrenceOrder,  // one row access per token window, in read order
  SortedDistinct,   // one row access per distinct token, ascending index
};

/// One of the six compared architectures.
struct Configuration {
  std::string name;
  MappingPolicy mapping = MappingPolicy::Dram;
  PortPolicy port_policy = PortPolicy::OnDemand;
  Technology technology = Technology::Dram;
  AccessOrdering ordering = AccessOrdering::SortedDistinct;
  std::uint32_t ports = 1;
};

/// GRIM, ALPHA, ALPHA-RTM, FIRM, FIRMPR, FIRMUS (case-insensitive).
/// Throws std::invalid_argument for anything else.
Configuration make_configuration(std::string_view name);
std::vector<Configuration> parse_configurations(std::string_view comma_separated);
std::vector<Configuration> all_configurations();

/// `base` with the configuration's technology and port count applied.
DeviceGeometry geometry_for(const Configuration& c, const DeviceGeometry& base);

/// Tokens of one read in both orders the traces need.
struct ReadProfile {
  std::uint64_t read_id = 0;
  std::vector<TokenIndex> occurrences;
  CountBuffer counts;
  std::vector<TokenIndex> distinct;
};

ReadProfile profile_read(const QueryRead& read);

struct TraceEvent {
  std::uint64_t read_id = 0;
  std::uint32_t iteration = 0;  // binset index
  PhysicalAddress address;      // column 0 of the accessed row
  std::uint32_t weight = 0;
};

struct AccessTrace {
  std::uint32_t iterations = 0;
  std::vector<TraceEvent> events;
};

/// ceil(bin_count / cols_per_subarray).
std::uint32_t iteration_count(std::uint64_t bin_count, const DeviceGeometry& g);

/// Fills `out` with the row accesses of one read against `bin_count`
/// reference bins. Every iteration repeats the same token order. A read
/// without any valid token window yields an empty trace.
void build_trace(const ReadProfile& read, const Configuration& config, const DeviceGeometry& g,
                 std::uint64_t bin_count, AccessTrace& out);
AccessTrace build_trace(const ReadProfile& read, const Configuration& config,
                        const DeviceGeometry& g, std::uint64_t bin_count);

/// Populated rows of each (subarray, vgroup) region under `mapping` when
/// `bin_count` bins are stored.
ExtentFn populated_extent(MappingPolicy mapping, const DeviceGeometry& g,
                          std::uint64_t bin_count);

}  // namespace firm

#endif  // FIRM_TRACE_HPP
