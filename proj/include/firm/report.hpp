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

#ifndef FIRM_REPORT_HPP
#define FIRM_REPORT_HPP

#include <iosfwd>
#include <span>
#include <string>

#include "firm/config_file.hpp"
#include "firm/experiment.hpp"

namespace firm {

// Energy categories, in the order they appear in every report.
inline constexpr const char* kEnergyCategories[] = {
    "activation", "read", "io", "shift", "background", "accelerator_dynamic", "accelerator_leakage"};

void write_report_json(std::ostream& out, const ExperimentResult& result,
                       const SimParameters& params, std::uint32_t threshold);
void write_report_csv(std::ostream& out, std::span<const CostReport> reports);

}  // namespace firm

#endif  // FIRM_REPORT_HPP
