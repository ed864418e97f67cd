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

#ifndef FIRM_CONFIG_FILE_HPP
#define FIRM_CONFIG_FILE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "firm/cost_model.hpp"
#include "firm/memory_model.hpp"

namespace firm {

/// Everything an experiment configuration file may override.
struct SimParameters {
  DeviceGeometry geometry;
  CostParams cost;
};

/**
 * Applies `key = value` lines to `params`. `#` starts a comment and a
 * `[section]` line prefixes the keys that follow with `section.`, so
 *
 *   [rtm]
 *   tRAS = 9
 *
 * is the same as `rtm.tRAS = 9`. Unknown keys and unparsable values throw
 * FormatError. Returns the keys that were applied, in file order.
 */
std::vector<std::string> apply_config(std::istream& in, SimParameters& params);
std::vector<std::string> apply_config_file(const std::string& path, SimParameters& params);

/// Every recognized key, for `--help`-style listings.
std::vector<std::string> config_keys();

}  // namespace firm

#endif  // FIRM_CONFIG_FILE_HPP
