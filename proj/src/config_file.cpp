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

#include "firm/config_file.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>

#include "firm/errors.hpp"

namespace firm {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw FormatError("bad value '" + text + "' for " + key);
  }
  return value;
}

using Setter = std::function<void(SimParameters&, const std::string& key, const std::string&)>;

Setter u32(std::uint32_t DeviceGeometry::*field) {
  return [field](SimParameters& p, const std::string& k, const std::string& v) {
    p.geometry.*field = parse_number<std::uint32_t>(k, v);
  };
}

Setter timing(TimingParams CostParams::*which, std::uint32_t TimingParams::*field) {
  return [which, field](SimParameters& p, const std::string& k, const std::string& v) {
    (p.cost.*which).*field = parse_number<std::uint32_t>(k, v);
  };
}

Setter real(double EnergyParams::*field) {
  return [field](SimParameters& p, const std::string& k, const std::string& v) {
    p.cost.energy.*field = parse_number<double>(k, v);
  };
}

Setter real_at(double (EnergyParams::*field)[2], int index) {
  return [field, index](SimParameters& p, const std::string& k, const std::string& v) {
    (p.cost.energy.*field)[index] = parse_number<double>(k, v);
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    t["geometry.subarrays"] = u32(&DeviceGeometry::subarrays);
    t["geometry.rows_per_subarray"] = u32(&DeviceGeometry::rows_per_subarray);
    t["geometry.cols_per_subarray"] = u32(&DeviceGeometry::cols_per_subarray);
    t["geometry.tracks_per_group"] = u32(&DeviceGeometry::tracks_per_group);
    t["geometry.domains_per_track"] = u32(&DeviceGeometry::domains_per_track);
    for (const auto& [prefix, which] :
         {std::pair{"dram.", &CostParams::dram_timing}, std::pair{"rtm.", &CostParams::rtm_timing}}) {
      const std::string p = prefix;
      t[p + "tRAS"] = timing(which, &TimingParams::tRAS);
      t[p + "tRCD"] = timing(which, &TimingParams::tRCD);
      t[p + "tRP"] = timing(which, &TimingParams::tRP);
      t[p + "tCAS"] = timing(which, &TimingParams::tCAS);
      t[p + "tWR"] = timing(which, &TimingParams::tWR);
      t[p + "shift_cycles_per_step"] = timing(which, &TimingParams::shift_cycles_per_step);
    }
    t["dram.act_pre_pj"] = real(&EnergyParams::dram_act_pre_pj);
    t["dram.access_pj_per_bit"] = real(&EnergyParams::dram_access_pj_per_bit);
    t["dram.background_mw"] = real(&EnergyParams::dram_background_mw);
    t["io.pj_per_bit"] = real(&EnergyParams::io_pj_per_bit);
    t["rtm.read_pj_per_bit.1port"] = real_at(&EnergyParams::rtm_read_pj_per_bit, 0);
    t["rtm.read_pj_per_bit.2port"] = real_at(&EnergyParams::rtm_read_pj_per_bit, 1);
    t["rtm.background_mw.1port"] = real_at(&EnergyParams::rtm_background_mw, 0);
    t["rtm.background_mw.2port"] = real_at(&EnergyParams::rtm_background_mw, 1);
    t["rtm.shift_pj_per_bit"] = real(&EnergyParams::rtm_shift_pj_per_bit);
    t["accel.dynamic_pj_per_row"] = real(&EnergyParams::accel_dynamic_pj_per_row);
    t["accel.leakage_mw"] = real(&EnergyParams::accel_leakage_mw);
    t["clock_ghz"] = [](SimParameters& p, const std::string& k, const std::string& v) {
      p.cost.clock_ghz = parse_number<double>(k, v);
      if (p.cost.clock_ghz <= 0) throw FormatError("clock_ghz must be positive");
    };
    return t;
  }();
  return table;
}

}  // namespace

std::vector<std::string> apply_config(std::istream& in, SimParameters& params) {
  std::vector<std::string> applied;
  std::string line;
  std::string section;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw FormatError("bad section on line " + std::to_string(line_no));
      section = trim(std::string_view(text).substr(1, text.size() - 2));
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw FormatError("expected key = value on line " + std::to_string(line_no));
    }
    std::string key = trim(std::string_view(text).substr(0, eq));
    std::string value = trim(std::string_view(text).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (!section.empty()) key = section + "." + key;
    const auto it = setters().find(key);
    if (it == setters().end()) throw FormatError("unknown config key '" + key + "'");
    it->second(params, key, value);
    applied.push_back(key);
  }
  params.geometry.validate();
  return applied;
}

std::vector<std::string> apply_config_file(const std::string& path, SimParameters& params) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return apply_config(in, params);
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, _] : setters()) keys.push_back(k);
  return keys;
}

}  // namespace firm
