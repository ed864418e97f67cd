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

#include "firm/oracle.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <tuple>

namespace firm {

namespace {

bool acgt_only(std::string_view w) {
  return w.find_first_not_of("ACGT") == std::string_view::npos;
}

FilterVerdict finish(std::vector<std::uint32_t> scores, std::uint32_t threshold,
                     std::uint64_t read_id) {
  FilterVerdict v;
  v.read_id = read_id;
  v.threshold = threshold;
  v.scores = std::move(scores);
  for (std::size_t k = 0; k < v.scores.size(); ++k) {
    if (v.scores[k] > threshold) v.selected_bins.push_back(k);
  }
  return v;
}

}  // namespace

FilterVerdict oracle_filter(std::string_view read, std::span<const ReferenceBin> bins,
                            std::uint32_t threshold, std::uint64_t read_id) {
  std::vector<std::uint32_t> scores(bins.size(), 0);
  for (std::size_t k = 0; k < bins.size(); ++k) {
    const std::string_view bin = bins[k].sequence.view();
    for (std::size_t i = 0; i + kTokenLength <= read.size(); ++i) {
      const std::string_view w = read.substr(i, kTokenLength);
      if (acgt_only(w) && bin.find(w) != std::string_view::npos) ++scores[k];
    }
  }
  return finish(std::move(scores), threshold, read_id);
}

SubstringOracle::SubstringOracle(std::span<const ReferenceBin> bins) : bin_count_(bins.size()) {
  for (std::size_t k = 0; k < bins.size(); ++k) {
    const std::string_view seq = bins[k].sequence.view();
    for (std::size_t i = 0; i + kTokenLength <= seq.size(); ++i) {
      const std::string_view w = seq.substr(i, kTokenLength);
      if (!acgt_only(w)) continue;
      auto& list = postings_[std::string(w)];
      if (list.empty() || list.back() != k) list.push_back(k);
    }
  }
}

FilterVerdict SubstringOracle::verdict(std::string_view read, std::uint32_t threshold,
                                       std::uint64_t read_id) const {
  std::vector<std::uint32_t> scores(bin_count_, 0);
  for (std::size_t i = 0; i + kTokenLength <= read.size(); ++i) {
    const auto it = postings_.find(std::string(read.substr(i, kTokenLength)));
    if (it == postings_.end()) continue;
    for (std::uint64_t k : it->second) ++scores[k];
  }
  return finish(std::move(scores), threshold, read_id);
}

namespace {

// One track group with its stored rows laid out domain by domain.
struct SimTrackGroup {
  std::vector<std::int64_t> domain_row;  // -1 = unused domain
  std::int64_t offset = 0;               // shift applied to the track
};

class TrackReplay {
 public:
  TrackReplay(const DeviceGeometry& g, PortPolicy policy, const ExtentFn& extent)
      : g_(g), policy_(policy), extent_(extent) {}

  std::uint64_t access(const PhysicalAddress& a) {
    const std::uint32_t length = g_.domains_per_track;
    const std::uint32_t vgroup = a.row / length;
    std::uint64_t moved = 0;
    // Every horizontal track group of the row moves; they move together, so
    // the row costs the distance once.
    for (std::uint32_t h = 0; h < g_.hgroups_per_row(); ++h) {
      SimTrackGroup& tg = group(a.subarray, vgroup, h);
      const std::int64_t target = find_offset(tg, a.row);
      const std::uint64_t d = static_cast<std::uint64_t>(std::llabs(target - tg.offset));
      if (h == 0) {
        moved = d;
      } else if (d != moved) {
        throw std::logic_error("track groups of one row out of lockstep");
      }
      tg.offset = target;
    }
    return moved;
  }

  std::uint64_t reset_all() {
    std::uint64_t steps = 0;
    for (auto& [key, tg] : groups_) {
      if (std::get<2>(key) == 0) steps += static_cast<std::uint64_t>(std::llabs(tg.offset));
      tg.offset = 0;
    }
    return steps;
  }

 private:
  using Key = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;

  SimTrackGroup& group(std::uint32_t s, std::uint32_t v, std::uint32_t h) {
    auto [it, inserted] = groups_.try_emplace(Key{s, v, h});
    if (inserted) it->second.domain_row = layout(s, v);
    return it->second;
  }

  std::vector<std::int64_t> layout(std::uint32_t s, std::uint32_t v) const {
    const std::uint32_t length = g_.domains_per_track;
    std::vector<std::int64_t> domains(length, -1);
    const std::int64_t base = std::int64_t{v} * length;
    if (policy_ != PortPolicy::CircularTwoPort) {
      for (std::uint32_t d = 0; d < length; ++d) domains[d] = base + d;
      return domains;
    }
    const std::uint32_t used = extent_ ? extent_(s, v) : length;
    const std::uint32_t first_half = (used + 1) / 2;
    // Port A reads the first half going forward; port B, half a track further
    // on, reads the second half stored back to front.
    for (std::uint32_t i = 0; i < first_half; ++i) domains[i] = base + i;
    for (std::uint32_t i = first_half; i < used; ++i) {
      domains[length / 2 + (used - 1 - i)] = base + i;
    }
    return domains;
  }

  std::int64_t find_offset(const SimTrackGroup& tg, std::uint32_t row) const {
    const std::int64_t length = g_.domains_per_track;
    std::vector<std::int64_t> ports{0};
    std::int64_t max_offset = length - 1;
    if (policy_ == PortPolicy::CircularTwoPort) {
      ports.push_back(length / 2);
      max_offset = length / 2 - 1;
    }
    std::int64_t best = -1;
    for (std::int64_t d = 0; d < length; ++d) {
      if (tg.domain_row[static_cast<std::size_t>(d)] != row) continue;
      for (std::int64_t p : ports) {
        const std::int64_t off = d - p;
        if (off < 0 || off > max_offset) continue;
        if (best < 0 || std::llabs(off - tg.offset) < std::llabs(best - tg.offset)) best = off;
      }
    }
    if (best < 0) throw std::out_of_range("row not stored in its track group");
    return best;
  }

  DeviceGeometry g_;
  PortPolicy policy_;
  const ExtentFn& extent_;
  std::map<Key, SimTrackGroup> groups_;
};

}  // namespace

OracleShiftCount oracle_shifts(std::span<const TraceEvent> trace, const DeviceGeometry& g,
                               PortPolicy policy, const ExtentFn& extent) {
  OracleShiftCount out;
  TrackReplay replay(g, policy, extent);
  bool any = false;
  std::uint64_t current_read = 0;
  for (const TraceEvent& e : trace) {
    if (any && e.read_id != current_read) {
      const std::uint64_t r = replay.reset_all();
      out.total += r;
      out.reset += r;
    }
    any = true;
    current_read = e.read_id;
    out.total += replay.access(e.address);
  }
  const std::uint64_t r = replay.reset_all();
  out.total += r;
  out.reset += r;
  return out;
}

}  // namespace firm
