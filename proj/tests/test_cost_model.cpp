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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "firm/cost_model.hpp"

using namespace firm;

namespace {

constexpr std::uint32_t kRowBits = 4096;

ScheduleOp access(std::uint32_t subarray, std::uint32_t visible = 0, std::uint32_t hidden = 0) {
  return {subarray, OpKind::RowAccess, visible, hidden};
}

}  // namespace

TEST_CASE("timing presets") {
  const auto d = TimingParams::dram();
  CHECK(d.tRAS == 20);
  CHECK(d.tRCD == 8);
  CHECK(d.tRP == 8);
  CHECK(d.tCAS == 8);
  CHECK(d.tWR == 8);
  const auto r = TimingParams::rtm();
  CHECK(r.tRAS == 9);
  CHECK(r.tRCD == 4);
  CHECK(r.tCAS == 4);
  CHECK(r.tWR == 4);
  CHECK(r.shift_cycles_per_step == 2);
}

TEST_CASE("row access latency") {
  CHECK(row_access_latency(Technology::Dram, TimingParams::dram(), 0) == 28);
  CHECK(row_access_latency(Technology::Dram, TimingParams::dram(), 5) == 28);
  CHECK(row_access_latency(Technology::Rtm, TimingParams::rtm(), 0) == 9);
  CHECK(row_access_latency(Technology::Rtm, TimingParams::rtm(), 1) == 11);
  CHECK(row_access_latency(Technology::Rtm, TimingParams::rtm(), 18) == 45);
}

TEST_CASE("schedule examples") {
  const auto rtm = TimingParams::rtm();
  SUBCASE("serialized in one subarray") {
    const std::vector<ScheduleOp> ops = {access(0, 2), access(0, 5), access(0, 3), access(0, 18)};
    CHECK(schedule(ops, Technology::Rtm, rtm, 1) == 92);
  }
  SUBCASE("pipelined over four subarrays") {
    const std::vector<ScheduleOp> ops = {access(0), access(1), access(2), access(3)};
    CHECK(schedule(ops, Technology::Rtm, rtm, 4) == 12);
  }
  SUBCASE("empty") {
    CHECK(schedule(std::vector<ScheduleOp>{}, Technology::Rtm, rtm, 4) == 0);
  }
  SUBCASE("dram serialization") {
    const std::vector<ScheduleOp> ops = {access(0), access(0), access(0)};
    CHECK(schedule(ops, Technology::Dram, TimingParams::dram(), 1) == 84);
  }
}

TEST_CASE("hidden shifts and resets") {
  const auto rtm = TimingParams::rtm();
  SUBCASE("hidden steps delay only the subarray that shifts") {
    // Subarray 0 shifts 3 steps after its first access (done at 9): ready at 15.
    Scheduler s(Technology::Rtm, rtm, 2);
    s.submit(access(0));
    s.submit(access(1));
    s.submit(access(0, 0, 3));
    CHECK(s.makespan() == 24);
    CHECK(s.row_accesses() == 3);
  }
  SUBCASE("visible reset takes an issue slot and extends the makespan") {
    Scheduler s(Technology::Rtm, rtm, 1);
    s.submit(access(0, 4));
    s.submit({0, OpKind::Reset, 4, 0});
    CHECK(s.makespan() == 17 + 8);
    CHECK(s.row_accesses() == 1);
  }
  SUBCASE("hidden reset is free of issue slots and of the makespan") {
    Scheduler s(Technology::Rtm, rtm, 2);
    s.submit(access(0, 4));
    s.submit({0, OpKind::Reset, 0, 4});
    CHECK(s.makespan() == 17);
    // Rows are accumulated in issue order, so this one waits for cycle 18.
    s.submit(access(1));
    CHECK(s.makespan() == 18);
  }
  SUBCASE("clear starts the next read from idle") {
    Scheduler s(Technology::Rtm, rtm, 2);
    s.submit(access(0, 10));
    s.clear();
    s.submit(access(0));
    CHECK(s.makespan() == 9);
  }
}

TEST_CASE("makespan lower bounds hold on random schedules") {
  std::mt19937_64 rng(41);
  const auto rtm = TimingParams::rtm();
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t subarrays = 1 + trial % 16;
    std::vector<ScheduleOp> ops;
    std::vector<std::uint64_t> busy(subarrays, 0);
    const int n = 1 + static_cast<int>(rng() % 200);
    for (int i = 0; i < n; ++i) {
      const auto s = static_cast<std::uint32_t>(rng() % subarrays);
      const auto v = static_cast<std::uint32_t>(rng() % 4);
      ops.push_back(access(s, v));
      busy[s] += row_access_latency(Technology::Rtm, rtm, v);
    }
    const auto m = schedule(ops, Technology::Rtm, rtm, subarrays);
    CHECK(m >= *std::max_element(busy.begin(), busy.end()));
    CHECK(m >= static_cast<std::uint64_t>(n));
  }
}

TEST_CASE("single-access energy") {
  const CostParams p;
  SUBCASE("dram row access") {
    const auto e = energy(Technology::Dram, 1, {1, 0, 0, 0}, kRowBits, p);
    CHECK(e.activation == doctest::Approx(1964.0));
    CHECK(e.read == doctest::Approx(5120.0));
    CHECK(e.io == doctest::Approx(1638.4));
    CHECK(e.activation + e.read + e.io == doctest::Approx(8722.4));
    CHECK(e.shift == 0);
  }
  SUBCASE("rtm one-port read with one shift") {
    const auto e = energy(Technology::Rtm, 1, {1, 0, 1, 0}, kRowBits, p);
    CHECK(e.read == doctest::Approx(2650.112));
    CHECK(e.shift == doctest::Approx(946.176));
    CHECK(e.read + e.shift == doctest::Approx(3596.3).epsilon(1e-4));
    CHECK(e.activation == 0);
  }
  SUBCASE("rtm two-port read uses the two-port column") {
    const auto e = energy(Technology::Rtm, 2, {1, 0, 0, 1000}, kRowBits, p);
    CHECK(e.read == doctest::Approx(4096 * 0.692));
    CHECK(e.background == doctest::Approx(208.0 * 1000));
  }
  SUBCASE("idle runtime costs background and leakage only") {
    const auto e = energy(Technology::Rtm, 1, {0, 0, 0, 500}, kRowBits, p);
    CHECK(e.background == doctest::Approx(193.0 * 500));
    CHECK(e.accelerator_leakage == doctest::Approx(16.4 * 500));
    CHECK(e.total() == doctest::Approx(e.background + e.accelerator_leakage));
  }
  SUBCASE("accelerator charges per accumulated row") {
    const auto e = energy(Technology::Dram, 1, {0, 3, 0, 0}, kRowBits, p);
    CHECK(e.accelerator_dynamic == doctest::Approx(3 * 1785.0));
  }
  CHECK_THROWS(energy(Technology::Rtm, 3, {}, kRowBits, p));
}

TEST_CASE("energy is additive and non-negative") {
  std::mt19937_64 rng(43);
  const CostParams p;
  for (int trial = 0; trial < 100; ++trial) {
    const WorkCounts a{rng() % 1000, rng() % 1000, rng() % 1000, rng() % 100000};
    const WorkCounts b{rng() % 1000, rng() % 1000, rng() % 1000, rng() % 100000};
    const WorkCounts sum{a.row_accesses + b.row_accesses, a.rows_accumulated + b.rows_accumulated,
                         a.shift_steps + b.shift_steps, a.cycles + b.cycles};
    for (auto tech : {Technology::Dram, Technology::Rtm}) {
      const auto ea = energy(tech, 1, a, kRowBits, p);
      const auto eb = energy(tech, 1, b, kRowBits, p);
      const auto es = energy(tech, 1, sum, kRowBits, p);
      CHECK(es.total() == doctest::Approx(ea.total() + eb.total()));
      for (double c : {es.activation, es.read, es.io, es.shift, es.background,
                       es.accelerator_dynamic, es.accelerator_leakage}) {
        CHECK(c >= 0);
      }
    }
  }
}

TEST_CASE("hidden shifts change latency, not energy") {
  const auto rtm = TimingParams::rtm();
  const CostParams p;
  // The same three accesses with the middle shift either visible or hidden.
  const std::vector<ScheduleOp> visible = {access(0), access(1), access(0, 3)};
  const std::vector<ScheduleOp> hidden = {access(0), access(1), access(0, 0, 3)};
  const auto cv = schedule(visible, Technology::Rtm, rtm, 2);
  const auto ch = schedule(hidden, Technology::Rtm, rtm, 2);
  CHECK(ch <= cv);
  const auto ev = energy(Technology::Rtm, 1, {3, 3, 3, cv}, kRowBits, p);
  const auto eh = energy(Technology::Rtm, 1, {3, 3, 3, ch}, kRowBits, p);
  CHECK(ev.read == eh.read);
  CHECK(ev.shift == eh.shift);
  CHECK(ev.io == eh.io);
}

TEST_CASE("normalize") {
  std::vector<CostReport> reports(2);
  reports[0].config = "GRIM";
  reports[0].total_cycles = 200;
  reports[0].energy.read = 1000;
  reports[1].config = "FIRM";
  reports[1].total_cycles = 50;
  reports[1].energy.read = 250;
  reports[1].energy.shift = 50;
  normalize(reports, "GRIM");
  CHECK(reports[0].normalized_runtime == doctest::Approx(1.0));
  CHECK(reports[1].normalized_runtime == doctest::Approx(0.25));
  CHECK(reports[1].normalized_energy == doctest::Approx(0.3));
  CHECK(reports[1].baseline == "GRIM");
  CHECK_THROWS(normalize(reports, "ALPHA"));
}
