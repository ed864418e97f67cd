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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "firm/config_file.hpp"
#include "firm/errors.hpp"
#include "firm/experiment.hpp"
#include "firm/index_file.hpp"
#include "firm/oracle.hpp"
#include "firm/report.hpp"
#include "firm/synth.hpp"
#include "firm/trace.hpp"

using namespace firm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitCapacity = 3;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot create " + path);
  return out;
}

void print_summary(const ExperimentResult& r) {
  std::printf("%-10s %14s %16s %14s %14s %10s %10s\n", "config", "row_accesses", "cycles",
              "shifts", "energy_uJ", "norm_rt", "norm_en");
  for (const CostReport& c : r.reports) {
    std::printf("%-10s %14llu %16llu %14llu %14.3f %10.4f %10.4f\n", c.config.c_str(),
                static_cast<unsigned long long>(c.row_accesses),
                static_cast<unsigned long long>(c.total_cycles),
                static_cast<unsigned long long>(c.shifts.total()), c.energy.total() * 1e-6,
                c.normalized_runtime, c.normalized_energy);
  }
  std::printf("normalized to %s; %zu verdicts cross-checked; %zu unfilterable reads\n",
              r.reports.empty() ? "-" : r.reports.front().baseline.c_str(), r.verdicts_checked,
              r.unfilterable_reads.size());
}

// --- verify -----------------------------------------------------------------

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Check> oracle_suite(std::uint64_t seed) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed);

  {
    std::uint32_t ok = 0;
    for (std::uint32_t v = 0; v < kTokenCount; ++v) {
      ok += encode_token(decode_token(TokenIndex(v))).value() == v;
    }
    out.push_back({"token bijection", ok == kTokenCount, std::to_string(ok) + "/1024"});
  }

  {
    auto random_seq = [&](std::size_t n) {
      std::string s(n, 'A');
      for (char& c : s) c = "ACGT"[rng() % 4];
      return s;
    };
    std::size_t agree = 0;
    constexpr std::size_t kPairs = 200;
    for (std::size_t trial = 0; trial < kPairs; ++trial) {
      const std::string read = random_seq(100);
      std::vector<ReferenceBin> refs;
      for (std::uint64_t b = 0; b < 8; ++b) {
        std::string seq = random_seq(100);
        if (b % 2 == 0) seq.replace(rng() % 50, 50, read.substr(rng() % 50, 50));
        refs.push_back({b, NucleotideString(seq)});
      }
      const auto T = static_cast<std::uint32_t>(trial % 50);
      const auto core = score_bins(build_count_buffer(read), build_bin_vectors(refs), T, trial);
      agree += core == oracle_filter(read, refs, T, trial);
    }
    out.push_back({"filter core vs substring oracle", agree == kPairs,
                   std::to_string(agree) + "/" + std::to_string(kPairs) + " read/bin sets"});
  }

  {
    DeviceGeometry g{4, 32, 16, 8, 8};
    std::size_t agree = 0;
    constexpr std::size_t kTraces = 1000;
    for (std::size_t trial = 0; trial < kTraces; ++trial) {
      const auto policy = static_cast<PortPolicy>(trial % 3);
      g.ports_per_track = policy == PortPolicy::CircularTwoPort ? 2 : 1;
      std::vector<TraceEvent> trace;
      std::uint64_t read = 0;
      for (int i = 0; i < 100; ++i) {
        if (rng() % 25 == 0) ++read;
        trace.push_back({read, 0,
                         {static_cast<std::uint32_t>(rng() % g.subarrays),
                          static_cast<std::uint32_t>(rng() % g.rows_per_subarray), 0},
                         1});
      }
      ShiftEngine eng(g, policy);
      std::vector<ShiftEvent> ev;
      for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i > 0 && trace[i].read_id != trace[i - 1].read_id) {
          for (auto& e : eng.end_of_read_reset()) ev.push_back(e);
        }
        eng.access_row(trace[i].address, &ev);
      }
      for (auto& e : eng.end_of_read_reset()) ev.push_back(e);
      agree += oracle_shifts(trace, g, policy).total == total_shifts(ev).total();
    }
    out.push_back({"shift engine vs track replay", agree == kTraces,
                   std::to_string(agree) + "/" + std::to_string(kTraces) + " random traces"});
  }

  {
    const DeviceGeometry g;
    ShiftEngine eng(g, PortPolicy::OnDemand);
    std::vector<ShiftEvent> ev;
    for (const char* w : {"AAAAG", "AAACT", "AAAGG", "AACTA"}) {
      eng.access_row(map_alpha({0, encode_token(w)}, g), &ev);
    }
    const auto s = total_shifts(ev).total();
    out.push_back({"four-token ALPHA-RTM iteration", s == 28, std::to_string(s) + " shifts"});
  }

  {
    const CostParams p;
    const auto e = energy(Technology::Dram, 1, {1, 0, 0, 0}, 4096, p);
    const double mem = e.activation + e.read + e.io;
    const auto l0 = row_access_latency(Technology::Rtm, p.rtm_timing, 0);
    const auto l18 = row_access_latency(Technology::Rtm, p.rtm_timing, 18);
    const bool ok = std::abs(mem - 8722.4) < 1e-6 && l0 == 9 && l18 == 45 &&
                    row_access_latency(Technology::Dram, p.dram_timing, 0) == 28;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.1f pJ, %u/%u cycles", mem, l0, l18);
    out.push_back({"cost arithmetic", ok, buf});
  }
  return out;
}

// Filter verdicts on user data against the posting-list oracle.
Check data_check(const std::string& reference, const std::string& reads_path,
                 std::size_t bin_length, std::size_t read_size, std::size_t max_reads,
                 std::uint32_t threshold) {
  const auto refs = load_reference_file(reference, BinningOptions{bin_length, 0});
  const auto bins = build_bin_vectors(refs);
  const ReadSet rs = load_reads_file(reads_path, read_size, max_reads);
  const SubstringOracle oracle(refs);
  std::size_t agree = 0;
  for (const QueryRead& r : rs.reads) {
    agree += score_bins(build_count_buffer(r), bins, threshold, r.read_id) ==
             oracle.verdict(r.sequence.view(), threshold, r.read_id);
  }
  return {"filter core vs oracle on input data", agree == rs.reads.size(),
          std::to_string(agree) + "/" + std::to_string(rs.reads.size()) + " reads over " +
              std::to_string(bins.size()) + " bins"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"firm-sim: pre-alignment filter simulator for DRAM and racetrack memory"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value file overriding geometry and cost constants")
      ->check(CLI::ExistingFile);

  // index
  auto* index_cmd = app.add_subcommand("index", "Build the binary bin-vector index of a reference");
  std::string reference, index_out;
  std::size_t bin_length = kDefaultBinLength;
  std::size_t bin_overlap = 0;
  index_cmd->add_option("--reference", reference, "FASTA reference (optionally gzipped)")
      ->required();
  index_cmd->add_option("--out", index_out, "Index file to write")->required();
  index_cmd->add_option("--bin-length", bin_length, "Nucleotides per bin")
      ->check(CLI::Range(std::size_t{5}, std::size_t{1} << 20));
  index_cmd->add_option("--bin-overlap", bin_overlap, "Nucleotides shared by consecutive bins");

  // run
  auto* run_cmd = app.add_subcommand("run", "Simulate the filter under each configuration");
  std::string index_path, reads_path, configs = "GRIM,ALPHA,ALPHA-RTM,FIRM,FIRMPR,FIRMUS";
  std::string json_out, csv_out, histogram_out, histogram_config = "FIRM", baseline = "GRIM";
  std::uint32_t threshold = kDefaultThreshold;
  std::size_t max_reads = 0, read_size = kDefaultReadSize;
  std::size_t verdict_reads = std::numeric_limits<std::size_t>::max();
  std::size_t run_bin_length = 0;
  run_cmd->add_option("--index", index_path, "Index built by `firm-sim index`")->required();
  run_cmd->add_option("--reads", reads_path, "FASTQ reads (optionally gzipped)")->required();
  run_cmd->add_option("--configs", configs, "Comma-separated configurations")
      ->capture_default_str();
  run_cmd->add_option("--threshold", threshold, "Selection threshold T (score > T)")
      ->capture_default_str();
  run_cmd->add_option("--max-reads", max_reads, "Use only the first N reads (0 = all)");
  run_cmd->add_option("--read-size", read_size, "Read length; other lengths are skipped")
      ->capture_default_str();
  run_cmd->add_option("--bin-length", run_bin_length, "Expected bin length of the index");
  run_cmd->add_option("--baseline", baseline, "Configuration to normalize against")
      ->capture_default_str();
  run_cmd->add_option("--verdict-check", verdict_reads,
                      "Cross-check verdicts of the first N reads (default: all)");
  run_cmd->add_option("--out", json_out, "JSON report");
  run_cmd->add_option("--csv", csv_out, "CSV report");
  run_cmd->add_option("--shift-histogram", histogram_out, "Per-subarray shift histogram CSV");
  run_cmd->add_option("--histogram-config", histogram_config, "Configuration to histogram")
      ->capture_default_str();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle suite");
  std::string verify_ref, verify_reads;
  std::uint64_t verify_seed = 1;
  verify_cmd->add_option("--reference", verify_ref, "Also check verdicts on this reference");
  verify_cmd->add_option("--reads", verify_reads, "... against these reads");
  verify_cmd->add_option("--bin-length", bin_length, "Nucleotides per bin");
  verify_cmd->add_option("--read-size", read_size, "Read length");
  verify_cmd->add_option("--max-reads", max_reads, "Use only the first N reads (0 = all)");
  verify_cmd->add_option("--threshold", threshold, "Selection threshold T");
  verify_cmd->add_option("--seed", verify_seed, "Seed of the randomized checks");

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic reference and reads");
  SynthOptions so;
  ReadSampleOptions ro;
  std::string synth_fa, synth_fq;
  synth_cmd->add_option("--length", so.length, "Reference length")->capture_default_str();
  synth_cmd->add_option("--seed", so.seed, "Seed")->capture_default_str();
  synth_cmd->add_option("--reads", ro.count, "Number of reads")->capture_default_str();
  synth_cmd->add_option("--read-size", ro.read_size, "Read length")->capture_default_str();
  synth_cmd->add_option("--error-rate", ro.error_rate, "Per-base substitution rate")
      ->capture_default_str();
  synth_cmd->add_option("--random-fraction", ro.random_fraction,
                        "Share of reads not drawn from the reference")
      ->capture_default_str();
  synth_cmd->add_option("--fasta", synth_fa, "Reference output")->required();
  synth_cmd->add_option("--fastq", synth_fq, "Reads output")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    SimParameters params;
    if (!config_path.empty()) apply_config_file(config_path, params);

    if (*index_cmd) {
      const auto refs = load_reference_file(reference, BinningOptions{bin_length, bin_overlap});
      const auto bins = build_bin_vectors(refs);
      write_index_file(index_out, static_cast<std::uint32_t>(bin_length), bins);
      std::printf("indexed %zu bins of %zu nt into %s\n", bins.size(), bin_length,
                  index_out.c_str());
      return kExitOk;
    }

    if (*run_cmd) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto chosen = parse_configurations(configs);
      const BinIndex index = read_index_file(index_path);
      if (run_bin_length != 0 && run_bin_length != index.bin_length) {
        throw std::invalid_argument("index was built with bin length " +
                                    std::to_string(index.bin_length));
      }
      const ReadSet rs = load_reads_file(reads_path, read_size, max_reads);
      if (rs.skipped > 0) {
        std::fprintf(stderr, "skipped %zu reads whose length is not %zu\n", rs.skipped,
                     read_size);
      }
      ShiftHistogram histogram;
      ExperimentOptions opt;
      opt.threshold = threshold;
      opt.baseline = baseline;
      opt.verdict_check_reads = verdict_reads;
      if (!histogram_out.empty()) {
        opt.histogram = &histogram;
        opt.histogram_config = make_configuration(histogram_config).name;
      }
      const ExperimentResult result = run_experiment(chosen, index.bins, rs.reads, params, opt);
      if (!json_out.empty()) {
        auto out = open_out(json_out);
        write_report_json(out, result, params, threshold);
      }
      if (!csv_out.empty()) {
        auto out = open_out(csv_out);
        write_report_csv(out, result.reports);
      }
      if (!histogram_out.empty()) {
        auto out = open_out(histogram_out);
        histogram.write_csv(out);
      }
      print_summary(result);
      std::printf("%zu reads x %zu bins in %.1f s\n", rs.reads.size(), index.bins.size(),
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      return kExitOk;
    }

    if (*verify_cmd) {
      auto checks = oracle_suite(verify_seed);
      if (!verify_ref.empty() || !verify_reads.empty()) {
        if (verify_ref.empty() || verify_reads.empty()) {
          throw std::invalid_argument("--reference and --reads go together");
        }
        checks.push_back(
            data_check(verify_ref, verify_reads, bin_length, read_size, max_reads, threshold));
      }
      bool all = true;
      for (const Check& c : checks) {
        std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
        all = all && c.pass;
      }
      return all ? kExitOk : kExitMismatch;
    }

    if (*synth_cmd) {
      const std::string ref = synth_reference(so);
      {
        auto out = open_out(synth_fa);
        write_fasta(out, "synthetic", ref);
      }
      const auto reads = sample_reads(ref, ro);
      auto out = open_out(synth_fq);
      write_fastq(out, reads);
      std::printf("wrote %llu nt to %s and %zu reads to %s\n",
                  static_cast<unsigned long long>(ref.size()), synth_fa.c_str(), reads.size(),
                  synth_fq.c_str());
      return kExitOk;
    }
  } catch (const VerdictMismatch& e) {
    std::fprintf(stderr, "verdict mismatch: %s\n", e.what());
    return kExitMismatch;
  } catch (const CapacityError& e) {
    std::fprintf(stderr, "capacity error: %s\n", e.what());
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return kExitOk;
}
