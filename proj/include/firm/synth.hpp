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

#ifndef FIRM_SYNTH_HPP
#define FIRM_SYNTH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace firm {

/// Parameters of the synthetic reference. The defaults give a human-like
/// sequence: AT-rich, CpG-depleted, about a third interspersed repeat copies
/// and a few percent microsatellites.
struct SynthOptions {
  std::uint64_t length = 1'000'000;
  std::uint64_t seed = 1;
  double gc_content = 0.41;
  double cpg_retention = 0.25;    // P(G | C) relative to the unbiased chain
  double repeat_fraction = 0.30;  // share of bases inside repeat copies
  double repeat_divergence = 0.12;
  std::uint32_t repeat_families = 16;
  double microsatellite_fraction = 0.03;
};

std::string synth_reference(const SynthOptions& options);

struct ReadSampleOptions {
  std::size_t count = 1000;
  std::size_t read_size = 100;
  std::uint64_t seed = 2;
  double error_rate = 0.02;       // per-base substitution probability
  double random_fraction = 0.1;   // reads drawn uniformly instead of from the reference
};

std::vector<std::string> sample_reads(const std::string& reference,
                                      const ReadSampleOptions& options);

/// Shannon entropy in bits of the overlapping 4-mer distribution (max 8).
double kmer4_entropy(const std::string& seq);

void write_fasta(std::ostream& out, const std::string& name, const std::string& seq,
                 std::size_t width = 60);
void write_fastq(std::ostream& out, std::span<const std::string> reads,
                 const std::string& prefix = "read");

}  // namespace firm

#endif  // FIRM_SYNTH_HPP
