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

#include "firm/synth.hpp"

#include <array>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

namespace firm {

namespace {

constexpr char kBases[4] = {'A', 'C', 'G', 'T'};

int base_code(char c) {
  switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
    default: return -1;
  }
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, 1) from the top 53 bits; identical on every platform.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * n); }

 private:
  std::mt19937_64 engine_;
};

// Order-2 Markov chain over {A,C,G,T}.
class BaseChain {
 public:
  BaseChain(const SynthOptions& o, Rng& rng) {
    const double at = (1.0 - o.gc_content) / 2.0;
    const double gc = o.gc_content / 2.0;
    for (int ctx = 0; ctx < 16; ++ctx) {
      std::array<double, 4> p = {at, gc, gc, at};
      for (double& x : p) x *= 0.8 + 0.4 * rng.uniform();
      if ((ctx & 3) == 1) p[2] *= o.cpg_retention;  // previous base C
      double sum = 0;
      for (double x : p) sum += x;
      double acc = 0;
      for (int b = 0; b < 4; ++b) {
        acc += p[b] / sum;
        cdf_[ctx][b] = acc;
      }
    }
  }

  char next(const std::string& seq, Rng& rng) const {
    int ctx = 0;
    if (seq.size() >= 2) {
      const int a = base_code(seq[seq.size() - 2]);
      const int b = base_code(seq[seq.size() - 1]);
      ctx = ((a < 0 ? 0 : a) << 2) | (b < 0 ? 0 : b);
    }
    const double u = rng.uniform();
    for (int b = 0; b < 3; ++b) {
      if (u < cdf_[ctx][b]) return kBases[b];
    }
    return kBases[3];
  }

 private:
  std::array<std::array<double, 4>, 16> cdf_{};
};

char mutate(char c, Rng& rng) {
  const int code = base_code(c);
  const int shift = 1 + static_cast<int>(rng.below(3));
  return kBases[(code + shift) & 3];
}

}  // namespace

std::string synth_reference(const SynthOptions& o) {
  if (o.length == 0) throw std::invalid_argument("synthetic reference length must be > 0");
  Rng rng(o.seed);
  const BaseChain chain(o, rng);

  std::vector<std::string> families;
  for (std::uint32_t f = 0; f < o.repeat_families; ++f) {
    std::string consensus;
    const std::uint64_t len = 150 + rng.below(350);
    while (consensus.size() < len) consensus.push_back(chain.next(consensus, rng));
    families.push_back(std::move(consensus));
  }

  std::string seq;
  seq.reserve(o.length);
  const double mean_repeat = 325.0;
  const double mean_micro = 50.0;
  // Per-base probability of starting an insert so that inserts cover the
  // requested fractions of the sequence on average.
  const double background = 1.0 - o.repeat_fraction - o.microsatellite_fraction;
  const double p_repeat = families.empty() ? 0.0 : o.repeat_fraction / (mean_repeat * background);
  const double p_micro = o.microsatellite_fraction / (mean_micro * background);

  while (seq.size() < o.length) {
    const double u = rng.uniform();
    if (u < p_repeat) {
      const std::string& fam = families[rng.below(families.size())];
      const std::uint64_t start = rng.below(fam.size() / 3);
      for (std::uint64_t i = start; i < fam.size() && seq.size() < o.length; ++i) {
        seq.push_back(rng.uniform() < o.repeat_divergence ? mutate(fam[i], rng) : fam[i]);
      }
    } else if (u < p_repeat + p_micro) {
      std::string unit;
      const std::uint64_t unit_len = 1 + rng.below(6);
      for (std::uint64_t i = 0; i < unit_len; ++i) unit.push_back(kBases[rng.below(4)]);
      const std::uint64_t total = 20 + rng.below(60);
      for (std::uint64_t i = 0; i < total && seq.size() < o.length; ++i) {
        seq.push_back(rng.uniform() < 0.05 ? mutate(unit[i % unit_len], rng) : unit[i % unit_len]);
      }
    } else {
      seq.push_back(chain.next(seq, rng));
    }
  }
  return seq;
}

std::vector<std::string> sample_reads(const std::string& reference,
                                      const ReadSampleOptions& o) {
  if (reference.size() < o.read_size) {
    throw std::invalid_argument("reference shorter than one read");
  }
  Rng rng(o.seed);
  std::vector<std::string> reads;
  reads.reserve(o.count);
  const std::uint64_t span = reference.size() - o.read_size + 1;
  while (reads.size() < o.count) {
    std::string r;
    if (rng.uniform() < o.random_fraction) {
      for (std::size_t i = 0; i < o.read_size; ++i) r.push_back(kBases[rng.below(4)]);
    } else {
      r = reference.substr(rng.below(span), o.read_size);
      if (r.find('N') != std::string::npos) continue;
      for (char& c : r) {
        if (rng.uniform() < o.error_rate) c = mutate(c, rng);
      }
    }
    reads.push_back(std::move(r));
  }
  return reads;
}

double kmer4_entropy(const std::string& seq) {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;
  std::uint32_t code = 0;
  std::size_t valid = 0;
  for (char c : seq) {
    const int b = base_code(c);
    if (b < 0) {
      valid = 0;
      continue;
    }
    code = ((code << 2) | static_cast<std::uint32_t>(b)) & 0xffu;
    if (++valid >= 4) {
      ++counts[code];
      ++total;
    }
  }
  double h = 0;
  for (std::uint64_t n : counts) {
    if (n == 0) continue;
    const double p = static_cast<double>(n) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

void write_fasta(std::ostream& out, const std::string& name, const std::string& seq,
                 std::size_t width) {
  out << '>' << name << '\n';
  for (std::size_t i = 0; i < seq.size(); i += width) out << seq.substr(i, width) << '\n';
}

void write_fastq(std::ostream& out, std::span<const std::string> reads,
                 const std::string& prefix) {
  for (std::size_t i = 0; i < reads.size(); ++i) {
    out << '@' << prefix << i << '\n'
        << reads[i] << "\n+\n"
        << std::string(reads[i].size(), 'I') << '\n';
  }
}

}  // namespace firm
