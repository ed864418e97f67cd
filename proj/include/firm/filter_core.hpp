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

#ifndef FIRM_FILTER_CORE_HPP
#define FIRM_FILTER_CORE_HPP

#include <array>
#include <bitset>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "firm/genome_io.hpp"

namespace firm {

inline constexpr std::size_t kTokenLength = 5;
inline constexpr std::size_t kTokenCount = 1024;  // 4^5
inline constexpr std::uint32_t kDefaultThreshold = 40;

/// Lexicographic rank of a 5-nucleotide token, A < C < G < T.
class TokenIndex {
 public:
  constexpr TokenIndex() = default;
  /// Throws std::out_of_range unless value < 1024.
  explicit TokenIndex(std::uint32_t value);

  constexpr std::uint16_t value() const { return value_; }
  friend constexpr auto operator<=>(TokenIndex, TokenIndex) = default;

 private:
  std::uint16_t value_ = 0;
};

/// 2-bit code per nucleotide (A=00 C=01 G=10 T=11), most significant
/// symbol first. Throws FormatError on a wrong-length window or any
/// symbol outside {A,C,G,T}.
TokenIndex encode_token(std::string_view window);
std::string decode_token(TokenIndex token);

/// Tokens at offsets 0, stride, 2*stride, ... in offset order. Windows
/// that overlap an N are dropped.
std::vector<TokenIndex> tokenize(std::string_view seq, std::size_t stride = 1);
inline std::vector<TokenIndex> tokenize(const NucleotideString& seq, std::size_t stride = 1) {
  return tokenize(seq.view(), stride);
}

/// 1024 presence bits of one reference bin. Bit j is set iff token j
/// occurs in the bin.
struct BinVector {
  std::uint64_t bin_id = 0;
  std::bitset<kTokenCount> bits;

  friend bool operator==(const BinVector&, const BinVector&) = default;
};

BinVector build_bin_vector(const ReferenceBin& bin);
std::vector<BinVector> build_bin_vectors(std::span<const ReferenceBin> bins);

/// Occurrence counts of each token in one read.
class CountBuffer {
 public:
  CountBuffer() { weights_.fill(0); }

  std::uint32_t operator[](std::size_t token) const { return weights_[token]; }
  void add(TokenIndex t) { ++weights_[t.value()]; }

  /// Distinct tokens (the set of non-zero entries) in ascending index order.
  std::vector<TokenIndex> distinct() const;
  std::uint32_t total() const;

  friend bool operator==(const CountBuffer&, const CountBuffer&) = default;

 private:
  std::array<std::uint32_t, kTokenCount> weights_;
};

CountBuffer build_count_buffer(const QueryRead& read);
CountBuffer build_count_buffer(std::string_view seq);

/// Selected bins and per-bin scores for one read. `scores` is dense and
/// indexed by bin id.
struct FilterVerdict {
  std::uint64_t read_id = 0;
  std::uint32_t threshold = 0;
  std::vector<std::uint32_t> scores;
  std::vector<std::uint64_t> selected_bins;  // ascending

  friend bool operator==(const FilterVerdict&, const FilterVerdict&) = default;
};

/// Weighted sum of presence bits: score_k = sum_j weights[j] * bits_k[j].
/// A bin is selected iff its score is strictly greater than `threshold`.
FilterVerdict score_bins(const CountBuffer& cb, std::span<const BinVector> bins,
                         std::uint32_t threshold, std::uint64_t read_id = 0);

/// Token-occurrence-order accumulation (one presence-bit lookup per window).
/// Produces the same scores as score_bins; kept as a second algebraic route.
FilterVerdict score_bins_by_occurrence(std::span<const TokenIndex> tokens,
                                       std::span<const BinVector> bins, std::uint32_t threshold,
                                       std::uint64_t read_id = 0);

/// Builds selected_bins from scores.
void select_bins(FilterVerdict& verdict);

}  // namespace firm

#endif  // FIRM_FILTER_CORE_HPP
