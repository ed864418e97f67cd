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

#include "firm/filter_core.hpp"

#include <numeric>
#include <stdexcept>

#include "firm/errors.hpp"

namespace firm {

namespace {

// -1 for symbols that cannot appear in a token.
constexpr int symbol_code(char c) {
  switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
    default: return -1;
  }
}

constexpr char kSymbols[4] = {'A', 'C', 'G', 'T'};

}  // namespace

TokenIndex::TokenIndex(std::uint32_t value) : value_(static_cast<std::uint16_t>(value)) {
  if (value >= kTokenCount) throw std::out_of_range("token index out of range");
}

TokenIndex encode_token(std::string_view window) {
  if (window.size() != kTokenLength) throw FormatError("token window must have 5 symbols");
  std::uint32_t v = 0;
  for (char c : window) {
    const int code = symbol_code(c);
    if (code < 0) throw FormatError("token window contains '" + std::string(1, c) + "'");
    v = (v << 2) | static_cast<std::uint32_t>(code);
  }
  return TokenIndex(v);
}

std::string decode_token(TokenIndex token) {
  std::string out(kTokenLength, 'A');
  std::uint32_t v = token.value();
  for (std::size_t p = kTokenLength; p-- > 0;) {
    out[p] = kSymbols[v & 3u];
    v >>= 2;
  }
  return out;
}

std::vector<TokenIndex> tokenize(std::string_view seq, std::size_t stride) {
  if (stride == 0) throw std::invalid_argument("stride must be >= 1");
  std::vector<TokenIndex> out;
  if (seq.size() < kTokenLength) return out;
  out.reserve((seq.size() - kTokenLength) / stride + 1);

  if (stride == 1) {
    // Rolling 10-bit code; `valid` counts trailing symbols since the last N.
    std::uint32_t code = 0;
    std::size_t valid = 0;
    for (char c : seq) {
      const int s = symbol_code(c);
      if (s < 0) {
        valid = 0;
        code = 0;
        continue;
      }
      code = ((code << 2) | static_cast<std::uint32_t>(s)) & (kTokenCount - 1);
      if (++valid >= kTokenLength) out.emplace_back(code);
    }
    return out;
  }

  for (std::size_t pos = 0; pos + kTokenLength <= seq.size(); pos += stride) {
    const std::string_view w = seq.substr(pos, kTokenLength);
    if (w.find('N') != std::string_view::npos) continue;
    out.push_back(encode_token(w));
  }
  return out;
}

BinVector build_bin_vector(const ReferenceBin& bin) {
  BinVector v;
  v.bin_id = bin.bin_id;
  for (TokenIndex t : tokenize(bin.sequence)) v.bits.set(t.value());
  return v;
}

std::vector<BinVector> build_bin_vectors(std::span<const ReferenceBin> bins) {
  std::vector<BinVector> out;
  out.reserve(bins.size());
  for (const auto& b : bins) out.push_back(build_bin_vector(b));
  return out;
}

std::vector<TokenIndex> CountBuffer::distinct() const {
  std::vector<TokenIndex> out;
  for (std::uint32_t j = 0; j < kTokenCount; ++j) {
    if (weights_[j] != 0) out.emplace_back(j);
  }
  return out;
}

std::uint32_t CountBuffer::total() const {
  return std::accumulate(weights_.begin(), weights_.end(), std::uint32_t{0});
}

CountBuffer build_count_buffer(std::string_view seq) {
  CountBuffer cb;
  for (TokenIndex t : tokenize(seq)) cb.add(t);
  return cb;
}

CountBuffer build_count_buffer(const QueryRead& read) {
  return build_count_buffer(read.sequence.view());
}

void select_bins(FilterVerdict& verdict) {
  verdict.selected_bins.clear();
  for (std::size_t k = 0; k < verdict.scores.size(); ++k) {
    if (verdict.scores[k] > verdict.threshold) verdict.selected_bins.push_back(k);
  }
}

FilterVerdict score_bins(const CountBuffer& cb, std::span<const BinVector> bins,
                         std::uint32_t threshold, std::uint64_t read_id) {
  FilterVerdict v;
  v.read_id = read_id;
  v.threshold = threshold;
  v.scores.assign(bins.size(), 0);
  const std::vector<TokenIndex> theta = cb.distinct();
  for (std::size_t k = 0; k < bins.size(); ++k) {
    std::uint32_t c = 0;
    for (TokenIndex t : theta) {
      if (bins[k].bits.test(t.value())) c += cb[t.value()];
    }
    v.scores[k] = c;
  }
  select_bins(v);
  return v;
}

FilterVerdict score_bins_by_occurrence(std::span<const TokenIndex> tokens,
                                       std::span<const BinVector> bins, std::uint32_t threshold,
                                       std::uint64_t read_id) {
  FilterVerdict v;
  v.read_id = read_id;
  v.threshold = threshold;
  v.scores.assign(bins.size(), 0);
  for (std::size_t k = 0; k < bins.size(); ++k) {
    for (TokenIndex t : tokens) v.scores[k] += bins[k].bits.test(t.value()) ? 1u : 0u;
  }
  select_bins(v);
  return v;
}

}  // namespace firm
