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

#include <random>
#include <string>
#include <vector>

#include "firm/errors.hpp"
#include "firm/filter_core.hpp"

using namespace firm;

namespace {

std::string random_sequence(std::mt19937_64& rng, std::size_t n, bool with_n = false) {
  static constexpr char kAlphabet[] = "ACGTN";
  std::uniform_int_distribution<int> pick(0, with_n ? 4 : 3);
  std::string s(n, 'A');
  for (char& c : s) c = kAlphabet[pick(rng)];
  return s;
}

ReferenceBin make_bin(std::uint64_t id, std::string seq) {
  return ReferenceBin{id, NucleotideString(std::move(seq))};
}

std::vector<std::uint16_t> values(const std::vector<TokenIndex>& v) {
  std::vector<std::uint16_t> out;
  for (auto t : v) out.push_back(t.value());
  return out;
}

}  // namespace

TEST_CASE("encode_token anchors") {
  CHECK(encode_token("AAAAA").value() == 0);
  CHECK(encode_token("TTTTT").value() == 1023);
  CHECK(encode_token("AAAAG").value() == 2);
  CHECK(encode_token("AAACT").value() == 7);
  CHECK(encode_token("AAAGG").value() == 10);
  CHECK(encode_token("AACTA").value() == 28);
  CHECK(encode_token("AACTG").value() == 30);
  CHECK(encode_token("ATATA").value() == 204);
}

TEST_CASE("encode_token rejects bad windows") {
  CHECK_THROWS_AS(encode_token("AAAA"), FormatError);
  CHECK_THROWS_AS(encode_token("AAAAAA"), FormatError);
  CHECK_THROWS_AS(encode_token("AANAA"), FormatError);
  CHECK_THROWS_AS(TokenIndex(1024), std::out_of_range);
}

TEST_CASE("encode/decode is a bijection over all 1024 tokens") {
  std::vector<bool> seen(kTokenCount, false);
  for (std::uint32_t v = 0; v < kTokenCount; ++v) {
    const std::string w = decode_token(TokenIndex(v));
    REQUIRE(w.size() == kTokenLength);
    const auto t = encode_token(w);
    CHECK(t.value() == v);
    CHECK_FALSE(seen[t.value()]);
    seen[t.value()] = true;
  }
}

TEST_CASE("tokenize") {
  SUBCASE("homopolymer read") {
    const auto toks = tokenize(std::string(100, 'A'));
    CHECK(toks.size() == 96);
    for (auto t : toks) CHECK(t.value() == 0);
  }
  SUBCASE("period-4 sequence") {
    CHECK(values(tokenize("ACGTACGT")) == std::vector<std::uint16_t>{108, 433, 710, 795});
  }
  SUBCASE("windows overlapping N are dropped") {
    // AANGTACGTA: only windows starting at 3..5 avoid the N.
    CHECK(values(tokenize("AANGTACGTA")) ==
          std::vector<std::uint16_t>{encode_token("GTACG").value(), encode_token("TACGT").value(),
                                     encode_token("ACGTA").value()});
    CHECK(tokenize("NNNNNNNN").empty());
    CHECK(tokenize("ACGT").empty());
  }
  SUBCASE("stride") {
    CHECK(values(tokenize("ACGTACGTAC", 2)) == std::vector<std::uint16_t>{108, 710, 108});
    CHECK_THROWS(tokenize("ACGTACGT", 0));
  }
  SUBCASE("rolling encoder agrees with direct encoding") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const std::string s = random_sequence(rng, 120, true);
      std::vector<std::uint16_t> expect;
      for (std::size_t i = 0; i + kTokenLength <= s.size(); ++i) {
        const std::string w = s.substr(i, kTokenLength);
        if (w.find('N') == std::string::npos) expect.push_back(encode_token(w).value());
      }
      CHECK(values(tokenize(s)) == expect);
    }
  }
}

TEST_CASE("build_bin_vector") {
  CHECK(build_bin_vector(make_bin(0, std::string(100, 'A'))).bits.count() == 1);
  CHECK(build_bin_vector(make_bin(0, std::string(100, 'A'))).bits.test(0));

  std::string periodic;
  while (periodic.size() < 100) periodic += "ACGT";
  const auto bv = build_bin_vector(make_bin(7, periodic));
  CHECK(bv.bin_id == 7);
  CHECK(bv.bits.count() == 4);
  for (int j : {108, 433, 710, 795}) CHECK(bv.bits.test(j));

  CHECK(build_bin_vector(make_bin(0, std::string(100, 'N'))).bits.none());
}

TEST_CASE("build_count_buffer") {
  SUBCASE("homopolymer") {
    const auto cb = build_count_buffer(std::string(100, 'A'));
    CHECK(cb[0] == 96);
    CHECK(cb.total() == 96);
    CHECK(cb.distinct().size() == 1);
  }
  SUBCASE("repeated tokens carry weight 2") {
    const auto cb = build_count_buffer("AACTGCCATATAGGAACTGCATATA");
    CHECK(cb[30] == 2);
    CHECK(cb[204] == 2);
  }
  SUBCASE("all-distinct tokens have weight 1") {
    const auto cb = build_count_buffer("ACGTTGCAAGG");
    for (auto t : cb.distinct()) CHECK(cb[t.value()] == 1);
    CHECK(cb.total() == 7);
  }
  SUBCASE("distinct is ascending") {
    std::mt19937_64 rng(5);
    const auto cb = build_count_buffer(random_sequence(rng, 100));
    const auto d = cb.distinct();
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i - 1] < d[i]);
  }
}

TEST_CASE("score_bins") {
  const auto cb = build_count_buffer(std::string(100, 'A'));
  std::vector<BinVector> bins = {build_bin_vector(make_bin(0, std::string(100, 'A'))),
                                 BinVector{1, {}}};
  const auto v = score_bins(cb, bins, 40, 3);
  CHECK(v.read_id == 3);
  CHECK(v.scores == std::vector<std::uint32_t>{96, 0});
  CHECK(v.selected_bins == std::vector<std::uint64_t>{0});

  CHECK(score_bins(cb, bins, 0).selected_bins == std::vector<std::uint64_t>{0});
  // Selection is strict: score must exceed the threshold.
  CHECK(score_bins(cb, bins, 96).selected_bins.empty());
  CHECK(score_bins(cb, bins, 95).selected_bins == std::vector<std::uint64_t>{0});
}

TEST_CASE("score bound and monotonicity") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cb = build_count_buffer(random_sequence(rng, 100, true));
    BinVector bv{0, {}};
    std::uint32_t previous = 0;
    for (int k = 0; k < 40; ++k) {
      bv.bits.set(std::uniform_int_distribution<int>(0, 1023)(rng));
      const std::vector<BinVector> one{bv};
      const std::uint32_t s = score_bins(cb, one, 0).scores[0];
      CHECK(s >= previous);
      CHECK(s <= cb.total());
      previous = s;
    }
  }
}

TEST_CASE("occurrence-order scoring equals the weighted sum") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    // Small alphabets make shared tokens and repeated windows common.
    std::string read = random_sequence(rng, 40 + trial % 60, trial % 3 == 0);
    if (trial % 2) {
      for (char& c : read) c = (c == 'G' || c == 'T') ? 'A' : c;
    }
    std::vector<ReferenceBin> refs;
    for (int b = 0; b < 6; ++b) refs.push_back(make_bin(b, random_sequence(rng, 100)));
    refs.push_back(make_bin(6, read.size() >= 5 ? read : std::string(5, 'A')));
    const auto bins = build_bin_vectors(refs);

    const std::uint32_t T = trial % 20;
    const auto alpha = score_bins(build_count_buffer(read), bins, T, trial);
    const auto toks = tokenize(read);
    const auto grim = score_bins_by_occurrence(toks, bins, T, trial);
    CHECK(alpha == grim);
  }
}

TEST_CASE("select_bins recomputes from scores") {
  FilterVerdict v{9, 10, {5, 11, 10, 40}, {}};
  select_bins(v);
  CHECK(v.selected_bins == std::vector<std::uint64_t>{1, 3});
}
