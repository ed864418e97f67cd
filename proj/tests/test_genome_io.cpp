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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <zlib.h>

#include "firm/errors.hpp"
#include "firm/genome_io.hpp"

using namespace firm;

namespace {

std::vector<ReferenceBin> fasta(const std::string& text, std::size_t bin_length) {
  std::istringstream in(text);
  return load_reference(in, bin_length);
}

ReadSet fastq(const std::string& text, std::size_t read_size = 100) {
  std::istringstream in(text);
  return load_reads(in, read_size);
}

std::string fastq_record(const std::string& name, const std::string& seq) {
  return "@" + name + "\n" + seq + "\n+\n" + std::string(seq.size(), 'I') + "\n";
}

}  // namespace

TEST_CASE("reference of 200 A's splits into two full bins") {
  const auto bins = fasta(">chr1\n" + std::string(200, 'A') + "\n", 100);
  REQUIRE(bins.size() == 2);
  for (const auto& b : bins) CHECK(b.sequence.str() == std::string(100, 'A'));
  CHECK(bins[0].bin_id == 0);
  CHECK(bins[1].bin_id == 1);
}

TEST_CASE("trailing partial bin is kept") {
  const auto bins = fasta(">r\n" + std::string(250, 'C') + "\n", 100);
  REQUIRE(bins.size() == 3);
  CHECK(bins[0].sequence.size() == 100);
  CHECK(bins[1].sequence.size() == 100);
  CHECK(bins[2].sequence.size() == 50);
}

TEST_CASE("multi-line, lowercase, multi-record FASTA keeps the partition property") {
  const std::string text = ">a desc\nacgtn\nACGTA\n\n>b\nggg\r\nTTTT\n";
  const auto bins = fasta(text, 4);
  std::string joined;
  for (std::size_t i = 0; i < bins.size(); ++i) {
    CHECK(bins[i].bin_id == i);
    joined += bins[i].sequence.str();
  }
  CHECK(joined == "ACGTNACGTAGGGTTTT");
  // Records are binned separately: 10 symbols -> 4,4,2 then 7 -> 4,3.
  REQUIRE(bins.size() == 5);
  CHECK(bins[2].sequence.str() == "TA");
}

TEST_CASE("FASTA errors") {
  CHECK_THROWS_AS(fasta("", 100), FormatError);
  CHECK_THROWS_AS(fasta(">only header\n", 100), FormatError);
  CHECK_THROWS_AS(fasta(">\nACGT\n", 100), FormatError);
  CHECK_THROWS_AS(fasta("ACGT\n>late\nACGT\n", 100), FormatError);
  CHECK_THROWS_AS(fasta(">x\nACGRT\n", 100), FormatError);
  CHECK_THROWS_AS(fasta(">x\nAC GT\n", 100), FormatError);
  CHECK_THROWS_AS(fasta(">x\nACGT\n", 0), std::invalid_argument);
}

TEST_CASE("overlapping bins are available as a hook") {
  std::istringstream in(">x\nAAAACCCCGG\n");
  StreamLineSource src(in);
  const auto bins = load_reference(src, BinningOptions{4, 2});
  REQUIRE(bins.size() == 4);
  CHECK(bins[0].sequence.str() == "AAAA");
  CHECK(bins[1].sequence.str() == "AACC");
  CHECK(bins[2].sequence.str() == "CCCC");
  CHECK(bins[3].sequence.str() == "CCGG");
}

TEST_CASE("FASTQ: three full-length records") {
  std::string text;
  for (int i = 0; i < 3; ++i) text += fastq_record("r" + std::to_string(i), std::string(100, 'G'));
  const ReadSet rs = fastq(text);
  CHECK(rs.reads.size() == 3);
  CHECK(rs.skipped == 0);
  CHECK(rs.reads[2].read_id == 2);
}

TEST_CASE("FASTQ: short reads are skipped and counted") {
  const std::string text = fastq_record("a", std::string(100, 'A')) +
                           fastq_record("b", std::string(90, 'A')) +
                           fastq_record("c", std::string(100, 't'));
  const ReadSet rs = fastq(text);
  REQUIRE(rs.reads.size() == 2);
  CHECK(rs.skipped == 1);
  CHECK(rs.reads[1].sequence.str() == std::string(100, 'T'));
  CHECK(rs.reads[1].read_id == 1);
}

TEST_CASE("FASTQ: max_reads takes the head of the file") {
  std::string text;
  for (int i = 0; i < 5; ++i) text += fastq_record("r", std::string(100, 'C'));
  std::istringstream in(text);
  CHECK(load_reads(in, 100, 2).reads.size() == 2);
}

TEST_CASE("FASTQ errors") {
  CHECK_THROWS_AS(fastq("r\nACGT\n+\nIIII\n", 4), FormatError);
  CHECK_THROWS_AS(fastq("@r\nACGT\n-\nIIII\n", 4), FormatError);
  CHECK_THROWS_AS(fastq("@r\nACGT\n+\nIII\n", 4), FormatError);
  CHECK_THROWS_AS(fastq("@r\nACGT\n+\n", 4), FormatError);
  CHECK_THROWS_AS(fastq("@r\nACXT\n+\nIIII\n", 4), FormatError);
}

TEST_CASE("parsing is deterministic") {
  const std::string text = ">x\n" + std::string(333, 'A') + "CGT\n";
  const auto a = fasta(text, 100);
  const auto b = fasta(text, 100);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].sequence == b[i].sequence);
}

TEST_CASE("gzip-compressed files are read transparently") {
  const std::string plain_path = "genome_io_plain.fa";
  const std::string gz_path = "genome_io_test.fa.gz";
  const std::string text = ">x\n" + std::string(150, 'A') + "\n";
  {
    std::ofstream(plain_path) << text;
    gzFile gz = gzopen(gz_path.c_str(), "wb");
    REQUIRE(gz != nullptr);
    gzwrite(gz, text.data(), static_cast<unsigned>(text.size()));
    gzclose(gz);
  }
  const auto plain = load_reference_file(plain_path, BinningOptions{});
  const auto packed = load_reference_file(gz_path, BinningOptions{});
  REQUIRE(plain.size() == 2);
  REQUIRE(packed.size() == 2);
  CHECK(packed[1].sequence.size() == 50);
  std::remove(plain_path.c_str());
  std::remove(gz_path.c_str());
  CHECK_THROWS_AS(load_reference_file("does/not/exist.fa", BinningOptions{}), FormatError);
}
