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

#ifndef FIRM_GENOME_IO_HPP
#define FIRM_GENOME_IO_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace firm {

inline constexpr std::size_t kDefaultReadSize = 100;
inline constexpr std::size_t kDefaultBinLength = 100;

/**
 * Validated, uppercased nucleotide sequence over {A,C,G,T,N}. Never empty.
 */
class NucleotideString {
 public:
  /// Uppercases `raw` and validates it. Throws FormatError on an illegal
  /// character or an empty sequence.
  explicit NucleotideString(std::string raw);

  std::string_view view() const { return symbols_; }
  const std::string& str() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  char operator[](std::size_t i) const { return symbols_[i]; }

  friend bool operator==(const NucleotideString&, const NucleotideString&) = default;

 private:
  std::string symbols_;
};

struct ReferenceBin {
  std::uint64_t bin_id;
  NucleotideString sequence;
};

struct QueryRead {
  std::uint64_t read_id;
  NucleotideString sequence;
};

struct ReadSet {
  std::vector<QueryRead> reads;
  std::size_t skipped = 0;  // records whose length differed from read_size
};

struct BinningOptions {
  std::size_t bin_length = kDefaultBinLength;
  // Number of symbols shared by consecutive bins. 0 tiles the reference.
  std::size_t overlap = 0;
};

/// Abstract line source so that FASTA/FASTQ parsing works on plain streams
/// and on gzip files alike.
class LineSource {
 public:
  virtual ~LineSource() = default;
  /// Reads the next line without its terminator ('\n', "\r\n"). Returns
  /// false at end of input.
  virtual bool next(std::string& line) = 0;
};

class StreamLineSource : public LineSource {
 public:
  explicit StreamLineSource(std::istream& in) : in_(in) {}
  bool next(std::string& line) override;

 private:
  std::istream& in_;
};

/// Reads a file that may or may not be gzip-compressed.
class FileLineSource : public LineSource {
 public:
  explicit FileLineSource(const std::string& path);
  ~FileLineSource() override;
  FileLineSource(const FileLineSource&) = delete;
  FileLineSource& operator=(const FileLineSource&) = delete;
  bool next(std::string& line) override;

 private:
  void* handle_;  // gzFile
  std::string buffer_;
};

std::vector<ReferenceBin> load_reference(LineSource& source, const BinningOptions& options);
std::vector<ReferenceBin> load_reference(std::istream& in, std::size_t bin_length);
std::vector<ReferenceBin> load_reference_file(const std::string& path, const BinningOptions& options);

/// Parses 4-line FASTQ. Reads of any length other than `read_size` are
/// skipped and counted. `max_reads` (0 = unlimited) stops after that many
/// accepted reads.
ReadSet load_reads(LineSource& source, std::size_t read_size, std::size_t max_reads = 0);
ReadSet load_reads(std::istream& in, std::size_t read_size, std::size_t max_reads = 0);
ReadSet load_reads_file(const std::string& path, std::size_t read_size, std::size_t max_reads = 0);

}  // namespace firm

#endif  // FIRM_GENOME_IO_HPP
