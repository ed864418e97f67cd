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

#include "firm/genome_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>

#include "firm/errors.hpp"

namespace firm {

namespace {

char normalize_symbol(char c) {
  const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  switch (up) {
    case 'A':
    case 'C':
    case 'G':
    case 'T':
    case 'N':
      return up;
    default:
      return '\0';
  }
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

// Uppercases `seq` in place, throwing on anything outside {A,C,G,T,N}.
void normalize_into(std::string& out, std::string_view seq, std::size_t line_no) {
  out.reserve(out.size() + seq.size());
  for (char c : seq) {
    const char n = normalize_symbol(c);
    if (n == '\0') {
      throw FormatError("illegal nucleotide '" + std::string(1, c) + "' on line " +
                        std::to_string(line_no));
    }
    out.push_back(n);
  }
}

void emit_bins(const std::string& record, const BinningOptions& opt,
               std::vector<ReferenceBin>& bins) {
  const std::size_t stride = opt.bin_length - opt.overlap;
  for (std::size_t pos = 0; pos < record.size(); pos += stride) {
    const std::size_t len = std::min(opt.bin_length, record.size() - pos);
    bins.push_back({bins.size(), NucleotideString(record.substr(pos, len))});
    if (pos + len == record.size()) break;
  }
}

}  // namespace

NucleotideString::NucleotideString(std::string raw) : symbols_(std::move(raw)) {
  if (symbols_.empty()) throw FormatError("empty nucleotide sequence");
  for (char& c : symbols_) {
    const char n = normalize_symbol(c);
    if (n == '\0') throw FormatError("illegal nucleotide '" + std::string(1, c) + "'");
    c = n;
  }
}

bool StreamLineSource::next(std::string& line) {
  if (!std::getline(in_, line)) return false;
  strip_cr(line);
  return true;
}

FileLineSource::FileLineSource(const std::string& path) : handle_(gzopen(path.c_str(), "rb")) {
  if (handle_ == nullptr) throw FormatError("cannot open " + path);
  gzbuffer(static_cast<gzFile>(handle_), 1 << 17);
}

FileLineSource::~FileLineSource() { gzclose(static_cast<gzFile>(handle_)); }

bool FileLineSource::next(std::string& line) {
  line.clear();
  auto* gz = static_cast<gzFile>(handle_);
  char chunk[4096];
  bool any = false;
  while (gzgets(gz, chunk, sizeof(chunk)) != nullptr) {
    any = true;
    line.append(chunk);
    if (!line.empty() && line.back() == '\n') {
      line.pop_back();
      strip_cr(line);
      return true;
    }
  }
  int err = 0;
  gzerror(gz, &err);
  if (err != Z_OK && err != Z_STREAM_END) throw FormatError("gzip read error");
  strip_cr(line);
  return any;
}

std::vector<ReferenceBin> load_reference(LineSource& source, const BinningOptions& options) {
  if (options.bin_length == 0) throw std::invalid_argument("bin_length must be > 0");
  if (options.overlap >= options.bin_length) {
    throw std::invalid_argument("bin overlap must be smaller than bin_length");
  }
  std::vector<ReferenceBin> bins;
  std::string line;
  std::string record;
  bool in_record = false;
  std::size_t line_no = 0;
  while (source.next(line)) {
    ++line_no;
    if (is_blank(line)) continue;
    if (line.front() == '>') {
      const std::string_view name = std::string_view(line).substr(1);
      if (name.empty() || std::isspace(static_cast<unsigned char>(name.front()))) {
        throw FormatError("malformed FASTA header on line " + std::to_string(line_no));
      }
      emit_bins(record, options, bins);
      record.clear();
      in_record = true;
      continue;
    }
    if (!in_record) {
      throw FormatError("FASTA sequence before first header on line " + std::to_string(line_no));
    }
    normalize_into(record, line, line_no);
  }
  emit_bins(record, options, bins);
  if (bins.empty()) throw FormatError("empty FASTA input");
  return bins;
}

std::vector<ReferenceBin> load_reference(std::istream& in, std::size_t bin_length) {
  StreamLineSource src(in);
  return load_reference(src, BinningOptions{bin_length, 0});
}

std::vector<ReferenceBin> load_reference_file(const std::string& path,
                                              const BinningOptions& options) {
  FileLineSource src(path);
  return load_reference(src, options);
}

ReadSet load_reads(LineSource& source, std::size_t read_size, std::size_t max_reads) {
  ReadSet out;
  std::string header, seq, plus, qual;
  std::size_t line_no = 0;
  auto record_error = [&](const std::string& what) {
    return FormatError("malformed FASTQ record near line " + std::to_string(line_no) + ": " +
                       what);
  };
  while (true) {
    if (max_reads != 0 && out.reads.size() >= max_reads) break;
    // Skip blank separator lines between records.
    bool got = false;
    while ((got = source.next(header))) {
      ++line_no;
      if (!is_blank(header)) break;
    }
    if (!got) break;
    if (header.front() != '@') throw record_error("expected '@' header");
    if (!source.next(seq)) throw record_error("missing sequence line");
    ++line_no;
    if (!source.next(plus)) throw record_error("missing '+' line");
    ++line_no;
    if (plus.empty() || plus.front() != '+') throw record_error("expected '+' separator");
    if (!source.next(qual)) throw record_error("missing quality line");
    ++line_no;
    if (qual.size() != seq.size()) throw record_error("quality length differs from sequence");

    std::string normalized;
    normalize_into(normalized, seq, line_no - 2);
    if (normalized.size() != read_size) {
      ++out.skipped;
      continue;
    }
    out.reads.push_back({out.reads.size(), NucleotideString(std::move(normalized))});
  }
  return out;
}

ReadSet load_reads(std::istream& in, std::size_t read_size, std::size_t max_reads) {
  StreamLineSource src(in);
  return load_reads(src, read_size, max_reads);
}

ReadSet load_reads_file(const std::string& path, std::size_t read_size, std::size_t max_reads) {
  FileLineSource src(path);
  return load_reads(src, read_size, max_reads);
}

}  // namespace firm
