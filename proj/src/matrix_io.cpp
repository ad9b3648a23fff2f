// Copyright 2026 The corrlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corrlab/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "corrlab/errors.hpp"

namespace corrlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    while (pos_ <= text_.size()) {
      if (pos_ == text_.size()) return false;
      const auto end = text_.find('\n', pos_);
      const auto stop = end == std::string_view::npos ? text_.size() : end;
      line = trim(text_.substr(pos_, stop - pos_));
      pos_ = stop + 1;
      ++line_no_;
      if (!skip_blank_ || (!line.empty() && line.front() != '#')) return true;
    }
    return false;
  }
  void set_skip_blank(bool skip) { skip_blank_ = skip; }
  int line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
  bool skip_blank_ = true;
};

int parse_dim(std::string_view tok, int line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1) {
    throw ParseError("line " + std::to_string(line_no) + ": bad dimension '" + std::string(tok) + "'");
  }
  return v;
}

SignMatrix parse_one(LineReader& reader, std::string_view header) {
  const int header_line = reader.line_no();
  const auto space = header.find_first_of(" \t");
  if (space == std::string_view::npos) {
    throw ParseError("line " + std::to_string(header_line) + ": expected header \"m n\"");
  }
  const int m = parse_dim(trim(header.substr(0, space)), header_line);
  const int n = parse_dim(trim(header.substr(space + 1)), header_line);
  if (m > kHardDimLimit || n > kHardDimLimit) {
    throw SizeCapExceeded("matrix " + std::to_string(m) + "x" + std::to_string(n) +
                          " exceeds the hard limit of " + std::to_string(kHardDimLimit));
  }
  std::vector<Mask> rows;
  reader.set_skip_blank(false);
  for (int i = 0; i < m; ++i) {
    std::string_view line;
    if (!reader.next(line)) {
      throw ParseError("expected " + std::to_string(m) + " rows, found " + std::to_string(i));
    }
    if (static_cast<int>(line.size()) != n) {
      throw ParseError("line " + std::to_string(reader.line_no()) + ": expected " +
                       std::to_string(n) + " entries, found " + std::to_string(line.size()));
    }
    Mask neg = 0;
    for (int j = 0; j < n; ++j) {
      const char c = line[static_cast<std::size_t>(j)];
      if (c == '-' || c == '1') {
        neg |= Mask{1} << j;
      } else if (c != '+' && c != '0') {
        throw ParseError("line " + std::to_string(reader.line_no()) + ": bad entry '" +
                         std::string(1, c) + "'");
      }
    }
    rows.push_back(neg);
  }
  reader.set_skip_blank(true);
  return SignMatrix::from_neg_masks(m, n, rows);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open matrix file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<SignMatrix> parse_matrices(std::string_view text) {
  LineReader reader(text);
  std::vector<SignMatrix> out;
  std::string_view header;
  while (reader.next(header)) out.push_back(parse_one(reader, header));
  return out;
}

SignMatrix parse_matrix(std::string_view text) {
  auto all = parse_matrices(text);
  if (all.size() != 1) {
    throw ParseError("expected exactly one matrix, found " + std::to_string(all.size()));
  }
  return all.front();
}

std::string serialize_matrix(const SignMatrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out += to_char(a.at(i, j));
    out += '\n';
  }
  return out;
}

SignMatrix read_matrix_file(const std::string& path) { return parse_matrix(slurp(path)); }

std::vector<SignMatrix> read_matrices_file(const std::string& path) {
  return parse_matrices(slurp(path));
}

}  // namespace corrlab
