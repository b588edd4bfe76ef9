// Copyright 2026 The l0cover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "l0cover/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace l0cover {

namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

/// Non-comment, non-blank lines split into tokens.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++lineno;
    pos = end + 1;
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      if (toks.empty() && line[i] == '#') break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      toks.push_back({line.substr(i, j - i), lineno, static_cast<int>(i) + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == text.size()) break;
  }
  return lines;
}

double to_real(const Token& t, const std::string& source) {
  double v = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(source, t.line, t.column, "expected a real number, got '" +
                                                   std::string(t.text) + "'");
  }
  if (!std::isfinite(v)) {
    throw ParseError(source, t.line, t.column, "non-finite value '" + std::string(t.text) + "'");
  }
  return v;
}

Index to_count(const Token& t, const std::string& source, const char* what) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v < 1) {
    throw ParseError(source, t.line, t.column,
                     std::string(what) + " must be a positive integer, got '" +
                         std::string(t.text) + "'");
  }
  return static_cast<Index>(v);
}

void expect_count(const std::vector<Token>& line, std::size_t want, const std::string& source,
                  const char* what) {
  if (line.size() != want) {
    throw ParseError(source, line.front().line, line.front().column,
                     std::string(what) + ": expected " + std::to_string(want) + " values, found " +
                         std::to_string(line.size()));
  }
}

std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, int column, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

Instance parse_instance_text(std::string_view text, const std::string& source) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(source, 1, 1, "empty instance file");
  const auto& header = lines[0];
  expect_count(header, 4, source, "header 'n m p alpha'");
  const Index n = to_count(header[0], source, "n");
  const Index m = to_count(header[1], source, "m");

  Norm p;
  std::string ptok(header[2].text);
  for (auto& c : ptok) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ptok == "1") p = Norm::L1;
  else if (ptok == "inf") p = Norm::LInf;
  else {
    throw ParseError(source, header[2].line, header[2].column,
                     "unsupported norm '" + ptok + "' (use 1 or inf)");
  }
  const double alpha = to_real(header[3], source);
  if (alpha < 0.0) {
    throw ParseError(source, header[3].line, header[3].column, "alpha must be nonnegative");
  }

  if (lines.size() != static_cast<std::size_t>(n) + 2) {
    const auto& last = lines.back();
    throw ParseError(source, last.front().line, last.front().column,
                     "expected " + std::to_string(n + 2) + " data lines, found " +
                         std::to_string(lines.size()));
  }
  Vector y(n);
  expect_count(lines[1], static_cast<std::size_t>(n), source, "observation line");
  for (Index i = 0; i < n; ++i) y[i] = to_real(lines[1][static_cast<std::size_t>(i)], source);

  Matrix H(n, m);
  for (Index i = 0; i < n; ++i) {
    const auto& row = lines[static_cast<std::size_t>(i) + 2];
    expect_count(row, static_cast<std::size_t>(m), source, "dictionary row");
    for (Index j = 0; j < m; ++j) H(i, j) = to_real(row[static_cast<std::size_t>(j)], source);
  }
  return Instance(std::move(H), std::move(y), p, alpha);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Instance parse_instance(const std::filesystem::path& path) {
  return parse_instance_text(read_file(path), path.string());
}

std::string format_instance(const Instance& inst) {
  std::ostringstream os;
  os << inst.rows() << ' ' << inst.cols() << ' ' << to_string(inst.norm()) << ' '
     << full_precision(inst.alpha()) << '\n';
  for (Index i = 0; i < inst.rows(); ++i) {
    os << (i ? " " : "") << full_precision(inst.observation()[i]);
  }
  os << '\n';
  for (Index i = 0; i < inst.rows(); ++i) {
    for (Index j = 0; j < inst.cols(); ++j) {
      os << (j ? " " : "") << full_precision(inst.dictionary()(i, j));
    }
    os << '\n';
  }
  return os.str();
}

void write_instance(const std::filesystem::path& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_instance(inst);
}

Vector parse_solution_text(std::string_view text, const std::string& source) {
  const auto lines = tokenize(text);
  if (lines.size() != 2) {
    throw ParseError(source, lines.empty() ? 1 : lines.back().front().line, 1,
                     "solution file needs a line with m and a line with m values");
  }
  expect_count(lines[0], 1, source, "solution header");
  const Index m = to_count(lines[0][0], source, "m");
  expect_count(lines[1], static_cast<std::size_t>(m), source, "solution values");
  Vector x(m);
  for (Index j = 0; j < m; ++j) x[j] = to_real(lines[1][static_cast<std::size_t>(j)], source);
  return x;
}

Vector parse_solution(const std::filesystem::path& path) {
  return parse_solution_text(read_file(path), path.string());
}

std::string format_solution(const Vector& x) {
  std::ostringstream os;
  os << x.size() << '\n';
  for (Index j = 0; j < x.size(); ++j) os << (j ? " " : "") << full_precision(x[j]);
  os << '\n';
  return os.str();
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : full_precision(v);
}

}  // namespace l0cover
