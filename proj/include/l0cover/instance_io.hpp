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

/**
 * @file instance_io.hpp
 * @brief Plain-text instance and solution files.
 *
 * Instance file, whitespace separated, '#' starts a comment line:
 *
 *     n m p alpha        p is "1" or "inf"
 *     y_1 ... y_n
 *     h_11 ... h_1m
 *     ...
 *     h_n1 ... h_nm
 *
 * Solution file: line 1 holds m, line 2 the m entries of x.
 */

#ifndef L0COVER_INSTANCE_IO_HPP
#define L0COVER_INSTANCE_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "l0cover/model.hpp"

namespace l0cover {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, int column, const std::string& what);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Instance parse_instance_text(std::string_view text, const std::string& source = "<input>");
Instance parse_instance(const std::filesystem::path& path);

/// 17 significant digits, so parsing the result reproduces inst bit for bit.
std::string format_instance(const Instance& inst);
void write_instance(const std::filesystem::path& path, const Instance& inst);

Vector parse_solution_text(std::string_view text, const std::string& source = "<input>");
Vector parse_solution(const std::filesystem::path& path);
std::string format_solution(const Vector& x);

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

std::string read_file(const std::filesystem::path& path);

}  // namespace l0cover

#endif  // L0COVER_INSTANCE_IO_HPP
