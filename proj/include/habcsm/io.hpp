// Copyright 2026 The habcsm Authors
//
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

// Test-set files.
//
//   CSV:  header "p0,p1,...,p{P-1}", then one comma-separated row per test.
//   Text: "# <SPEC>", "# size=<N>", then one space-separated row per test.

#ifndef HABCSM_IO_HPP_
#define HABCSM_IO_HPP_

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "habcsm/model.hpp"

namespace habcsm::io {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file contents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kCsv, kText };

inline std::string csv_header(std::size_t p) {
  std::string out;
  for (std::size_t j = 0; j < p; ++j) {
    if (j > 0) out += ',';
    out += 'p' + std::to_string(j);
  }
  return out;
}

inline std::string render_test_set(const TestSet& ts,
                                   const ParameterSystem& sys,
                                   std::string_view spec_text, Format format) {
  std::ostringstream os;
  const char sep = format == Format::kCsv ? ',' : ' ';
  if (format == Format::kCsv) {
    os << csv_header(sys.size()) << '\n';
  } else {
    os << "# " << spec_text << '\n' << "# size=" << ts.size() << '\n';
  }
  for (const auto& row : ts.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) os << sep;
      os << row[j];
    }
    os << '\n';
  }
  return os.str();
}

// Reads the CSV format; rows are checked against `sys`.
inline TestSet parse_csv_test_set(std::string_view text,
                                  const ParameterSystem& sys) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) -> FormatError {
    return FormatError("line " + std::to_string(line_no) + ": " + msg);
  };

  bool have_header = false;
  TestSet ts;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      if (line != csv_header(sys.size())) {
        throw fail("expected header \"" + csv_header(sys.size()) + "\"");
      }
      have_header = true;
      continue;
    }
    TestCase tc;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(field, &used);
      } catch (const std::exception&) {
        throw fail("bad value \"" + field + "\"");
      }
      if (used != field.size()) throw fail("bad value \"" + field + "\"");
      tc.values.push_back(value);
    }
    const auto violations = validate_test_case(tc, sys);
    if (!violations.empty()) {
      if (violations.front().kind == Violation::Kind::kLengthMismatch) {
        throw fail("expected " + std::to_string(sys.size()) + " values");
      }
      throw fail("value out of range at column " +
                 std::to_string(violations.front().index));
    }
    ts.rows.push_back(std::move(tc));
  }
  if (!have_header) throw FormatError("missing header");
  return ts;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << contents;
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace habcsm::io

#endif  // HABCSM_IO_HPP_
