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

#ifndef HABCSM_MODEL_HPP_
#define HABCSM_MODEL_HPP_

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace habcsm {

// Thrown by `parse_spec` and the domain-type constructors.
class SpecError : public std::invalid_argument {
 public:
  enum class Kind { kSyntax, kSemantic };

  SpecError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// The system under test: one cardinality per parameter. Parameter `j` takes
// the values 0 .. cardinality(j) - 1.
class ParameterSystem {
 public:
  ParameterSystem() = default;

  explicit ParameterSystem(std::vector<int> cardinalities)
      : cardinalities_(std::move(cardinalities)) {
    if (cardinalities_.size() < 2) {
      throw SpecError(SpecError::Kind::kSemantic,
                      "a system needs at least 2 parameters");
    }
    for (std::size_t j = 0; j < cardinalities_.size(); ++j) {
      if (cardinalities_[j] < 2) {
        throw SpecError(SpecError::Kind::kSemantic,
                        "parameter " + std::to_string(j) +
                            " has cardinality " +
                            std::to_string(cardinalities_[j]) + " (< 2)");
      }
    }
  }

  std::size_t size() const noexcept { return cardinalities_.size(); }
  int cardinality(std::size_t j) const { return cardinalities_.at(j); }
  const std::vector<int>& cardinalities() const noexcept {
    return cardinalities_;
  }

  friend bool operator==(const ParameterSystem&,
                         const ParameterSystem&) = default;

 private:
  std::vector<int> cardinalities_;
};

// A variable-strength sub-array: `strength`-way coverage restricted to
// `columns` (strictly increasing indices into the parent system).
struct SubConfiguration {
  std::vector<std::size_t> columns;
  int strength = 0;

  friend bool operator==(const SubConfiguration&,
                         const SubConfiguration&) = default;
};

struct StrengthSpec {
  int main_strength = 0;
  std::vector<SubConfiguration> subs;

  friend bool operator==(const StrengthSpec&, const StrengthSpec&) = default;
};

// One row of a test set.
struct TestCase {
  std::vector<int> values;

  std::size_t size() const noexcept { return values.size(); }
  int operator[](std::size_t j) const { return values[j]; }

  friend bool operator==(const TestCase&, const TestCase&) = default;
  friend auto operator<=>(const TestCase&, const TestCase&) = default;
};

struct TestSet {
  std::vector<TestCase> rows;

  std::size_t size() const noexcept { return rows.size(); }
  bool empty() const noexcept { return rows.empty(); }

  friend bool operator==(const TestSet&, const TestSet&) = default;
};

// A parsed specification string.
struct Problem {
  ParameterSystem system;
  StrengthSpec strength;

  friend bool operator==(const Problem&, const Problem&) = default;
};

// Throws SpecError(kSemantic) unless `spec` is valid for `sys`.
inline void validate_strength(const ParameterSystem& sys,
                              const StrengthSpec& spec) {
  const auto p = sys.size();
  if (spec.main_strength < 2 ||
      static_cast<std::size_t>(spec.main_strength) > p) {
    throw SpecError(SpecError::Kind::kSemantic,
                    "main strength " + std::to_string(spec.main_strength) +
                        " outside [2, " + std::to_string(p) + "]");
  }
  for (std::size_t s = 0; s < spec.subs.size(); ++s) {
    const auto& sub = spec.subs[s];
    const std::string tag = "sub-configuration " + std::to_string(s) + ": ";
    if (sub.strength < 2 ||
        static_cast<std::size_t>(sub.strength) > sub.columns.size()) {
      throw SpecError(SpecError::Kind::kSemantic,
                      tag + "strength " + std::to_string(sub.strength) +
                          " outside [2, " +
                          std::to_string(sub.columns.size()) + "]");
    }
    for (std::size_t i = 0; i < sub.columns.size(); ++i) {
      if (sub.columns[i] >= p) {
        throw SpecError(SpecError::Kind::kSemantic,
                        tag + "column " + std::to_string(sub.columns[i]) +
                            " out of range");
      }
      if (i > 0 && sub.columns[i] <= sub.columns[i - 1]) {
        throw SpecError(SpecError::Kind::kSemantic,
                        tag + "columns must be strictly increasing");
      }
    }
  }
}

struct Violation {
  enum class Kind { kLengthMismatch, kOutOfRange };
  Kind kind;
  std::size_t index = 0;  // offending coordinate, kOutOfRange only
  int value = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Empty result means the row is valid.
inline std::vector<Violation> validate_test_case(const TestCase& tc,
                                                 const ParameterSystem& sys) {
  std::vector<Violation> out;
  if (tc.size() != sys.size()) {
    out.push_back({Violation::Kind::kLengthMismatch, 0, 0});
    return out;
  }
  for (std::size_t j = 0; j < tc.size(); ++j) {
    if (tc[j] < 0 || tc[j] >= sys.cardinality(j)) {
      out.push_back({Violation::Kind::kOutOfRange, j, tc[j]});
    }
  }
  return out;
}

namespace detail {

// Recursive-descent reader over the specification grammar. Whitespace is
// insignificant except as the separator between parameter groups.
class SpecReader {
 public:
  explicit SpecReader(std::string_view text) : text_(text) {}

  Problem read() {
    std::string keyword = read_word();
    if (keyword != "CA" && keyword != "MCA" && keyword != "VSCA") {
      fail("expected CA, MCA or VSCA");
    }
    expect('(');
    expect_placeholder();
    const int t = read_int();
    expect(',');
    std::vector<int> cards = read_params();

    std::vector<PendingSub> pending;
    if (keyword == "VSCA") {
      expect(',');
      expect('{');
      if (!peek('}')) {
        pending.push_back(read_sub());
        while (peek(',')) {
          expect(',');
          pending.push_back(read_sub());
        }
      }
      expect('}');
    }
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");

    Problem out{ParameterSystem(std::move(cards)), StrengthSpec{t, {}}};
    bind_subs(out, pending);
    validate_strength(out.system, out.strength);
    return out;
  }

 private:
  struct PendingSub {
    int strength = 0;
    std::vector<int> cardinalities;  // positional form
    std::optional<std::vector<std::size_t>> columns;  // explicit form
  };

  // Positional subs claim the leftmost run of unclaimed consecutive columns
  // whose cardinalities match the declared groups.
  static void bind_subs(Problem& problem,
                        const std::vector<PendingSub>& pending) {
    const auto& cards = problem.system.cardinalities();
    std::vector<bool> claimed(cards.size(), false);
    for (std::size_t s = 0; s < pending.size(); ++s) {
      const auto& sub = pending[s];
      if (sub.columns) {
        problem.strength.subs.push_back({*sub.columns, sub.strength});
        continue;
      }
      const auto width = sub.cardinalities.size();
      std::optional<std::size_t> start;
      for (std::size_t first = 0; first + width <= cards.size(); ++first) {
        bool fits = true;
        for (std::size_t k = 0; k < width && fits; ++k) {
          fits = !claimed[first + k] &&
                 cards[first + k] == sub.cardinalities[k];
        }
        if (fits) {
          start = first;
          break;
        }
      }
      if (!start) {
        throw SpecError(SpecError::Kind::kSemantic,
                        "sub-configuration " + std::to_string(s) +
                            " does not fit any run of unassigned columns");
      }
      SubConfiguration bound{{}, sub.strength};
      for (std::size_t k = 0; k < width; ++k) {
        claimed[*start + k] = true;
        bound.columns.push_back(*start + k);
      }
      problem.strength.subs.push_back(std::move(bound));
    }
  }

  PendingSub read_sub() {
    std::string keyword = read_word();
    if (keyword != "CA" && keyword != "MCA") fail("expected CA sub-array");
    expect('(');
    // Tables in the literature sometimes repeat the N placeholder here.
    skip_ws();
    if (peek('N')) expect_placeholder();
    PendingSub sub;
    sub.strength = read_int();
    expect(',');
    if (peek('[')) {
      expect('[');
      std::vector<std::size_t> cols;
      cols.push_back(static_cast<std::size_t>(read_int()));
      while (peek(',')) {
        expect(',');
        cols.push_back(static_cast<std::size_t>(read_int()));
      }
      expect(']');
      sub.columns = std::move(cols);
    } else {
      sub.cardinalities = read_params();
    }
    expect(')');
    return sub;
  }

  // params := group (" " group)*, group := v "^" k
  std::vector<int> read_params() {
    std::vector<int> cards;
    do {
      const int v = read_int();
      expect('^');
      const int k = read_int();
      if (k < 1) fail("group exponent must be >= 1");
      if (v < 2) {
        throw SpecError(SpecError::Kind::kSemantic,
                        "cardinality " + std::to_string(v) + " (< 2)");
      }
      cards.insert(cards.end(), static_cast<std::size_t>(k), v);
      skip_ws();
    } while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])));
    return cards;
  }

  void expect_placeholder() {
    skip_ws();
    if (!peek('N')) fail("expected N placeholder");
    ++pos_;
    skip_ws();
    if (peek(';') || peek(',')) {
      ++pos_;
    } else {
      fail("expected ';' after N");
    }
  }

  std::string read_word() {
    skip_ws();
    std::string word;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      word.push_back(text_[pos_++]);
    }
    return word;
  }

  int read_int() {
    skip_ws();
    const auto begin = pos_;
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1'000'000) fail("integer too large");
    }
    if (pos_ == begin) fail("expected integer");
    return static_cast<int>(value);
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SpecError(SpecError::Kind::kSyntax,
                    msg + " at offset " + std::to_string(pos_) + " in \"" +
                        std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void append_groups(std::string& out, const std::vector<int>& cards) {
  std::size_t i = 0;
  while (i < cards.size()) {
    std::size_t j = i;
    while (j < cards.size() && cards[j] == cards[i]) ++j;
    if (i > 0) out += ' ';
    out += std::to_string(cards[i]) + "^" + std::to_string(j - i);
    i = j;
  }
}

}  // namespace detail

// Parses "CA(N;t,v^k ...)", "MCA(N;t,...)" or "VSCA(N;t,...,{CA(t',...)})".
// Throws SpecError.
inline Problem parse_spec(std::string_view text) {
  return detail::SpecReader(text).read();
}

// Canonical text form; `parse_spec(to_spec_string(p)) == p`. Sub-arrays are
// always written with explicit column lists.
inline std::string to_spec_string(const Problem& problem) {
  const auto& cards = problem.system.cardinalities();
  const auto& spec = problem.strength;
  bool uniform = true;
  for (int c : cards) uniform = uniform && c == cards.front();

  std::string out;
  if (!spec.subs.empty()) {
    out = "VSCA";
  } else {
    out = uniform ? "CA" : "MCA";
  }
  out += "(N;" + std::to_string(spec.main_strength) + ",";
  detail::append_groups(out, cards);
  if (!spec.subs.empty()) {
    out += ",{";
    for (std::size_t s = 0; s < spec.subs.size(); ++s) {
      if (s > 0) out += ',';
      out += "CA(" + std::to_string(spec.subs[s].strength) + ",[";
      for (std::size_t i = 0; i < spec.subs[s].columns.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(spec.subs[s].columns[i]);
      }
      out += "])";
    }
    out += '}';
  }
  out += ')';
  return out;
}

}  // namespace habcsm

#endif  // HABCSM_MODEL_HPP_
