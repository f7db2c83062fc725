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

// Brute-force coverage oracle. Nothing here goes through the stride tables,
// tuple_index or the combination enumerator of interaction.hpp; the code is
// kept slow and obvious on purpose.

#ifndef HABCSM_VERIFIER_HPP_
#define HABCSM_VERIFIER_HPP_

#include <cstddef>
#include <set>
#include <vector>

#include "habcsm/interaction.hpp"
#include "habcsm/model.hpp"

namespace habcsm::verifier {

namespace detail {

// Steps `values` to the next assignment, last position fastest. Returns
// false after the final assignment.
inline bool next_assignment(std::vector<int>& values,
                            const std::vector<int>& radices) {
  for (std::size_t k = values.size(); k-- > 0;) {
    if (++values[k] < radices[k]) return true;
    values[k] = 0;
  }
  return false;
}

inline void subsets(const std::vector<std::size_t>& pool, std::size_t t,
                    std::size_t from, std::vector<std::size_t>& current,
                    std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == t) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    current.push_back(pool[i]);
    subsets(pool, t, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace detail

// Uncovered tuples of `u` hit by `tc`, found by walking every assignment of
// every combination in flag order and comparing it with tc's projection.
inline std::size_t brute_force_weight(const TestCase& tc,
                                      const TupleUniverse& u) {
  std::size_t weight = 0;
  const auto& combs = u.combinations();
  for (std::size_t c = 0; c < combs.size(); ++c) {
    const auto& cols = combs[c].columns;
    std::vector<int> radices;
    std::vector<int> projection;
    for (auto col : cols) {
      radices.push_back(u.system().cardinality(col));
      projection.push_back(tc.values[col]);
    }
    const auto flags = u.flags(c);
    std::vector<int> values(cols.size(), 0);
    std::size_t position = 0;
    do {
      if (values == projection && flags[position] == 0) ++weight;
      ++position;
    } while (detail::next_assignment(values, radices));
  }
  return weight;
}

struct MissingTuple {
  std::vector<std::size_t> columns;
  std::vector<int> values;

  friend bool operator==(const MissingTuple&, const MissingTuple&) = default;
  friend auto operator<=>(const MissingTuple&, const MissingTuple&) = default;
};

struct CoverageReport {
  std::size_t required = 0;  // distinct required tuples
  std::vector<MissingTuple> missing;

  bool complete() const noexcept { return missing.empty(); }
};

// All distinct column sets that must be covered, main strength first.
inline std::vector<std::vector<std::size_t>> required_column_sets(
    const ParameterSystem& sys, const StrengthSpec& spec) {
  std::vector<std::vector<std::size_t>> raw;
  std::vector<std::size_t> everything;
  for (std::size_t j = 0; j < sys.size(); ++j) everything.push_back(j);
  std::vector<std::size_t> scratch;
  detail::subsets(everything, static_cast<std::size_t>(spec.main_strength), 0,
                  scratch, raw);
  for (const auto& sub : spec.subs) {
    detail::subsets(sub.columns, static_cast<std::size_t>(sub.strength), 0,
                    scratch, raw);
  }
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> out;
  for (auto& cols : raw) {
    if (seen.insert(cols).second) out.push_back(std::move(cols));
  }
  return out;
}

// Checks every required tuple against every row of `ts`.
inline CoverageReport verify_coverage(const TestSet& ts,
                                      const ParameterSystem& sys,
                                      const StrengthSpec& spec) {
  CoverageReport report;
  for (const auto& cols : required_column_sets(sys, spec)) {
    std::vector<int> radices;
    for (auto col : cols) radices.push_back(sys.cardinality(col));
    std::vector<int> values(cols.size(), 0);
    do {
      ++report.required;
      bool hit = false;
      for (const auto& row : ts.rows) {
        bool match = true;
        for (std::size_t k = 0; k < cols.size() && match; ++k) {
          match = row.values[cols[k]] == values[k];
        }
        if (match) {
          hit = true;
          break;
        }
      }
      if (!hit) report.missing.push_back({cols, values});
    } while (detail::next_assignment(values, radices));
  }
  return report;
}

inline CoverageReport verify_coverage(const TestSet& ts,
                                      const Problem& problem) {
  return verify_coverage(ts, problem.system, problem.strength);
}

}  // namespace habcsm::verifier

#endif  // HABCSM_VERIFIER_HPP_
