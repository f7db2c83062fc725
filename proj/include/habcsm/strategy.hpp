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

#ifndef HABCSM_STRATEGY_HPP_
#define HABCSM_STRATEGY_HPP_

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "habcsm/habc.hpp"
#include "habcsm/interaction.hpp"
#include "habcsm/model.hpp"

namespace habcsm {

// Per-position difference between two rows.
enum class DistanceMetric {
  kMismatchCount,     // positions that differ (Hamming)
  kAbsoluteDifference // sum of |a_j - b_j| over value indices
};

// How a candidate's distance to the existing rows is combined.
enum class DistanceAggregate {
  kSum,      // over every existing row
  kNearest   // to the closest existing row
};

struct TiebreakOptions {
  DistanceMetric metric = DistanceMetric::kMismatchCount;
  DistanceAggregate aggregate = DistanceAggregate::kSum;
};

inline std::size_t hamming_distance(
    const TestCase& a, const TestCase& b,
    DistanceMetric metric = DistanceMetric::kMismatchCount) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hamming_distance: length mismatch");
  }
  std::size_t d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (metric == DistanceMetric::kMismatchCount) {
      d += a[j] != b[j] ? 1 : 0;
    } else {
      d += static_cast<std::size_t>(std::abs(a[j] - b[j]));
    }
  }
  return d;
}

// Distance from `candidate` to the whole test set; 0 when `ts` is empty.
inline std::size_t total_hamming(const TestCase& candidate, const TestSet& ts,
                                 const TiebreakOptions& opts = {}) {
  if (ts.empty()) return 0;
  if (opts.aggregate == DistanceAggregate::kNearest) {
    std::size_t best = SIZE_MAX;
    for (const auto& row : ts.rows) {
      best = std::min(best, hamming_distance(candidate, row, opts.metric));
    }
    return best;
  }
  std::size_t sum = 0;
  for (const auto& row : ts.rows) {
    sum += hamming_distance(candidate, row, opts.metric);
  }
  return sum;
}

// Index into `tied` of the candidate farthest from `ts`; first wins ties.
inline std::size_t tiebreak_index(const std::vector<TestCase>& tied,
                                  const TestSet& ts,
                                  const TiebreakOptions& opts = {}) {
  if (tied.empty()) throw std::invalid_argument("tiebreak_select: no candidates");
  std::size_t best = 0;
  std::size_t best_distance = total_hamming(tied[0], ts, opts);
  for (std::size_t i = 1; i < tied.size(); ++i) {
    const auto d = total_hamming(tied[i], ts, opts);
    if (d > best_distance) {
      best = i;
      best_distance = d;
    }
  }
  return best;
}

inline TestCase tiebreak_select(const std::vector<TestCase>& tied,
                                const TestSet& ts,
                                const TiebreakOptions& opts = {}) {
  return tied[tiebreak_index(tied, ts, opts)];
}

// A row that covers at least one uncovered tuple: the first uncovered tuple's
// values, random values elsewhere.
inline TestCase synthesize_fallback(const TupleUniverse& u,
                                    const ParameterSystem& sys, Rng& rng) {
  const auto target = u.first_uncovered();
  if (!target) {
    throw std::logic_error("synthesize_fallback: universe already complete");
  }
  TestCase tc;
  tc.values.resize(sys.size());
  for (std::size_t j = 0; j < sys.size(); ++j) {
    tc.values[j] =
        static_cast<int>(rng.below(static_cast<std::size_t>(sys.cardinality(j))));
  }
  const auto& cols = u.combinations()[target->first].columns;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    tc.values[cols[k]] = target->second[k];
  }
  return tc;
}

struct GenerationOptions {
  SearchConfig search;
  TiebreakOptions tiebreak;
};

struct GenerationReport {
  TestSet test_set;
  std::vector<std::size_t> newly_covered;  // per row
  std::vector<int> cycles;                 // search cycles per row
  std::vector<std::size_t> search_weight;  // best weight the search reported
  std::vector<bool> fallback;              // row came from synthesize_fallback
  std::uint64_t seed = 0;
  std::size_t total_tuples = 0;
  std::chrono::nanoseconds wall_time{0};
};

// One-test-at-a-time construction: each iteration runs a fresh swarm search
// against the current coverage state and appends its best candidate.
inline GenerationReport generate_test_set(const ParameterSystem& sys,
                                          const StrengthSpec& spec,
                                          const GenerationOptions& opts) {
  opts.search.validate();
  const auto start = std::chrono::steady_clock::now();
  TupleUniverse universe(sys, spec);
  Rng rng(opts.search.seed);

  GenerationReport report;
  report.seed = opts.search.seed;
  report.total_tuples = universe.total();
  while (!universe.complete()) {
    auto found = search_best_candidate(sys, universe, opts.search, rng);
    TestCase row;
    bool fell_back = false;
    if (found.weight == 0) {
      row = synthesize_fallback(universe, sys, rng);
      fell_back = true;
    } else {
      row = tiebreak_select(found.tied_best, report.test_set, opts.tiebreak);
    }
    const auto fresh = universe.mark_covered(row);
    report.test_set.rows.push_back(std::move(row));
    report.newly_covered.push_back(fresh);
    report.cycles.push_back(found.cycles);
    report.search_weight.push_back(found.weight);
    report.fallback.push_back(fell_back);
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

inline GenerationReport generate_test_set(const Problem& problem,
                                          const GenerationOptions& opts) {
  return generate_test_set(problem.system, problem.strength, opts);
}

}  // namespace habcsm

#endif  // HABCSM_STRATEGY_HPP_
