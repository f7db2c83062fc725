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

#ifndef HABCSM_BENCH_HPP_
#define HABCSM_BENCH_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "habcsm/model.hpp"
#include "habcsm/strategy.hpp"
#include "habcsm/verifier.hpp"

namespace habcsm::bench {

// A generated set failed independent verification.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchmarkResult {
  std::string spec;
  int runs = 0;
  std::size_t best_size = 0;
  double avg_size = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single run
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  std::chrono::nanoseconds wall_time{0};
};

struct BenchmarkOptions {
  int runs = 20;
  int jobs = 1;
  GenerationOptions generation;  // generation.search.seed is the base seed
};

// Run `i` uses seed base + i. Every set is verified before it is counted.
// Results do not depend on `jobs`.
inline BenchmarkResult run_benchmark(const std::string& spec_text,
                                     const BenchmarkOptions& opts) {
  if (opts.runs < 1) throw std::invalid_argument("run_benchmark: runs < 1");
  const Problem problem = parse_spec(spec_text);
  opts.generation.search.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto runs = static_cast<std::size_t>(opts.runs);
  const std::uint64_t base = opts.generation.search.seed;

  std::vector<std::size_t> sizes(runs, 0);
  std::vector<std::string> defects(runs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (std::size_t i = next++; i < runs; i = next++) {
      try {
        GenerationOptions g = opts.generation;
        g.search.seed = base + i;
        const auto report = generate_test_set(problem, g);
        const auto check = verifier::verify_coverage(report.test_set, problem);
        if (!check.complete()) {
          defects[i] = "run " + std::to_string(i) + " (seed " +
                       std::to_string(g.search.seed) + ") left " +
                       std::to_string(check.missing.size()) +
                       " tuples uncovered";
        }
        sizes[i] = report.test_set.size();
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const auto jobs = static_cast<std::size_t>(std::max(1, opts.jobs));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < std::min(jobs, runs); ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  for (const auto& d : defects) {
    if (!d.empty()) throw VerificationError(spec_text + ": " + d);
  }

  BenchmarkResult result;
  result.spec = spec_text;
  result.runs = opts.runs;
  result.sizes = sizes;
  for (std::size_t i = 0; i < runs; ++i) result.seeds.push_back(base + i);
  result.best_size = *std::min_element(sizes.begin(), sizes.end());
  double sum = 0.0;
  for (auto s : sizes) sum += static_cast<double>(s);
  result.avg_size = sum / static_cast<double>(runs);
  if (runs > 1) {
    double sq = 0.0;
    for (auto s : sizes) {
      const double d = static_cast<double>(s) - result.avg_size;
      sq += d * d;
    }
    result.stddev = std::sqrt(sq / static_cast<double>(runs - 1));
  }
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

inline std::string fixed5(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", x);
  return buf;
}

// "spec,runs,best,avg,stddev"; the spec field is quoted since it holds commas.
inline std::string render_csv(const std::vector<BenchmarkResult>& results) {
  std::ostringstream os;
  os << "spec,runs,best,avg,stddev\n";
  for (const auto& r : results) {
    os << '"' << r.spec << "\"," << r.runs << ',' << r.best_size << ','
       << fixed5(r.avg_size) << ',' << fixed5(r.stddev) << '\n';
  }
  return os.str();
}

// Human-readable table plus per-run sizes. Wall time is left out so the
// output stays byte-stable.
inline std::string render_text(const std::vector<BenchmarkResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << "# " << r.spec << '\n'
       << "runs=" << r.runs << " best=" << r.best_size
       << " avg=" << fixed5(r.avg_size) << " stddev=" << fixed5(r.stddev)
       << '\n';
    for (std::size_t i = 0; i < r.sizes.size(); ++i) {
      os << "  seed=" << r.seeds[i] << " size=" << r.sizes[i] << '\n';
    }
  }
  return os.str();
}

}  // namespace habcsm::bench

#endif  // HABCSM_BENCH_HPP_
