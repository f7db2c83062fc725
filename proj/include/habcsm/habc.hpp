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

// Hybrid artificial bee colony search. Employed and onlooker bees move food
// sources with the particle-swarm velocity rule instead of the classic ABC
// neighbourhood step; scouts restart stagnant sources from their personal
// best.

#ifndef HABCSM_HABC_HPP_
#define HABCSM_HABC_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "habcsm/interaction.hpp"
#include "habcsm/model.hpp"

namespace habcsm {

// Seeded random stream. Draws are derived from raw mt19937_64 output so
// sequences are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). n must be > 0.
  std::size_t below(std::size_t n) {
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

 private:
  std::mt19937_64 engine_;
};

struct SearchConfig {
  int n_bee = 5;
  int n_food = 3;  // ceil(n_bee / 2)
  int mcn = 1000;
  int limit = 100;
  double c1 = 2.0;
  double c2 = 2.0;
  double w = 0.9;
  // Vmax_j = vmax_scale * (v_j - 1).
  double vmax_scale = 1.0;
  std::uint64_t seed = 0;

  // Sets the bee count and derives the food-source count from it.
  SearchConfig& with_bees(int bees) {
    n_bee = bees;
    n_food = (bees + 1) / 2;
    return *this;
  }

  void validate() const {
    auto bad = [](const std::string& what) {
      throw std::invalid_argument("SearchConfig: " + what);
    };
    if (n_bee < 2) bad("n_bee must be >= 2");
    if (n_food < 1) bad("n_food must be >= 1");
    if (n_food > n_bee) bad("n_food must not exceed n_bee");
    if (mcn < 1) bad("mcn must be >= 1");
    if (limit < 1) bad("limit must be >= 1");
    if (!(c1 >= 0.0) || !(c2 >= 0.0)) bad("c1 and c2 must be >= 0");
    if (!(w > 0.0 && w <= 1.0)) bad("w must be in (0, 1]");
    if (!(vmax_scale > 0.0)) bad("vmax_scale must be > 0");
  }

  double vmax(int cardinality) const {
    return vmax_scale * static_cast<double>(cardinality - 1);
  }
};

struct FoodSource {
  std::vector<double> position;
  std::vector<double> velocity;
  TestCase test_case;
  std::size_t weight = 0;
  std::vector<double> pbest_position;
  TestCase pbest_test_case;
  std::size_t pbest_weight = 0;
  int trial = 0;

  friend bool operator==(const FoodSource&, const FoodSource&) = default;
};

struct SwarmState {
  std::vector<FoodSource> sources;
  std::vector<double> gbest_position;
  TestCase gbest_test_case;
  std::size_t gbest_weight = 0;

  friend bool operator==(const SwarmState&, const SwarmState&) = default;
};

// Nearest value index, halves rounded up, clamped into range.
inline TestCase discretize(std::span<const double> position,
                           const ParameterSystem& sys) {
  TestCase tc;
  tc.values.resize(position.size());
  for (std::size_t j = 0; j < position.size(); ++j) {
    const double r = std::floor(position[j] + 0.5);
    const double hi = static_cast<double>(sys.cardinality(j) - 1);
    tc.values[j] = static_cast<int>(std::clamp(r, 0.0, hi));
  }
  return tc;
}

// ABC fitness of a minimised objective value.
inline double fitness_transform(double f) {
  return f >= 0.0 ? 1.0 / (1.0 + f) : 1.0 + std::fabs(f);
}

// Roulette-wheel probabilities proportional to fitness.
inline std::vector<double> selection_probabilities(std::span<const double> fits) {
  if (fits.empty()) {
    throw std::invalid_argument("selection_probabilities: empty input");
  }
  double sum = 0.0;
  for (double f : fits) {
    if (!(f > 0.0)) {
      throw std::invalid_argument("selection_probabilities: non-positive fit");
    }
    sum += f;
  }
  std::vector<double> p(fits.size());
  for (std::size_t i = 0; i < fits.size(); ++i) p[i] = fits[i] / sum;
  return p;
}

// Scout abandonment threshold: c * ne * d, ne unemployed bees, d dimensions.
inline int compute_limit(double c, int ne, int d) {
  if (!(c > 0.0) || ne < 1 || d < 1) {
    throw std::invalid_argument("compute_limit: inputs must be positive");
  }
  return static_cast<int>(std::lround(c * ne * d));
}

// Index drawn with the given probabilities.
inline std::size_t roulette_select(std::span<const double> probabilities,
                                   Rng& rng) {
  const double r = rng.uniform01();
  double acc = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    acc += probabilities[i];
    if (r < acc) return i;
  }
  return probabilities.size() - 1;
}

namespace detail {

inline void evaluate(FoodSource& fs, const ParameterSystem& sys,
                     const TupleUniverse& u) {
  fs.test_case = discretize(fs.position, sys);
  fs.weight = u.coverage_weight(fs.test_case);
}

// Greedy replacement on >=. Only a strict gain resets the trial counter, so a
// source drifting on a plateau still becomes a scout. Returns true when the
// pbest moved.
inline bool greedy_update(FoodSource& fs) {
  if (fs.weight >= fs.pbest_weight) {
    fs.trial = fs.weight > fs.pbest_weight ? 0 : fs.trial + 1;
    fs.pbest_position = fs.position;
    fs.pbest_test_case = fs.test_case;
    fs.pbest_weight = fs.weight;
    return true;
  }
  ++fs.trial;
  return false;
}

inline void refresh_gbest(SwarmState& state) {
  for (const auto& fs : state.sources) {
    if (fs.pbest_weight >= state.gbest_weight) {
      state.gbest_weight = fs.pbest_weight;
      state.gbest_position = fs.pbest_position;
      state.gbest_test_case = fs.pbest_test_case;
    }
  }
}

}  // namespace detail

inline SwarmState init_swarm(const ParameterSystem& sys, const TupleUniverse& u,
                             const SearchConfig& cfg, Rng& rng) {
  const auto p = sys.size();
  SwarmState state;
  state.sources.resize(static_cast<std::size_t>(cfg.n_food));
  for (auto& fs : state.sources) {
    fs.position.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
      fs.position[j] =
          rng.uniform01() * static_cast<double>(sys.cardinality(j) - 1);
    }
    fs.velocity.assign(p, 0.0);
    detail::evaluate(fs, sys, u);
    fs.pbest_position = fs.position;
    fs.pbest_test_case = fs.test_case;
    fs.pbest_weight = fs.weight;
    fs.trial = 0;
  }
  const auto& first = state.sources.front();
  state.gbest_position = first.pbest_position;
  state.gbest_test_case = first.pbest_test_case;
  state.gbest_weight = first.pbest_weight;
  detail::refresh_gbest(state);
  return state;
}

// One velocity/position step toward pbest and `gbest`, then re-evaluation.
// Does not touch pbest or trial.
inline void pso_update(FoodSource& fs, std::span<const double> gbest,
                       const ParameterSystem& sys, const TupleUniverse& u,
                       const SearchConfig& cfg, Rng& rng) {
  for (std::size_t j = 0; j < fs.position.size(); ++j) {
    const double r1 = rng.uniform01();
    const double r2 = rng.uniform01();
    const double x = fs.position[j];
    double v = cfg.w * fs.velocity[j] + cfg.c1 * r1 * (fs.pbest_position[j] - x) +
               cfg.c2 * r2 * (gbest[j] - x);
    const double vmax = cfg.vmax(sys.cardinality(j));
    v = std::clamp(v, -vmax, vmax);
    fs.velocity[j] = v;
    fs.position[j] = std::clamp(
        x + v, 0.0, static_cast<double>(sys.cardinality(j) - 1));
  }
  detail::evaluate(fs, sys, u);
}

inline void employed_phase(SwarmState& state, const TupleUniverse& u,
                           const SearchConfig& cfg, Rng& rng) {
  const auto& sys = u.system();
  for (auto& fs : state.sources) {
    pso_update(fs, state.gbest_position, sys, u, cfg, rng);
    detail::greedy_update(fs);
  }
  detail::refresh_gbest(state);
}

// Objective minimised by the colony: tuples a source leaves uncovered.
inline double source_objective(const FoodSource& fs, const TupleUniverse& u) {
  return static_cast<double>(u.uncovered_total()) -
         static_cast<double>(fs.weight);
}

inline void onlooker_phase(SwarmState& state, const TupleUniverse& u,
                           const SearchConfig& cfg, Rng& rng) {
  const auto& sys = u.system();
  const int onlookers = cfg.n_bee - cfg.n_food;
  for (int b = 0; b < onlookers; ++b) {
    std::vector<double> fits(state.sources.size());
    for (std::size_t i = 0; i < fits.size(); ++i) {
      fits[i] = fitness_transform(source_objective(state.sources[i], u));
    }
    const auto probs = selection_probabilities(fits);
    auto& fs = state.sources[roulette_select(probs, rng)];
    pso_update(fs, state.gbest_position, sys, u, cfg, rng);
    detail::greedy_update(fs);
    detail::refresh_gbest(state);
  }
}

inline void scout_phase(SwarmState& state, const TupleUniverse& u,
                        const SearchConfig& cfg, Rng& rng) {
  const auto& sys = u.system();
  for (auto& fs : state.sources) {
    if (fs.trial <= cfg.limit) continue;
    fs.position = fs.pbest_position;
    // Fresh velocity; it is kept even if the position is restored below.
    for (std::size_t j = 0; j < fs.velocity.size(); ++j) {
      const double vmax = cfg.vmax(sys.cardinality(j));
      fs.velocity[j] = (2.0 * rng.uniform01() - 1.0) * vmax;
    }
    pso_update(fs, state.gbest_position, sys, u, cfg, rng);
    if (fs.weight >= fs.pbest_weight) {
      fs.pbest_position = fs.position;
      fs.pbest_test_case = fs.test_case;
      fs.pbest_weight = fs.weight;
    } else {
      fs.position = fs.pbest_position;
      fs.test_case = fs.pbest_test_case;
      fs.weight = fs.pbest_weight;
    }
    fs.trial = 0;
  }
  detail::refresh_gbest(state);
}

struct SearchResult {
  // Distinct best candidates, all of weight `weight`, in source order.
  std::vector<TestCase> tied_best;
  std::size_t weight = 0;
  int cycles = 0;
};

// Called after initialisation (cycle 0) and after every full cycle.
using SearchObserver = std::function<void(int cycle, const SwarmState&)>;

inline SearchResult search_best_candidate(const ParameterSystem& sys,
                                          const TupleUniverse& u,
                                          const SearchConfig& cfg, Rng& rng,
                                          const SearchObserver& observer = {}) {
  const auto target = u.uncovered_total();
  SwarmState state = init_swarm(sys, u, cfg, rng);
  if (observer) observer(0, state);
  int cycle = 0;
  while (cycle < cfg.mcn && state.gbest_weight < target) {
    ++cycle;
    employed_phase(state, u, cfg, rng);
    onlooker_phase(state, u, cfg, rng);
    scout_phase(state, u, cfg, rng);
    if (observer) observer(cycle, state);
  }

  SearchResult out;
  out.weight = state.gbest_weight;
  out.cycles = cycle;
  auto add = [&](const TestCase& tc) {
    if (std::find(out.tied_best.begin(), out.tied_best.end(), tc) ==
        out.tied_best.end()) {
      out.tied_best.push_back(tc);
    }
  };
  for (const auto& fs : state.sources) {
    if (fs.pbest_weight == state.gbest_weight) add(fs.pbest_test_case);
  }
  add(state.gbest_test_case);
  return out;
}

}  // namespace habcsm

#endif  // HABCSM_HABC_HPP_
