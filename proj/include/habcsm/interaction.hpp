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

#ifndef HABCSM_INTERACTION_HPP_
#define HABCSM_INTERACTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "habcsm/model.hpp"

namespace habcsm {

// A t-sized set of columns that must be covered at strength t.
struct ColumnCombination {
  std::vector<std::size_t> columns;
  // Index into StrengthSpec::subs that first produced this combination;
  // empty for the main strength.
  std::optional<std::size_t> sub_id;

  std::size_t strength() const noexcept { return columns.size(); }

  friend bool operator==(const ColumnCombination&,
                         const ColumnCombination&) = default;
};

// All C(p, t) t-subsets of {0..p-1} in lexicographic order.
inline std::vector<ColumnCombination> enumerate_combinations(std::size_t p,
                                                             std::size_t t) {
  if (t < 1 || t > p) {
    throw std::invalid_argument("enumerate_combinations: need 1 <= t <= P, got t=" +
                                std::to_string(t) + " P=" + std::to_string(p));
  }
  std::vector<ColumnCombination> out;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    out.push_back({idx, std::nullopt});
    // Advance the rightmost index that still has room.
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == p - t + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t k = i; k < t; ++k) idx[k] = idx[k - 1] + 1;
  }
  return out;
}

// Mixed-radix index of `assignment` over `comb`: row-major, last column
// varying fastest. Throws std::out_of_range for an invalid value.
inline std::size_t tuple_index(const ColumnCombination& comb,
                               std::span<const int> assignment,
                               const ParameterSystem& sys) {
  if (assignment.size() != comb.columns.size()) {
    throw std::out_of_range("tuple_index: assignment width mismatch");
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < comb.columns.size(); ++k) {
    const int radix = sys.cardinality(comb.columns[k]);
    if (assignment[k] < 0 || assignment[k] >= radix) {
      throw std::out_of_range("tuple_index: value " +
                              std::to_string(assignment[k]) + " not in [0," +
                              std::to_string(radix) + ")");
    }
    index = index * static_cast<std::size_t>(radix) +
            static_cast<std::size_t>(assignment[k]);
  }
  return index;
}

// Inverse of tuple_index.
inline std::vector<int> tuple_assignment(const ColumnCombination& comb,
                                         std::size_t index,
                                         const ParameterSystem& sys) {
  std::vector<int> out(comb.columns.size());
  for (std::size_t k = comb.columns.size(); k-- > 0;) {
    const auto radix = static_cast<std::size_t>(sys.cardinality(comb.columns[k]));
    out[k] = static_cast<int>(index % radix);
    index /= radix;
  }
  if (index != 0) throw std::out_of_range("tuple_assignment: index too large");
  return out;
}

// Every required interaction tuple with its covered flag.
//
// Each combination owns a contiguous slice of one flag array; the slice for
// a combination over columns c_0..c_{t-1} has prod v_{c_k} entries indexed
// by tuple_index. Weight queries use cached strides so a row costs one
// multiply-add per column per combination.
class TupleUniverse {
 public:
  TupleUniverse(ParameterSystem sys, StrengthSpec spec)
      : system_(std::move(sys)), spec_(std::move(spec)) {
    validate_strength(system_, spec_);
    std::set<std::vector<std::size_t>> seen;
    auto add = [&](std::vector<ColumnCombination> combs) {
      for (auto& c : combs) {
        if (seen.insert(c.columns).second) append(std::move(c));
      }
    };
    add(enumerate_combinations(system_.size(),
                               static_cast<std::size_t>(spec_.main_strength)));
    for (std::size_t s = 0; s < spec_.subs.size(); ++s) {
      const auto& sub = spec_.subs[s];
      auto local = enumerate_combinations(sub.columns.size(),
                                          static_cast<std::size_t>(sub.strength));
      for (auto& c : local) {
        for (auto& col : c.columns) col = sub.columns[col];
        c.sub_id = s;
      }
      add(std::move(local));
    }
    flags_.assign(total_, 0);
    uncovered_ = total_;
  }

  const ParameterSystem& system() const noexcept { return system_; }
  const StrengthSpec& spec() const noexcept { return spec_; }
  const std::vector<ColumnCombination>& combinations() const noexcept {
    return combinations_;
  }

  std::size_t total() const noexcept { return total_; }
  std::size_t uncovered_total() const noexcept { return uncovered_; }
  bool complete() const noexcept { return uncovered_ == 0; }

  // Flags of combination `c` in tuple_index order; nonzero = covered.
  std::span<const std::uint8_t> flags(std::size_t c) const {
    return {flags_.data() + offsets_[c], offsets_[c + 1] - offsets_[c]};
  }

  bool is_covered(std::size_t c, std::span<const int> assignment) const {
    return flags_[offsets_[c] + tuple_index(combinations_[c], assignment,
                                            system_)] != 0;
  }

  // Number of uncovered tuples `tc` would cover. Read-only.
  std::size_t coverage_weight(const TestCase& tc) const {
    std::size_t weight = 0;
    for (std::size_t c = 0; c < combinations_.size(); ++c) {
      weight += flags_[slot(c, tc)] == 0 ? 1 : 0;
    }
    return weight;
  }

  // Marks every tuple `tc` hits; returns how many were newly covered.
  std::size_t mark_covered(const TestCase& tc) {
    std::size_t fresh = 0;
    for (std::size_t c = 0; c < combinations_.size(); ++c) {
      auto& f = flags_[slot(c, tc)];
      if (f == 0) {
        f = 1;
        ++fresh;
      }
    }
    uncovered_ -= fresh;
    return fresh;
  }

  // First uncovered tuple in storage order, as (combination, assignment).
  std::optional<std::pair<std::size_t, std::vector<int>>> first_uncovered()
      const {
    for (std::size_t c = 0; c < combinations_.size(); ++c) {
      for (std::size_t i = offsets_[c]; i < offsets_[c + 1]; ++i) {
        if (flags_[i] == 0) {
          return std::make_pair(
              c, tuple_assignment(combinations_[c], i - offsets_[c], system_));
        }
      }
    }
    return std::nullopt;
  }

 private:
  void append(ColumnCombination comb) {
    std::vector<std::size_t> strides(comb.columns.size());
    std::size_t product = 1;
    for (std::size_t k = comb.columns.size(); k-- > 0;) {
      strides[k] = product;
      product *= static_cast<std::size_t>(system_.cardinality(comb.columns[k]));
    }
    if (offsets_.empty()) offsets_.push_back(0);
    total_ += product;
    offsets_.push_back(total_);
    strides_.push_back(std::move(strides));
    combinations_.push_back(std::move(comb));
  }

  std::size_t slot(std::size_t c, const TestCase& tc) const {
    const auto& cols = combinations_[c].columns;
    const auto& strides = strides_[c];
    std::size_t i = offsets_[c];
    for (std::size_t k = 0; k < cols.size(); ++k) {
      i += strides[k] * static_cast<std::size_t>(tc.values[cols[k]]);
    }
    return i;
  }

  ParameterSystem system_;
  StrengthSpec spec_;
  std::vector<ColumnCombination> combinations_;
  std::vector<std::vector<std::size_t>> strides_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint8_t> flags_;
  std::size_t total_ = 0;
  std::size_t uncovered_ = 0;
};

inline TupleUniverse build_universe(const ParameterSystem& sys,
                                    const StrengthSpec& spec) {
  return TupleUniverse(sys, spec);
}

inline std::size_t coverage_weight(const TestCase& tc,
                                   const TupleUniverse& u) {
  return u.coverage_weight(tc);
}

inline std::size_t mark_covered(const TestCase& tc, TupleUniverse& u) {
  return u.mark_covered(tc);
}

}  // namespace habcsm

#endif  // HABCSM_INTERACTION_HPP_
