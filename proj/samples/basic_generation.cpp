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

// Generates a pairwise set for a mixed system and checks it.

#include <iostream>

#include "habcsm/habcsm.hpp"

int main() {
  const auto problem = habcsm::parse_spec("MCA(N;2,3^6 2^4)");

  habcsm::GenerationOptions opts;
  opts.search.seed = 7;
  const auto report = habcsm::generate_test_set(problem, opts);

  std::cout << habcsm::io::render_test_set(report.test_set, problem.system,
                                           habcsm::to_spec_string(problem),
                                           habcsm::io::Format::kText);

  const auto check = habcsm::verifier::verify_coverage(report.test_set, problem);
  std::cout << (check.complete() ? "complete" : "INCOMPLETE") << '\n';
  return check.complete() ? 0 : 1;
}
