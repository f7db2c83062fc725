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

// habcsm: generate, benchmark and verify combinatorial test sets.
//
// Exit status: 0 success, 1 usage, 2 spec syntax error, 3 validation error,
// 4 verification failure, 5 I/O error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "habcsm/bench.hpp"
#include "habcsm/interaction.hpp"
#include "habcsm/io.hpp"
#include "habcsm/model.hpp"
#include "habcsm/strategy.hpp"
#include "habcsm/verifier.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kSyntax = 2,
  kValidation = 3,
  kVerification = 4,
  kIo = 5,
};

struct Knobs {
  std::uint64_t seed = 0;
  int nbee = 5;
  int mcn = 1000;
  int limit = 100;
  double c1 = 2.0;
  double c2 = 2.0;
  double w = 0.9;
  std::string distance = "hamming";
  std::string aggregate = "sum";

  habcsm::GenerationOptions options() const {
    habcsm::GenerationOptions g;
    g.search.with_bees(nbee);
    g.search.mcn = mcn;
    g.search.limit = limit;
    g.search.c1 = c1;
    g.search.c2 = c2;
    g.search.w = w;
    g.search.seed = seed;
    g.tiebreak.metric = distance == "absolute"
                            ? habcsm::DistanceMetric::kAbsoluteDifference
                            : habcsm::DistanceMetric::kMismatchCount;
    g.tiebreak.aggregate = aggregate == "nearest"
                               ? habcsm::DistanceAggregate::kNearest
                               : habcsm::DistanceAggregate::kSum;
    return g;
  }
};

void add_knobs(CLI::App* cmd, Knobs& k) {
  cmd->add_option("--seed", k.seed, "Random seed (base seed for bench)");
  cmd->add_option("--nbee", k.nbee, "Bee population; food sources = ceil(nbee/2)")
      ->check(CLI::Range(2, 1 << 20));
  cmd->add_option("--mcn", k.mcn, "Maximum cycle number per search")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--limit", k.limit, "Scout trial limit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--c1", k.c1, "Self-confidence factor");
  cmd->add_option("--c2", k.c2, "Swarm-confidence factor");
  cmd->add_option("--w", k.w, "Inertia weight");
  cmd->add_option("--distance", k.distance, "Tie-break row distance")
      ->check(CLI::IsMember({"hamming", "absolute"}));
  cmd->add_option("--aggregate", k.aggregate, "Tie-break aggregation")
      ->check(CLI::IsMember({"sum", "nearest"}));
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    habcsm::io::write_file(out_path, text);
  }
}

habcsm::io::Format parse_format(const std::string& f) {
  return f == "text" ? habcsm::io::Format::kText : habcsm::io::Format::kCsv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial test set generation with a hybrid bee colony"};
  app.require_subcommand(1);

  Knobs knobs;
  std::string spec_text;
  std::vector<std::string> bench_specs;
  std::string out_path;
  std::string format = "csv";
  std::string set_path;
  int runs = 20;
  int jobs = 1;

  auto* gen = app.add_subcommand("generate", "Generate one test set");
  gen->add_option("spec", spec_text, "Specification, e.g. 'CA(N;2,3^4)'")
      ->required();
  add_knobs(gen, knobs);
  gen->add_option("--out", out_path, "Output file (default stdout)");
  gen->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "text"}));

  auto* bench = app.add_subcommand("bench", "Repeat generation and aggregate sizes");
  bench->add_option("spec", bench_specs, "One or more specifications")
      ->required();
  bench->add_option("--runs", runs, "Independent runs per spec")
      ->check(CLI::PositiveNumber);
  bench->add_option("--jobs", jobs, "Concurrent runs")->check(CLI::PositiveNumber);
  add_knobs(bench, knobs);
  bench->add_option("--out", out_path, "Output file (default stdout)");
  bench->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "text"}));

  auto* verify = app.add_subcommand("verify", "Check a CSV test set for coverage");
  verify->add_option("spec", spec_text, "Specification")->required();
  verify->add_option("--set", set_path, "CSV test-set file")->required();

  auto* tuples = app.add_subcommand("tuples", "Count combinations and tuples");
  tuples->add_option("spec", spec_text, "Specification")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      const auto problem = habcsm::parse_spec(spec_text);
      const auto report = habcsm::generate_test_set(problem, knobs.options());
      emit(out_path, habcsm::io::render_test_set(report.test_set, problem.system,
                                                 spec_text, parse_format(format)));
      std::cerr << "size=" << report.test_set.size() << " tuples="
                << report.total_tuples << " seed=" << report.seed << '\n';
    } else if (bench->parsed()) {
      habcsm::bench::BenchmarkOptions opts;
      opts.runs = runs;
      opts.jobs = jobs;
      opts.generation = knobs.options();
      std::vector<habcsm::bench::BenchmarkResult> results;
      for (const auto& s : bench_specs) {
        results.push_back(habcsm::bench::run_benchmark(s, opts));
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
            results.back().wall_time);
        std::cerr << s << ": best=" << results.back().best_size
                  << " avg=" << habcsm::bench::fixed5(results.back().avg_size)
                  << " (" << ms.count() << " ms)\n";
      }
      emit(out_path, format == "text" ? habcsm::bench::render_text(results)
                                      : habcsm::bench::render_csv(results));
    } else if (verify->parsed()) {
      const auto problem = habcsm::parse_spec(spec_text);
      const auto ts = habcsm::io::parse_csv_test_set(
          habcsm::io::read_file(set_path), problem.system);
      const auto report = habcsm::verifier::verify_coverage(ts, problem);
      if (!report.complete()) {
        std::cout << "incomplete: " << report.missing.size() << " of "
                  << report.required << " tuples missing\n";
        for (const auto& m : report.missing) {
          std::cout << "  columns";
          for (auto c : m.columns) std::cout << ' ' << c;
          std::cout << " values";
          for (auto v : m.values) std::cout << ' ' << v;
          std::cout << '\n';
        }
        return kVerification;
      }
      std::cout << "complete: " << ts.size() << " rows cover all "
                << report.required << " tuples\n";
    } else if (tuples->parsed()) {
      const auto problem = habcsm::parse_spec(spec_text);
      const habcsm::TupleUniverse u(problem.system, problem.strength);
      std::cout << "combinations=" << u.combinations().size()
                << " tuples=" << u.total() << '\n';
    }
  } catch (const habcsm::SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == habcsm::SpecError::Kind::kSyntax ? kSyntax : kValidation;
  } catch (const habcsm::io::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const habcsm::io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const habcsm::bench::VerificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerification;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}
