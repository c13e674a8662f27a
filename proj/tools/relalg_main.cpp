/*
 *   Copyright 2026 The relalg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// relalg: classify edge-list graphs, run the relational path algorithms
// with optional trace output, and sweep the law catalog.
//
// Exit codes: 0 success, 1 law counterexample or inconclusive law,
// 2 usage or parse error, 3 algorithm precondition violated, 4 internal
// invariant failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relalg/algorithms.hpp"
#include "relalg/edgelist.hpp"
#include "relalg/laws.hpp"
#include "relalg/predicates.hpp"
#include "relalg/relation.hpp"
#include "relalg/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

relalg::Relation read_input(const std::string& source) {
  std::ostringstream text;
  if (source == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream file(source);
    if (!file) {
      throw UsageError("cannot open " + source);
    }
    text << file.rdbuf();
  }
  return relalg::parse_edge_list(text.str());
}

std::string render_var(const relalg::Relation& r) {
  if (r.size() <= 8) {
    return std::to_string(r.encoding());
  }
  return relalg::to_pair_string(r);
}

// Trace and choice log as '#' comments, so the command output still parses
// as an edge-list document.
void print_trace(const relalg::AlgorithmRun& run) {
  for (std::size_t i = 0; i < run.choices.size(); ++i) {
    const relalg::ChoiceRecord& c = run.choices[i];
    std::cout << "# choice " << i << ": "
              << (c.op == relalg::ChoiceOp::Point ? "point" : "atom")
              << " from " << render_var(c.input) << " -> "
              << render_var(c.chosen) << "\n";
  }
  for (const relalg::TraceStep& step : run.trace.steps) {
    std::cout << "# step " << step.iteration << ":";
    for (const auto& [name, value] : step.vars) {
      std::cout << " " << name << "=" << render_var(value);
    }
    std::cout << "\n";
    if (!step.checks.empty()) {
      std::cout << "# step " << step.iteration << " checks:";
      for (const auto& [name, ok] : step.checks) {
        std::cout << " [" << name << "]=" << (ok ? "yes" : "no");
      }
      std::cout << "\n";
    }
  }
}

int cmd_classify(const std::string& source, bool dot) {
  const relalg::Relation r = read_input(source);
  if (dot) {
    std::cout << relalg::render_dot(r);
    return kExitOk;
  }
  const relalg::PathClass cls = relalg::classify(r);
  if (cls == relalg::PathClass::NotAPath) {
    const char* reason = !relalg::is_univalent(r)   ? "not univalent"
                         : !relalg::is_injective(r) ? "not injective"
                                                    : "not connected";
    std::cout << "NotAPath (" << reason << ")\n";
    return kExitOk;
  }
  if (cls == relalg::PathClass::FiniteChain) {
    const auto seq = relalg::path_to_sequence(r);
    std::cout << "FiniteChain, start=" << seq.front() << ", end=" << seq.back()
              << "\n";
  } else {
    std::cout << relalg::to_string(cls) << "\n";
    std::cout << "start=none, end=none\n";
  }
  for (const relalg::TerminationKind k :
       {relalg::TerminationKind::BackwardTerminating,
        relalg::TerminationKind::ForwardTerminating,
        relalg::TerminationKind::Terminating,
        relalg::TerminationKind::BackwardFinite,
        relalg::TerminationKind::ForwardFinite,
        relalg::TerminationKind::Finite}) {
    std::cout << relalg::to_string(k) << ": "
              << (relalg::has_termination(r, k) ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int run_and_print(const relalg::AlgorithmRun& run, bool trace, bool dot) {
  if (trace) print_trace(run);
  if (dot) {
    std::cout << relalg::render_dot(run.result);
  } else {
    std::cout << relalg::render_edge_list(run.result);
    std::cout << "sequence:";
    for (const int v : relalg::path_to_sequence(run.result)) {
      std::cout << " " << v;
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_path(const std::string& source, int from, int to, bool trace,
             bool no_check, bool dot) {
  const relalg::Relation d = read_input(source);
  if (from < 0 || from >= d.size() || to < 0 || to >= d.size()) {
    throw UsageError("vertex index out of range for universe of size " +
                     std::to_string(d.size()));
  }
  const relalg::Relation x = relalg::Relation::point_at(d.universe(), from);
  const relalg::Relation y = relalg::Relation::point_at(d.universe(), to);
  return run_and_print(relalg::construct_path(d, x, y, !no_check), trace, dot);
}

int cmd_topsort(const std::string& source, bool trace, bool no_check,
                bool dot) {
  const relalg::Relation r = read_input(source);
  return run_and_print(relalg::topological_sort(r, !no_check), trace, dot);
}

int cmd_cycle(const std::string& source, bool trace, bool no_check, bool dot) {
  const relalg::Relation r = read_input(source);
  return run_and_print(relalg::construct_cycle(r, !no_check), trace, dot);
}

int cmd_check(int n, const std::string& mode, long long samples,
              std::uint64_t seed, const std::vector<std::string>& laws,
              const std::string& format, int workers) {
  relalg::SweepMode sweep;
  if (mode == "exhaustive") {
    if (n > 4) throw UsageError("exhaustive bound is 4");
    sweep = relalg::SweepMode::exhaustive();
  } else if (mode == "random") {
    sweep = relalg::SweepMode::random(samples, seed);
  } else {
    throw UsageError("unknown mode: " + mode);
  }

  relalg::SuiteOptions opts;
  opts.workers = workers;
  const relalg::SuiteReport report =
      relalg::run_suite(relalg::Universe(n), sweep, laws, opts);

  if (format == "machine") {
    std::cout << relalg::render_report_machine(report);
  } else if (format == "text") {
    std::cout << relalg::render_report_text(report);
  } else {
    throw UsageError("unknown format: " + format);
  }
  return (report.counterexamples == 0 && report.inconclusive == 0)
             ? kExitOk
             : kExitLawFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model relation algebra: path taxonomy, algorithms, "
               "law sweeps"};
  app.require_subcommand(1);

  std::string input = "-";
  int from = 0, to = 0;
  bool trace = false, no_check = false, dot = false;
  int n = 3;
  std::string mode = "exhaustive", format = "text";
  long long samples = 1000;
  std::uint64_t seed = 0;
  std::vector<std::string> laws;
  int workers = 1;

  CLI::App* classify =
      app.add_subcommand("classify", "classify a graph as a path class");
  classify->add_option("input", input, "edge-list file, or - for stdin");
  classify->add_flag("--dot", dot, "emit the input graph as DOT instead");

  CLI::App* path = app.add_subcommand(
      "path", "construct the path between two vertices of an acyclic graph");
  path->add_option("--from", from, "start vertex")->required();
  path->add_option("--to", to, "end vertex")->required();
  path->add_option("input", input, "edge-list file, or - for stdin");
  path->add_flag("--trace", trace, "emit loop-head snapshots as # comments");
  path->add_flag("--no-check", no_check, "skip contract checking");
  path->add_flag("--dot", dot, "emit the result as DOT instead");

  CLI::App* topsort =
      app.add_subcommand("topsort", "arrange all vertices in a chain "
                                    "respecting the dependencies");
  topsort->add_option("input", input, "edge-list file, or - for stdin");
  topsort->add_flag("--trace", trace, "emit loop-head snapshots as # comments");
  topsort->add_flag("--no-check", no_check, "skip contract checking");
  topsort->add_flag("--dot", dot, "emit the result as DOT instead");

  CLI::App* cycle =
      app.add_subcommand("cycle", "extract a non-empty cycle from a graph");
  cycle->add_option("input", input, "edge-list file, or - for stdin");
  cycle->add_flag("--trace", trace, "emit loop-head snapshots as # comments");
  cycle->add_flag("--no-check", no_check, "skip contract checking");
  cycle->add_flag("--dot", dot, "emit the result as DOT instead");

  CLI::App* check =
      app.add_subcommand("check", "sweep the law catalog over a universe");
  check->add_option("--n", n, "universe size")->required();
  check->add_option("--mode", mode, "exhaustive or random");
  check->add_option("--samples", samples, "random instances per law");
  check->add_option("--seed", seed, "random seed");
  check->add_option("--laws", laws, "law ids (default: all built-in laws)")
      ->delimiter(',');
  check->add_option("--format", format, "text or machine");
  check->add_option("--workers", workers, "sweep worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(input, dot);
    if (path->parsed()) {
      return cmd_path(input, from, to, trace, no_check, dot);
    }
    if (topsort->parsed()) return cmd_topsort(input, trace, no_check, dot);
    if (cycle->parsed()) return cmd_cycle(input, trace, no_check, dot);
    return cmd_check(n, mode, samples, seed, laws, format, workers);
  } catch (const relalg::ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const relalg::AlgError& e) {
    if (e.kind() == relalg::AlgError::Kind::PreconditionViolated) {
      std::cerr << "error: Pre: " << e.clause() << "\n";
      return kExitPrecondition;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
