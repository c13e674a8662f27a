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

// End-to-end checks of the `relalg` binary: golden transcripts, the exit-code
// contract, and machine-format interop.  The binary's path arrives via the
// RELALG_CLI environment variable (set by the test harness).

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "relalg/edgelist.hpp"
#include "relalg/relation.hpp"
#include "relalg/sweep.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args, const std::string& input = "") {
  const char* bin = std::getenv("RELALG_CLI");
  if (bin == nullptr) {
    throw std::runtime_error("RELALG_CLI is not set; run under ctest");
  }
  static int counter = 0;
  const std::string stdin_path =
      (std::filesystem::temp_directory_path() /
       ("relalg_cli_" + std::to_string(::getpid()) + "_" +
        std::to_string(counter++) + ".in"))
          .string();
  {
    std::ofstream out(stdin_path, std::ios::binary);
    out << input;
  }
  const std::string cmd = "'" + std::string(bin) + "' " + args + " < '" +
                          stdin_path + "' 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("popen failed for: " + cmd);
  }
  CliResult result;
  char buffer[4096];
  size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = ::pclose(pipe);
  std::filesystem::remove(stdin_path);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const std::string kChain3 = "n 3\n0 1\n1 2\n";
const std::string kTwoCycle = "n 2\n0 1\n1 0\n";

}  // namespace

TEST_CASE("classify golden transcripts") {
  const CliResult chain = run_cli("classify -", kChain3);
  CHECK(chain.code == 0);
  CHECK(chain.output ==
        "FiniteChain, start=0, end=2\n"
        "BackwardTerminating: yes\n"
        "ForwardTerminating: yes\n"
        "Terminating: yes\n"
        "BackwardFinite: yes\n"
        "ForwardFinite: yes\n"
        "Finite: yes\n");

  const CliResult cycle = run_cli("classify -", kTwoCycle);
  CHECK(cycle.code == 0);
  CHECK(cycle.output ==
        "Cycle\n"
        "start=none, end=none\n"
        "BackwardTerminating: no\n"
        "ForwardTerminating: no\n"
        "Terminating: no\n"
        "BackwardFinite: yes\n"
        "ForwardFinite: yes\n"
        "Finite: yes\n");

  const CliResult empty = run_cli("classify -", "n 1\n");
  CHECK(empty.code == 0);
  CHECK(empty.output ==
        "Empty\n"
        "start=none, end=none\n"
        "BackwardTerminating: yes\n"
        "ForwardTerminating: yes\n"
        "Terminating: yes\n"
        "BackwardFinite: yes\n"
        "ForwardFinite: yes\n"
        "Finite: yes\n");

  const CliResult branching = run_cli("classify -", "n 2\n0 0\n0 1\n");
  CHECK(branching.code == 0);
  CHECK(branching.output == "NotAPath (not univalent)\n");
}

TEST_CASE("construction golden transcripts") {
  const CliResult topsort = run_cli("topsort -", "n 3\n0 2\n1 2\n");
  CHECK(topsort.code == 0);
  CHECK(topsort.output == "n 3\n0 1\n1 2\nsequence: 0 1 2\n");

  const CliResult path =
      run_cli("path - --from 0 --to 3", "n 4\n0 1\n1 2\n2 3\n");
  CHECK(path.code == 0);
  CHECK(path.output == "n 4\n0 1\n1 2\n2 3\nsequence: 0 1 2 3\n");

  const CliResult cycle = run_cli("cycle -", kTwoCycle);
  CHECK(cycle.code == 0);
  CHECK(cycle.output == "n 2\n0 1\n1 0\nsequence: 0 1\n");
}

TEST_CASE("exit code contract") {
  SUBCASE("0: success") {
    CHECK(run_cli("classify -", kChain3).code == 0);
    CHECK(run_cli("--help").code == 0);
  }
  SUBCASE("1: sweep found a counterexample or was inconclusive") {
    const CliResult ce = run_cli("check --n 2 --laws mut-osc10");
    CHECK(ce.code == 1);
    CHECK(ce.output.find("Counterexample") != std::string::npos);
    const CliResult inc = run_cli("check --n 1 --laws fig2-asymmetry");
    CHECK(inc.code == 1);
    CHECK(inc.output.find("Inconclusive") != std::string::npos);
  }
  SUBCASE("2: unusable input or arguments") {
    const CliResult parse = run_cli("classify -", "0 1\n");
    CHECK(parse.code == 2);
    CHECK(parse.output ==
          "parse error at line 1: expected header \"n <N>\" before edges\n");

    const CliResult bound = run_cli("check --n 5 --laws tarski");
    CHECK(bound.code == 2);
    CHECK(bound.output == "error: exhaustive bound is 4\n");

    const CliResult unknown = run_cli("check --n 2 --laws nope");
    CHECK(unknown.code == 2);
    CHECK(unknown.output == "error: run_suite: unknown law id: nope\n");

    const CliResult range =
        run_cli("path - --from 0 --to 5", "n 4\n0 1\n");
    CHECK(range.code == 2);
    CHECK(range.output ==
          "error: vertex index out of range for universe of size 4\n");

    CHECK(run_cli("bogus").code == 2);
  }
  SUBCASE("3: precondition rejected the input") {
    const CliResult acyclic = run_cli("cycle -", kChain3);
    CHECK(acyclic.code == 3);
    CHECK(acyclic.output == "error: Pre: R⁺ ∩ I ≠ O\n");
  }
  SUBCASE("4: internal failure surfaced by an unchecked run") {
    // Without the precondition gate the cycle constructor walks off the
    // acyclic graph and its point chooser runs dry.
    const CliResult dry = run_cli("cycle - --no-check", kChain3);
    CHECK(dry.code == 4);
    CHECK(dry.output == "error: empty choice: choose_point on empty vector\n");
  }
}

TEST_CASE("trace lines are comments around a parseable result") {
  const CliResult traced = run_cli("topsort - --trace", "n 3\n0 2\n1 2\n");
  CHECK(traced.code == 0);
  std::istringstream in(traced.output);
  std::string line;
  std::string payload;
  int comment_lines = 0;
  bool saw_choice = false;
  bool saw_checks = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') {
      ++comment_lines;
      saw_choice = saw_choice || line.find("# choice") == 0;
      saw_checks = saw_checks || line.find("checks:") != std::string::npos;
      continue;
    }
    if (line.find("sequence:") == 0) continue;
    payload += line + "\n";
  }
  CHECK(comment_lines > 0);
  CHECK(saw_choice);
  CHECK(saw_checks);
  CHECK(relalg::parse_edge_list(payload) ==
        relalg::Relation::from_pairs(relalg::Universe(3), {{0, 1}, {1, 2}}));
  // The non-comment remainder is exactly the untraced transcript.
  const CliResult plain = run_cli("topsort -", "n 3\n0 2\n1 2\n");
  CHECK(payload + "sequence: 0 1 2\n" == plain.output);
}

TEST_CASE("dot output replaces the edge list") {
  const CliResult classify = run_cli("classify - --dot", kChain3);
  CHECK(classify.code == 0);
  CHECK(classify.output ==
        "digraph g {\n  0;\n  1;\n  2;\n  0 -> 1;\n  1 -> 2;\n}\n");

  const CliResult cycle = run_cli("cycle - --dot", kTwoCycle);
  CHECK(cycle.code == 0);
  CHECK(cycle.output ==
        "digraph g {\n  0;\n  1;\n  0 -> 1;\n  1 -> 0;\n}\n");
  CHECK(cycle.output.find("sequence:") == std::string::npos);
}

TEST_CASE("machine reports from the binary parse back losslessly") {
  const CliResult out =
      run_cli("check --n 2 --laws tarski,mut-osc10 --format machine");
  CHECK(out.code == 1);  // the mutation contributes a counterexample
  const relalg::SuiteReport report = relalg::parse_report_machine(out.output);
  CHECK(report.n == 2);
  CHECK(report.laws.size() == 2);
  CHECK(report.holds == 1);
  CHECK(report.counterexamples == 1);
  CHECK(relalg::render_report_machine(report) == out.output);
}

TEST_CASE("repeated invocations are byte-identical") {
  const std::string args =
      "check --n 3 --laws concat,term-12 --format machine";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  CHECK(first.code == 0);
  CHECK(first.output == second.output);
  const CliResult parallel = run_cli(args + " --workers 3");
  CHECK(first.output == parallel.output);
}
