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

// Exhaustive and randomized sweeps of the law catalog over small universes.
//
// Exhaustive mode enumerates every relation tuple (per-slot filters prune
// products where a law's hypothesis permits it); random mode draws
// stratified instances as a pure function of (seed, index).  Either way the
// report is a deterministic function of (universe, mode, law selection) —
// in particular it is independent of the worker count.

#ifndef RELALG_SWEEP_HPP
#define RELALG_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "relalg/laws.hpp"
#include "relalg/relation.hpp"

namespace relalg {

// Streams all 2^(n²) relations on u in increasing integer-encoding order.
// Exhaustive enumeration is capped at n ≤ 4.
class RelationEnumerator {
 public:
  explicit RelationEnumerator(const Universe& u);

  bool has_next() const { return next_code_ < total_; }
  Relation next();
  std::uint64_t total() const { return total_; }

 private:
  Universe u_;
  std::uint64_t next_code_ = 0;
  std::uint64_t total_;
};

struct SweepMode {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  long long samples = 0;   // Random only
  std::uint64_t seed = 0;  // Random only

  static SweepMode exhaustive() { return SweepMode{}; }
  static SweepMode random(long long samples, std::uint64_t seed) {
    return SweepMode{Kind::Random, samples, seed};
  }
};

enum class ReportStatus { Holds, Counterexample, Inconclusive };

std::string to_string(ReportStatus s);

struct LawReport {
  std::string id;
  ReportStatus status = ReportStatus::Holds;
  long long instances = 0;   // instances evaluated
  long long qualifying = 0;  // instances satisfying the law's hypothesis
  // Minimal-index failing instance; non-empty iff Counterexample.
  std::vector<Relation> witness;
};

struct SuiteReport {
  int n = 0;
  SweepMode mode;
  std::vector<LawReport> laws;
  long long holds = 0;
  long long counterexamples = 0;
  long long inconclusive = 0;
};

struct SuiteOptions {
  int workers = 1;
};

// Sweeps the selected laws (all non-mutated catalog entries when `law_ids`
// is empty) over the universe.  Requirements: 1 ≤ n ≤ 8 overall, n ≤ 4 for
// exhaustive mode; a law whose (pruned) exhaustive instance space exceeds
// an internal budget is rejected — narrow the selection or sample instead.
// Throws std::invalid_argument on violations and unknown law ids.
SuiteReport run_suite(const Universe& u, const SweepMode& mode,
                      const std::vector<std::string>& law_ids = {},
                      const SuiteOptions& opts = {});

// Stratified random instance, a pure function of its arguments: workers
// and call order never change what index i yields.
std::vector<Relation> sample_instance(const Universe& u, int arity,
                                      std::uint64_t seed, long long index);

std::string render_report_text(const SuiteReport& report);
std::string render_report_machine(const SuiteReport& report);

// Inverse of render_report_machine (witnesses are rebuilt from their
// integer encodings).  Throws std::invalid_argument on malformed input.
SuiteReport parse_report_machine(const std::string& text);

}  // namespace relalg

#endif  // RELALG_SWEEP_HPP
