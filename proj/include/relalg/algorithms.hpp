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

/**
 * @file algorithms.hpp
 *
 * Three relational while-programs (path construction, topological sorting,
 * cycle construction) run under a dynamic Hoare harness: preconditions,
 * every loop-invariant conjunct at every loop head, and postconditions are
 * evaluated at runtime when checking is enabled.
 *
 * Loops carry a step budget of n+1 iterations in place of a variant
 * function; each iteration marks or adds at least one vertex, so the budget
 * can only be exceeded by an implementation bug.
 */

#ifndef RELALG_ALGORITHMS_HPP_
#define RELALG_ALGORITHMS_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "relalg/relation.hpp"

namespace relalg {

/// Deterministic choice: the point at the least vertex of a non-empty
/// vector.  Satisfies choose_point(v) <= v and point(choose_point(v)).
/// Non-vector input is rejected; empty input raises AlgError::EmptyChoice.
Relation choose_point(const Relation& v);

/// Deterministic choice: the atom at the lexicographically least (row,
/// column) cell of a non-empty relation.  Satisfies choose_atom(x) <= x and
/// atom(choose_atom(x)).  Empty input raises AlgError::EmptyChoice.
Relation choose_atom(const Relation& x);

enum class ChoiceOp { Point, Atom };

struct ChoiceRecord {
  ChoiceOp op;
  Relation input;
  Relation chosen;

  friend bool operator==(const ChoiceRecord&, const ChoiceRecord&) = default;
};

using ChoiceLog = std::vector<ChoiceRecord>;

/// One loop-head snapshot: variable values plus, when checking is enabled,
/// the verdict of every invariant conjunct.  Iteration 0 is the state
/// before the first loop test.
struct TraceStep {
  int iteration = 0;
  std::vector<std::pair<std::string, Relation>> vars;
  std::vector<std::pair<std::string, bool>> checks;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Trace {
  std::vector<TraceStep> steps;

  friend bool operator==(const Trace&, const Trace&) = default;
};

class AlgError : public std::runtime_error {
 public:
  enum class Kind {
    PreconditionViolated,
    InvariantViolated,
    PostconditionViolated,
    StepBudgetExceeded,
    EmptyChoice,
  };

  AlgError(Kind kind, const std::string& clause, int iteration = -1);

  Kind kind() const { return kind_; }

  /// The failing clause, e.g. "D acyclic" or "x ≠ y".
  const std::string& clause() const { return clause_; }

  /// Loop iteration for InvariantViolated; -1 otherwise.
  int iteration() const { return iteration_; }

 private:
  Kind kind_;
  std::string clause_;
  int iteration_;
};

struct AlgorithmRun {
  Relation result;
  Trace trace;
  ChoiceLog choices;
};

/**
 * Constructs the path from x to y through the acyclic graph d, walking
 * backwards from y and always taking the least-index predecessor.
 *
 * Pre: d acyclic; x, y points; x != y; star(d);y <= star(dT);x.
 * Post: result W satisfies W <= d, W is a terminating path, sp(W) = x,
 * ep(W) = y.
 */
AlgorithmRun construct_path(const Relation& d, const Relation& x,
                            const Relation& y, bool check = true);

/**
 * Topological sorting: arranges all vertices in a chain W that respects
 * the dependencies of r.
 *
 * Pre: r well-founded; universe non-empty (the chooser needs a vertex).
 * Post: r <= plus(W), W a terminating path, (W | WT);L = ~I;L.
 */
AlgorithmRun topological_sort(const Relation& r, bool check = true);

/**
 * Constructs a non-empty cycle contained in r: picks a vertex y on a cycle
 * and a successor x that reaches back to y, grows a tree from x until it
 * covers y, extracts the x-to-y path and closes it with the edge (y, x).
 *
 * Pre: plus(r) & I != O.  Post: C != O, is_cycle(C), C <= r.
 */
AlgorithmRun construct_cycle(const Relation& r, bool check = true);

/// Flattens a path relation to its vertex sequence: Empty yields [],
/// FiniteChain runs from start to end point, Cycle is rotated to begin at
/// its least vertex (closing edge implicit).  Non-paths are rejected.
std::vector<int> path_to_sequence(const Relation& w);

}  // namespace relalg

#endif  // RELALG_ALGORITHMS_HPP_
