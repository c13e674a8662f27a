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

// Catalog of checkable relation-algebra laws.
//
// Each law quantifies over `arity` free relations and evaluates a closed
// boolean conclusion on a concrete instance.  Laws with hypotheses keep the
// implication inside `holds`, so non-qualifying instances are vacuously
// true; `guard` reports whether an instance actually exercises the law,
// which the sweep uses to count qualifying instances and to flag
// vacuous-only passes.
//
// Laws flagged `mutated` are deliberately weakened variants kept around to
// prove the harness can fail; they are excluded from "all laws" selections.

#ifndef RELALG_LAWS_HPP
#define RELALG_LAWS_HPP

#include <functional>
#include <string>
#include <vector>

#include "relalg/relation.hpp"

namespace relalg {

struct Law {
  std::string id;
  int arity = 1;
  // Human-readable hypothesis; empty for unguarded laws.
  std::string guard_desc;
  // True iff the instance satisfies the hypothesis.  Always true for
  // unguarded laws.
  std::function<bool(const std::vector<Relation>&)> guard;
  // Per-slot admissibility filters used to prune exhaustive products.
  // Empty when no sound per-slot filter exists.  Invariant: guard(inst)
  // implies every slot filter accepts its component, so pruning never
  // skips a qualifying instance.
  std::vector<std::function<bool(const Relation&)>> slot_guards;
  // The full conclusion, hypotheses included.
  std::function<bool(const std::vector<Relation>&)> holds;
  bool mutated = false;
};

enum class LawStatus { Holds, Counterexample };

std::string to_string(LawStatus s);

struct CheckResult {
  std::string law_id;
  LawStatus status = LawStatus::Holds;
  // The failing instance; present iff status == Counterexample.
  std::vector<Relation> witness;
  long long instances_checked = 1;
};

// The closed catalog plus the mutated variants.
const std::vector<Law>& law_catalog();

// Looks up a law by id; nullptr if unknown.
const Law* find_law(const std::string& id);

// Evaluates one law on one instance.  Throws std::invalid_argument on
// arity mismatch; relation operations reject mixed universes.
CheckResult check_law(const Law& law, const std::vector<Relation>& instance);

// Convenience overload; throws std::invalid_argument for an unknown id.
CheckResult check_law(const std::string& id,
                      const std::vector<Relation>& instance);

}  // namespace relalg

#endif  // RELALG_LAWS_HPP
