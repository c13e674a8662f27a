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

#include "relalg/algorithms.hpp"

#include <bit>

#include "relalg/predicates.hpp"

namespace relalg {

AlgError::AlgError(Kind kind, const std::string& clause, int iteration)
    : std::runtime_error([&] {
        const char* tag = nullptr;
        switch (kind) {
          case Kind::PreconditionViolated: tag = "precondition violated: "; break;
          case Kind::InvariantViolated: tag = "invariant violated: "; break;
          case Kind::PostconditionViolated:
            tag = "postcondition violated: ";
            break;
          case Kind::StepBudgetExceeded: tag = "step budget exceeded: "; break;
          case Kind::EmptyChoice: tag = "empty choice: "; break;
        }
        std::string msg = tag + clause;
        if (iteration >= 0) {
          msg += " (iteration " + std::to_string(iteration) + ")";
        }
        return msg;
      }()),
      kind_(kind),
      clause_(clause),
      iteration_(iteration) {}

Relation choose_point(const Relation& v) {
  if (!is_vector(v)) {
    throw std::invalid_argument("choose_point: input is not a vector");
  }
  const std::uint64_t members = v.domain_mask();
  if (members == 0) {
    throw AlgError(AlgError::Kind::EmptyChoice, "choose_point on empty vector");
  }
  return Relation::point_at(v.universe(), std::countr_zero(members));
}

Relation choose_atom(const Relation& x) {
  for (int a = 0; a < x.size(); ++a) {
    if (x.row_bits(a)) {
      const int b = std::countr_zero(x.row_bits(a));
      return Relation::from_pairs(x.universe(), {{a, b}});
    }
  }
  throw AlgError(AlgError::Kind::EmptyChoice, "choose_atom on empty relation");
}

namespace {

using NamedBools = std::vector<std::pair<std::string, bool>>;
using NamedRels = std::vector<std::pair<std::string, Relation>>;

Relation logged_point(ChoiceLog& log, const Relation& input) {
  Relation chosen = choose_point(input);
  log.push_back({ChoiceOp::Point, input, chosen});
  return chosen;
}

Relation logged_atom(ChoiceLog& log, const Relation& input) {
  Relation chosen = choose_atom(input);
  log.push_back({ChoiceOp::Atom, input, chosen});
  return chosen;
}

void require_all(const NamedBools& conjuncts, AlgError::Kind kind,
                 int iteration = -1) {
  for (const auto& [name, ok] : conjuncts) {
    if (!ok) throw AlgError(kind, name, iteration);
  }
}

/// Records one loop-head snapshot; with checking on, a false conjunct
/// aborts the run.
void push_step(Trace& trace, int iteration, NamedRels vars,
               NamedBools checks) {
  trace.steps.push_back({iteration, std::move(vars), checks});
  require_all(checks, AlgError::Kind::InvariantViolated, iteration);
}

bool term_path(const Relation& w) { return is_terminating_path(w); }

NamedBools alg1_pre(const Relation& d, const Relation& x, const Relation& y) {
  return {
      {"D acyclic", is_acyclic(d)},
      {"point(x)", is_point(x)},
      {"point(y)", is_point(y)},
      {"x ≠ y", !(x == y)},
      {"D*;y ⊆ Dᵀ*;x", star(d) * y <= star(transpose(d)) * x},
  };
}

NamedBools alg1_inv(const Relation& d, const Relation& x, const Relation& y,
                    const Relation& w, const Relation& q) {
  return {
      {"D acyclic", is_acyclic(d)},
      {"point(x)", is_point(x)},
      {"point(y)", is_point(y)},
      {"point(q)", is_point(q)},
      {"D*;q ⊆ Dᵀ*;x", star(d) * q <= star(transpose(d)) * x},
      {"W ⊆ D", w <= d},
      {"termPath(W)", term_path(w)},
      {"sp(W) = q", start_points(w) == q},
      {"ep(W) = y", end_points(w) == y},
  };
}

NamedBools alg1_post(const Relation& d, const Relation& x, const Relation& y,
                     const Relation& w) {
  return {
      {"W ⊆ D", w <= d},
      {"termPath(W)", term_path(w)},
      {"sp(W) = x", start_points(w) == x},
      {"ep(W) = y", end_points(w) == y},
  };
}

/// Shared loop body of Algorithm 1; construct_cycle re-enters here for its
/// second phase.  Assumes the precondition has already been handled.
void construct_path_core(const Relation& d, const Relation& x,
                         const Relation& y, bool check, AlgorithmRun& run) {
  const int n = d.size();

  Relation p = logged_point(run.choices, d * y);
  Relation w = p * transpose(y);
  Relation q = p;

  int iteration = 0;
  push_step(run.trace, iteration, {{"p", p}, {"W", w}, {"q", q}},
            check ? alg1_inv(d, x, y, w, q) : NamedBools{});

  while (!(q == x)) {
    if (++iteration > n + 1) {
      throw AlgError(AlgError::Kind::StepBudgetExceeded,
                     "path loop exceeded n+1 iterations");
    }
    p = logged_point(run.choices, d * q);
    w = w | p * transpose(q);
    q = p;
    push_step(run.trace, iteration, {{"p", p}, {"W", w}, {"q", q}},
              check ? alg1_inv(d, x, y, w, q) : NamedBools{});
  }

  if (check) {
    require_all(alg1_post(d, x, y, w), AlgError::Kind::PostconditionViolated);
  }
  run.result = w;
}

}  // namespace

AlgorithmRun construct_path(const Relation& d, const Relation& x,
                            const Relation& y, bool check) {
  AlgorithmRun run{Relation(d.universe()), {}, {}};
  if (check) {
    require_all(alg1_pre(d, x, y), AlgError::Kind::PreconditionViolated);
  }
  construct_path_core(d, x, y, check, run);
  return run;
}

namespace {

NamedBools alg2_inv(const Relation& r, const Relation& w, const Relation& q,
                    const Relation& v) {
  const Relation l = Relation::universal(r.universe());
  return {
      {"well-founded", is_basic(r, BasicProperty::WellFounded)},
      {"R ∩ v;vᵀ ⊆ W⁺", (r & v * transpose(v)) <= plus(w)},
      {"termPath(W)", term_path(w)},
      {"point(q)", is_point(q)},
      {"q ⊆ v", q <= v},
      {"W = O ∨ q = ep(W)", w.is_empty() || end_points(w) == q},
      {"v vector", is_vector(v)},
      {"W;L = v ∩ ¬q", w * l == (v & ~q)},
      {"R;v ⊆ v", r * v <= v},
  };
}

NamedBools alg2_post(const Relation& r, const Relation& w) {
  const Relation l = Relation::universal(r.universe());
  const Relation i = Relation::identity(r.universe());
  return {
      {"R ⊆ W⁺", r <= plus(w)},
      {"termPath(W)", term_path(w)},
      {"(W ∪ Wᵀ);L = ¬I;L", (w | transpose(w)) * l == ~i * l},
  };
}

}  // namespace

AlgorithmRun topological_sort(const Relation& r, bool check) {
  const Universe u = r.universe();
  const int n = u.size();
  AlgorithmRun run{Relation(u), {}, {}};

  if (check) {
    require_all(
        {
            {"non-empty universe", n > 0},
            {"well-founded", is_basic(r, BasicProperty::WellFounded)},
        },
        AlgError::Kind::PreconditionViolated);
  }

  const Relation l = Relation::universal(u);
  Relation w(u);
  Relation q = logged_point(run.choices, min_set(r, l));
  Relation v = q;

  int iteration = 0;
  push_step(run.trace, iteration, {{"W", w}, {"q", q}, {"v", v}},
            check ? alg2_inv(r, w, q, v) : NamedBools{});

  while (!(v == l)) {
    if (++iteration > n + 1) {
      throw AlgError(AlgError::Kind::StepBudgetExceeded,
                     "topological sort loop exceeded n+1 iterations");
    }
    Relation p = logged_point(run.choices, min_set(r, ~v));
    w = w | q * transpose(p);
    q = p;
    v = v | p;
    push_step(run.trace, iteration, {{"W", w}, {"q", q}, {"v", v}},
              check ? alg2_inv(r, w, q, v) : NamedBools{});
  }

  if (check) {
    require_all(alg2_post(r, w), AlgError::Kind::PostconditionViolated);
  }
  run.result = w;
  return run;
}

namespace {

NamedBools alg3_inv(const Relation& r, const Relation& x, const Relation& y,
                    const Relation& d, const Relation& v) {
  const Relation i = Relation::identity(r.universe());
  const Relation l = Relation::universal(r.universe());
  return {
      {"point(x)", is_point(x)},
      {"point(y)", is_point(y)},
      {"x ≠ y", !(x == y)},
      {"y ⊆ Rᵀ*;x", y <= star(transpose(r)) * x},
      {"y;xᵀ ⊆ R", y * transpose(x) <= r},
      {"D ⊆ R", d <= r},
      {"D acyclic", is_acyclic(d)},
      {"D injective", d * transpose(d) <= i},
      {"D ⊆ v;vᵀ", d <= v * transpose(v)},
      {"v vector", is_vector(v)},
      {"x;vᵀ ⊆ D*", x * transpose(v) <= star(d)},
      {"D;x = O", (d * x).is_empty()},
      {"v = x ∪ Dᵀ;L", v == (x | transpose(d) * l)},
  };
}

NamedBools alg3_post(const Relation& r, const Relation& c) {
  return {
      {"C ≠ O", !c.is_empty()},
      {"cycle(C)", is_cycle(c)},
      {"C ⊆ R", c <= r},
  };
}

}  // namespace

AlgorithmRun construct_cycle(const Relation& r, bool check) {
  const Universe u = r.universe();
  const int n = u.size();
  AlgorithmRun run{Relation(u), {}, {}};

  const Relation i = Relation::identity(u);
  const Relation l = Relation::universal(u);

  if (check) {
    require_all({{"R⁺ ∩ I ≠ O", !(plus(r) & i).is_empty()}},
                AlgError::Kind::PreconditionViolated);
  }

  const Relation y = logged_point(run.choices, (plus(r) & i) * l);
  const Relation x = logged_point(run.choices, (star(r) * y) & (transpose(r) * y));

  if (x == y) {
    const Relation c = y * transpose(x);
    run.trace.steps.push_back({0, {{"y", y}, {"x", x}, {"C", c}}, {}});
    if (check) {
      require_all(alg3_post(r, c), AlgError::Kind::PostconditionViolated);
    }
    run.result = c;
    return run;
  }

  Relation d(u);
  Relation v = x;

  int iteration = 0;
  push_step(run.trace, iteration,
            {{"y", y}, {"x", x}, {"D", d}, {"v", v}},
            check ? alg3_inv(r, x, y, d, v) : NamedBools{});

  while (!(y <= v)) {
    if (++iteration > n + 1) {
      throw AlgError(AlgError::Kind::StepBudgetExceeded,
                     "tree-growing loop exceeded n+1 iterations");
    }
    Relation e = logged_atom(run.choices, (v * transpose(~v)) & r);
    d = d | e;
    v = v | transpose(e) * l;
    push_step(run.trace, iteration,
              {{"y", y}, {"x", x}, {"D", d}, {"v", v}, {"e", e}},
              check ? alg3_inv(r, x, y, d, v) : NamedBools{});
  }

  if (check) {
    // The tree phase must have established Algorithm 1's precondition; a
    // failure here is an implementation bug, not a caller error.
    for (const auto& [name, ok] : alg1_pre(d, x, y)) {
      if (!ok) {
        throw AlgError(AlgError::Kind::InvariantViolated,
                       std::string("Pre(D,x,y): ") + name, iteration);
      }
    }
  }

  construct_path_core(d, x, y, check, run);

  const Relation c = run.result | y * transpose(x);
  if (check) {
    require_all(alg3_post(r, c), AlgError::Kind::PostconditionViolated);
  }
  run.result = c;
  return run;
}

std::vector<int> path_to_sequence(const Relation& w) {
  std::vector<int> seq;
  switch (classify(w)) {
    case PathClass::NotAPath:
      throw std::invalid_argument("path_to_sequence: relation is not a path");
    case PathClass::Empty:
      return seq;
    case PathClass::FiniteChain: {
      int at = std::countr_zero(start_points(w).domain_mask());
      seq.push_back(at);
      while (w.row_bits(at)) {
        at = std::countr_zero(w.row_bits(at));
        seq.push_back(at);
      }
      return seq;
    }
    case PathClass::Cycle: {
      const int first = std::countr_zero(w.domain_mask());
      seq.push_back(first);
      int at = std::countr_zero(w.row_bits(first));
      while (at != first) {
        seq.push_back(at);
        at = std::countr_zero(w.row_bits(at));
      }
      return seq;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace relalg
