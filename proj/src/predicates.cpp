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

#include "relalg/predicates.hpp"

#include <stdexcept>
#include <string>

namespace relalg {

namespace {

Relation universal_of(const Relation& r) {
  return Relation::universal(r.universe());
}

Relation identity_of(const Relation& r) {
  return Relation::identity(r.universe());
}

}  // namespace

bool is_basic(const Relation& r, BasicProperty p) {
  const Relation i = identity_of(r);
  const Relation l = universal_of(r);
  switch (p) {
    case BasicProperty::Univalent:
      return transpose(r) * r <= i;
    case BasicProperty::Injective:
      return r * transpose(r) <= i;
    case BasicProperty::Total:
      return i <= r * transpose(r);
    case BasicProperty::Surjective:
      return i <= transpose(r) * r;
    case BasicProperty::Bijective:
      return is_basic(r, BasicProperty::Injective) &&
             is_basic(r, BasicProperty::Surjective);
    case BasicProperty::Irreflexive:
      return r <= ~i;
    case BasicProperty::Symmetric:
      return r == transpose(r);
    case BasicProperty::Vector:
      return r == r * l;
    case BasicProperty::Point:
      return is_basic(r, BasicProperty::Bijective) &&
             is_basic(r, BasicProperty::Vector);
    case BasicProperty::Atom:
      return is_point(r * l) && is_point(transpose(r) * l);
    case BasicProperty::Acyclic:
    case BasicProperty::WellFounded:
      // On a finite universe well-foundedness and acyclicity coincide.
      return plus(r) <= ~i;
  }
  throw std::invalid_argument("unknown BasicProperty");
}

bool is_connected(const Relation& r) {
  const Relation l = universal_of(r);
  return r * l * r <= (star(r) | star(transpose(r)));
}

bool is_path(const Relation& r) {
  return is_injective(r) && is_univalent(r) && is_connected(r);
}

Relation start_points(const Relation& r) {
  const Relation l = universal_of(r);
  return (r * l) & ~(transpose(r) * l);
}

Relation end_points(const Relation& r) {
  const Relation l = universal_of(r);
  return (transpose(r) * l) & ~(r * l);
}

bool termination_inequality(const Relation& r, TerminationKind k) {
  const Relation l = universal_of(r);
  const auto backward = [&] { return ~(l * r) * r * l; };
  const auto forward = [&] { return l * r * ~(r * l); };
  switch (k) {
    case TerminationKind::BackwardTerminating:
      return r <= backward();
    case TerminationKind::ForwardTerminating:
      return r <= forward();
    case TerminationKind::Terminating:
      return r <= (backward() & forward());
    case TerminationKind::BackwardFinite:
      return r <= (backward() | star(transpose(r)));
    case TerminationKind::ForwardFinite:
      return r <= (forward() | star(transpose(r)));
    case TerminationKind::Finite:
      return r <= ((backward() & forward()) | star(transpose(r)));
  }
  throw std::invalid_argument("unknown TerminationKind");
}

bool has_termination(const Relation& r, TerminationKind k) {
  if (!is_path(r)) {
    throw std::invalid_argument(
        "has_termination: relation is not a path; use "
        "termination_inequality for arbitrary relations");
  }
  return termination_inequality(r, k);
}

bool is_cycle(const Relation& r) {
  return is_path(r) && star(r) == star(transpose(r));
}

PathClass classify(const Relation& r) {
  if (!is_path(r)) return PathClass::NotAPath;
  if (r.is_empty()) return PathClass::Empty;
  if (star(r) == star(transpose(r))) return PathClass::Cycle;
  return PathClass::FiniteChain;
}

Relation min_set(const Relation& s, const Relation& w) {
  if (!is_vector(w)) {
    throw std::invalid_argument("min_set: w is not a vector");
  }
  return w & ~(transpose(s) * w);
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) {
    throw std::invalid_argument(std::string("rooted_check: ") + what);
  }
}

void check_rooted_inputs(const Relation& r, const Relation& p) {
  require(r.universe() == p.universe(), "R and p have different universes");
  require(is_injective(r), "R is not injective");
  require(is_univalent(r), "R is not univalent");
  require(is_point(p), "p is not a point");
}

}  // namespace

bool rooted_check(const Relation& r, const Relation& p, RootedKind k) {
  check_rooted_inputs(r, p);
  const Relation l = Relation::universal(r.universe());
  const Relation rt = transpose(r);
  const Relation rp = plus(r);
  switch (k) {
    case RootedKind::RootedPath:
      return p * r <= (star(r) | star(rt));
    case RootedKind::RootedNonEmpty:
      return (p * r <= (star(r) | star(rt))) && (p <= (r | rt) * l);
    case RootedKind::RootedBackwardFinite:
      return p * r <= rp;
    case RootedKind::RootedNonEmptyBackwardFinite:
      return (p * r <= rp) && (p <= r * l);
    case RootedKind::RootedCycle:
      return (p * r <= rp) && (p <= rt * l);
    case RootedKind::RootedBackwardTerminating:
      return (p * r <= rp) && (r * p).is_empty();
    case RootedKind::RootedTerminating:
      throw std::invalid_argument(
          "rooted_check: RootedTerminating needs an end point; use the "
          "two-point overload");
  }
  throw std::invalid_argument("unknown RootedKind");
}

bool rooted_check(const Relation& r, const Relation& p, const Relation& q,
                  RootedKind k) {
  if (k != RootedKind::RootedTerminating) {
    throw std::invalid_argument(
        "rooted_check: only RootedTerminating takes two points");
  }
  check_rooted_inputs(r, p);
  require(r.universe() == q.universe(), "R and q have different universes");
  require(is_point(q), "q is not a point");
  return (p * r <= plus(r)) && (p <= star(r) * q) &&
         (transpose(r) * q).is_empty();
}

const char* to_string(BasicProperty p) {
  switch (p) {
    case BasicProperty::Univalent: return "univalent";
    case BasicProperty::Injective: return "injective";
    case BasicProperty::Total: return "total";
    case BasicProperty::Surjective: return "surjective";
    case BasicProperty::Bijective: return "bijective";
    case BasicProperty::Irreflexive: return "irreflexive";
    case BasicProperty::Symmetric: return "symmetric";
    case BasicProperty::Vector: return "vector";
    case BasicProperty::Point: return "point";
    case BasicProperty::Atom: return "atom";
    case BasicProperty::Acyclic: return "acyclic";
    case BasicProperty::WellFounded: return "well-founded";
  }
  return "?";
}

const char* to_string(TerminationKind k) {
  switch (k) {
    case TerminationKind::BackwardTerminating: return "BackwardTerminating";
    case TerminationKind::ForwardTerminating: return "ForwardTerminating";
    case TerminationKind::Terminating: return "Terminating";
    case TerminationKind::BackwardFinite: return "BackwardFinite";
    case TerminationKind::ForwardFinite: return "ForwardFinite";
    case TerminationKind::Finite: return "Finite";
  }
  return "?";
}

const char* to_string(PathClass c) {
  switch (c) {
    case PathClass::NotAPath: return "NotAPath";
    case PathClass::Empty: return "Empty";
    case PathClass::Cycle: return "Cycle";
    case PathClass::FiniteChain: return "FiniteChain";
  }
  return "?";
}

const char* to_string(RootedKind k) {
  switch (k) {
    case RootedKind::RootedPath: return "RootedPath";
    case RootedKind::RootedNonEmpty: return "RootedNonEmpty";
    case RootedKind::RootedBackwardFinite: return "RootedBackwardFinite";
    case RootedKind::RootedNonEmptyBackwardFinite:
      return "RootedNonEmptyBackwardFinite";
    case RootedKind::RootedCycle: return "RootedCycle";
    case RootedKind::RootedBackwardTerminating:
      return "RootedBackwardTerminating";
    case RootedKind::RootedTerminating: return "RootedTerminating";
  }
  return "?";
}

}  // namespace relalg
