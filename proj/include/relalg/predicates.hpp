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
 * @file predicates.hpp
 *
 * Structural properties of relations and the path taxonomy.  Everything is
 * expressed through the point-free algebra of relation.hpp; no predicate
 * walks the graph directly.
 */

#ifndef RELALG_PREDICATES_HPP_
#define RELALG_PREDICATES_HPP_

#include <iosfwd>

#include "relalg/relation.hpp"

namespace relalg {

enum class BasicProperty {
  Univalent,    // RT;R <= I          (out-degree <= 1)
  Injective,    // R;RT <= I          (in-degree <= 1)
  Total,        // I <= R;RT          (out-degree >= 1)
  Surjective,   // I <= RT;R          (in-degree >= 1)
  Bijective,    // injective and surjective
  Irreflexive,  // R <= ~I
  Symmetric,    // R = RT
  Vector,       // R = R;L            (row-constant: a subset of vertices)
  Point,        // bijective vector   (a single vertex)
  Atom,         // R;L and RT;L are points (a single edge)
  Acyclic,      // R+ <= ~I
  WellFounded,  // no infinite descending chains; on finite universes this
                // coincides with acyclicity, which is how it is decided here
};

enum class TerminationKind {
  BackwardTerminating,  // R <= ~(L;R);R;L        (reaches back to a start)
  ForwardTerminating,   // R <= L;R;~(R;L)        (reaches forward to an end)
  Terminating,          // both of the above
  BackwardFinite,       // R <= ~(L;R);R;L | RT*
  ForwardFinite,        // R <= L;R;~(R;L) | RT*
  Finite,               // R <= (~(L;R);R;L & L;R;~(R;L)) | RT*
};

enum class PathClass {
  NotAPath,
  Empty,
  Cycle,        // non-empty path with R* = RT*
  FiniteChain,  // non-empty path with a start and an end point
};

enum class RootedKind {
  RootedPath,                    // p;R <= R* | RT*
  RootedNonEmpty,                // rooted path, p on the path
  RootedBackwardFinite,          // p;R <= R+
  RootedNonEmptyBackwardFinite,  // p;R <= R+ and p has a successor
  RootedCycle,                   // p;R <= R+ and p has a predecessor
  RootedBackwardTerminating,     // p;R <= R+ and p has no predecessor
  RootedTerminating,             // two roots: start p, end q
};

bool is_basic(const Relation& r, BasicProperty p);

inline bool is_univalent(const Relation& r) {
  return is_basic(r, BasicProperty::Univalent);
}
inline bool is_injective(const Relation& r) {
  return is_basic(r, BasicProperty::Injective);
}
inline bool is_vector(const Relation& r) {
  return is_basic(r, BasicProperty::Vector);
}
inline bool is_point(const Relation& r) {
  return is_basic(r, BasicProperty::Point);
}
inline bool is_atom(const Relation& r) {
  return is_basic(r, BasicProperty::Atom);
}
inline bool is_acyclic(const Relation& r) {
  return is_basic(r, BasicProperty::Acyclic);
}

/// R;L;R <= R* | RT*: any two vertices touched by R are joined by R or RT.
bool is_connected(const Relation& r);

/// Injective, univalent and connected.
bool is_path(const Relation& r);

/// Vertices with a successor but no predecessor, as a vector: R;L & ~(RT;L).
Relation start_points(const Relation& r);

/// Vertices with a predecessor but no successor, as a vector: RT;L & ~(R;L).
Relation end_points(const Relation& r);

/// The bare inequality behind a TerminationKind, evaluated on any relation.
bool termination_inequality(const Relation& r, TerminationKind k);

/// termination_inequality restricted to paths; throws on non-paths.
bool has_termination(const Relation& r, TerminationKind k);

/// Convenience conjunction used throughout: path plus Terminating.
inline bool is_terminating_path(const Relation& r) {
  return is_path(r) && termination_inequality(r, TerminationKind::Terminating);
}

/// Path whose forward and backward reachability agree: R* = RT*.  The empty
/// path counts as a cycle; classify() still files it under Empty.
bool is_cycle(const Relation& r);

PathClass classify(const Relation& r);

/// Members of w without an S-predecessor in w: w & ~(ST;w).  w must be a
/// vector.
Relation min_set(const Relation& s, const Relation& w);

/**
 * Checks a rooted-path condition for an injective univalent R with root
 * point p.  The two-point overload is for RootedTerminating (start p,
 * end q).  Precondition violations throw std::invalid_argument naming the
 * failing property.
 */
bool rooted_check(const Relation& r, const Relation& p, RootedKind k);
bool rooted_check(const Relation& r, const Relation& p, const Relation& q,
                  RootedKind k);

const char* to_string(BasicProperty p);
const char* to_string(TerminationKind k);
const char* to_string(PathClass c);
const char* to_string(RootedKind k);

}  // namespace relalg

#endif  // RELALG_PREDICATES_HPP_
