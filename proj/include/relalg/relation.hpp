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
 * @file relation.hpp
 *
 * Finite binary relations over a single universe {0, ..., n-1}, stored as
 * bit matrices (one 64-bit word per row).  All operations are total on
 * relations over the same universe; mixing universes throws.
 *
 * Operator precedence in C++ matches the usual relation-algebra convention:
 * complement (~) binds tighter than composition (*), which binds tighter
 * than meet (&) and join (|), so formulas transcribe directly, e.g.
 * `~(L * r) * r * L`.
 */

#ifndef RELALG_RELATION_HPP_
#define RELALG_RELATION_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relalg {

// Compile-time bound on universe size.  One word per row; must fit in 64 bits.
#ifndef RELALG_MAX_UNIVERSE
#define RELALG_MAX_UNIVERSE 12
#endif
inline constexpr int kMaxUniverse = RELALG_MAX_UNIVERSE;
static_assert(kMaxUniverse >= 1 && kMaxUniverse <= 64,
              "universe bound must lie in [1, 64]");

/// A finite carrier set {0, ..., size()-1}.  size() == 0 is legal.
class Universe {
 public:
  Universe() = default;

  explicit Universe(int n) : n_(n) {
    if (n < 0 || n > kMaxUniverse) {
      throw std::invalid_argument("universe size " + std::to_string(n) +
                                  " outside [0, " +
                                  std::to_string(kMaxUniverse) + "]");
    }
  }

  int size() const { return n_; }

  friend bool operator==(Universe, Universe) = default;

 private:
  int n_ = 0;
};

/**
 * An immutable binary relation on a Universe.
 *
 * Invariant: row words carry no bits at column indices >= size(), and rows
 * with index >= size() are zero; this makes defaulted equality exact.
 */
class Relation {
 public:
  /// The empty relation over u.
  explicit Relation(Universe u = Universe()) : universe_(u) {}

  static Relation empty(Universe u) { return Relation(u); }

  static Relation universal(Universe u) {
    Relation r(u);
    for (int a = 0; a < u.size(); ++a) r.rows_[a] = r.column_mask();
    return r;
  }

  static Relation identity(Universe u) {
    Relation r(u);
    for (int a = 0; a < u.size(); ++a) r.rows_[a] = std::uint64_t{1} << a;
    return r;
  }

  /// Builds from explicit pairs; out-of-range vertices throw.
  static Relation from_pairs(Universe u,
                             std::initializer_list<std::pair<int, int>> edges) {
    Relation r(u);
    for (auto [a, b] : edges) r.add_edge_checked(a, b);
    return r;
  }

  static Relation from_pairs(Universe u,
                             const std::vector<std::pair<int, int>>& edges) {
    Relation r(u);
    for (auto [a, b] : edges) r.add_edge_checked(a, b);
    return r;
  }

  /**
   * Decodes a row-major integer encoding: bit a*n + b of `code` is the
   * edge (a, b).  Requires size() <= 8 so the code fits in 64 bits.
   */
  static Relation from_encoding(Universe u, std::uint64_t code) {
    const int n = u.size();
    if (n > 8) {
      throw std::length_error("integer encoding requires universe size <= 8");
    }
    Relation r(u);
    for (int a = 0; a < n; ++a) {
      r.rows_[a] = (code >> (a * n)) & r.column_mask();
    }
    return r;
  }

  /// The vector (row-constant relation) whose member rows are set in `mask`.
  static Relation vector_of(Universe u, std::uint64_t mask) {
    Relation r(u);
    const std::uint64_t cols = r.column_mask();
    for (int a = 0; a < u.size(); ++a) {
      if ((mask >> a) & 1u) r.rows_[a] = cols;
    }
    return r;
  }

  static Relation vector_of(Universe u, std::initializer_list<int> members) {
    std::uint64_t mask = 0;
    for (int v : members) {
      if (v < 0 || v >= u.size()) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " outside universe of size " +
                                    std::to_string(u.size()));
      }
      mask |= std::uint64_t{1} << v;
    }
    return vector_of(u, mask);
  }

  /// The point at vertex v: the vector {v}.
  static Relation point_at(Universe u, int v) {
    if (v < 0 || v >= u.size()) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " outside universe of size " +
                                  std::to_string(u.size()));
    }
    return vector_of(u, std::uint64_t{1} << v);
  }

  Universe universe() const { return universe_; }
  int size() const { return universe_.size(); }

  bool contains(int a, int b) const {
    return a >= 0 && a < size() && b >= 0 && b < size() &&
           ((rows_[a] >> b) & 1u);
  }

  std::uint64_t row_bits(int a) const { return rows_[a]; }

  bool is_empty() const {
    for (int a = 0; a < size(); ++a) {
      if (rows_[a]) return false;
    }
    return true;
  }

  int edge_count() const {
    int c = 0;
    for (int a = 0; a < size(); ++a) c += std::popcount(rows_[a]);
    return c;
  }

  /// Bitmask of rows with at least one successor (the members of R;L).
  std::uint64_t domain_mask() const {
    std::uint64_t m = 0;
    for (int a = 0; a < size(); ++a) {
      if (rows_[a]) m |= std::uint64_t{1} << a;
    }
    return m;
  }

  /// Bitmask of columns with at least one predecessor (the members of RT;L).
  std::uint64_t range_mask() const {
    std::uint64_t m = 0;
    for (int a = 0; a < size(); ++a) m |= rows_[a];
    return m;
  }

  /// Edges in row-major order.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a) {
      std::uint64_t bits = rows_[a];
      while (bits) {
        out.emplace_back(a, std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Row-major integer encoding; inverse of from_encoding.  Requires n <= 8.
  std::uint64_t encoding() const {
    const int n = size();
    if (n > 8) {
      throw std::length_error("integer encoding requires universe size <= 8");
    }
    std::uint64_t code = 0;
    for (int a = 0; a < n; ++a) code |= rows_[a] << (a * n);
    return code;
  }

  friend bool operator==(const Relation&, const Relation&) = default;

  /// Inclusion order: R <= S iff every edge of R is an edge of S.
  friend bool operator<=(const Relation& lhs, const Relation& rhs) {
    check_same(lhs, rhs, "compare");
    for (int a = 0; a < lhs.size(); ++a) {
      if (lhs.rows_[a] & ~rhs.rows_[a]) return false;
    }
    return true;
  }

  friend Relation operator|(const Relation& lhs, const Relation& rhs) {
    check_same(lhs, rhs, "join");
    Relation out(lhs.universe_);
    for (int a = 0; a < lhs.size(); ++a) {
      out.rows_[a] = lhs.rows_[a] | rhs.rows_[a];
    }
    return out;
  }

  friend Relation operator&(const Relation& lhs, const Relation& rhs) {
    check_same(lhs, rhs, "meet");
    Relation out(lhs.universe_);
    for (int a = 0; a < lhs.size(); ++a) {
      out.rows_[a] = lhs.rows_[a] & rhs.rows_[a];
    }
    return out;
  }

  friend Relation operator~(const Relation& r) {
    Relation out(r.universe_);
    const std::uint64_t cols = r.column_mask();
    for (int a = 0; a < r.size(); ++a) out.rows_[a] = ~r.rows_[a] & cols;
    return out;
  }

  /// Relational composition R;S.
  friend Relation operator*(const Relation& lhs, const Relation& rhs) {
    check_same(lhs, rhs, "compose");
    Relation out(lhs.universe_);
    for (int a = 0; a < lhs.size(); ++a) {
      std::uint64_t bits = lhs.rows_[a];
      std::uint64_t acc = 0;
      while (bits) {
        acc |= rhs.rows_[std::countr_zero(bits)];
        bits &= bits - 1;
      }
      out.rows_[a] = acc;
    }
    return out;
  }

  friend Relation transpose(const Relation& r) {
    Relation out(r.universe_);
    for (int a = 0; a < r.size(); ++a) {
      std::uint64_t bits = r.rows_[a];
      const std::uint64_t abit = std::uint64_t{1} << a;
      while (bits) {
        out.rows_[std::countr_zero(bits)] |= abit;
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Reflexive-transitive closure, computed by Warshall's algorithm.
  friend Relation star(const Relation& r) {
    Relation out = r;
    const int n = r.size();
    for (int k = 0; k < n; ++k) {
      const std::uint64_t kbit = std::uint64_t{1} << k;
      const std::uint64_t krow = out.rows_[k];
      for (int a = 0; a < n; ++a) {
        if (out.rows_[a] & kbit) out.rows_[a] |= krow;
      }
    }
    for (int a = 0; a < n; ++a) out.rows_[a] |= std::uint64_t{1} << a;
    return out;
  }

  /// Transitive closure R;R*.
  friend Relation plus(const Relation& r) { return r * star(r); }

 private:
  std::uint64_t column_mask() const {
    const int n = size();
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  void add_edge_checked(int a, int b);

  static void check_same(const Relation& lhs, const Relation& rhs,
                         const char* op);

  Universe universe_;
  std::array<std::uint64_t, kMaxUniverse> rows_{};
};

}  // namespace relalg

#endif  // RELALG_RELATION_HPP_
