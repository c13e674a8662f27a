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

#include "relalg/relation.hpp"

namespace relalg {

void Relation::add_edge_checked(int a, int b) {
  const int n = size();
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw std::invalid_argument("edge (" + std::to_string(a) + ", " +
                                std::to_string(b) +
                                ") outside universe of size " +
                                std::to_string(n));
  }
  rows_[a] |= std::uint64_t{1} << b;
}

void Relation::check_same(const Relation& lhs, const Relation& rhs,
                          const char* op) {
  if (lhs.universe_ != rhs.universe_) {
    throw std::invalid_argument(
        std::string("cannot ") + op + " relations over different universes (" +
        std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size()) +
        ")");
  }
}

}  // namespace relalg
