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

// Plain-text graph exchange format:
//
//   # optional comments
//   n <N>
//   <u> <v>      one directed edge per line, 0 ≤ u,v < N
//
// Duplicate edges are idempotent.  parse(render(R)) == R for every R.

#ifndef RELALG_EDGELIST_HPP
#define RELALG_EDGELIST_HPP

#include <stdexcept>
#include <string>

#include "relalg/relation.hpp"

namespace relalg {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

Relation parse_edge_list(const std::string& text);

std::string render_edge_list(const Relation& r);

// Compact single-line form, e.g. "{(0,1),(1,2)}".
std::string to_pair_string(const Relation& r);

// Graphviz digraph; output-only (no parser).
std::string render_dot(const Relation& r);

}  // namespace relalg

#endif  // RELALG_EDGELIST_HPP
