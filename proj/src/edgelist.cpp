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

#include "relalg/edgelist.hpp"

#include <sstream>
#include <vector>

namespace relalg {

namespace {

// Strips comments and surrounding blanks; empty result means "skip line".
std::string significant_part(const std::string& line) {
  std::string s = line;
  if (auto hash = s.find('#'); hash != std::string::npos) {
    s.erase(hash);
  }
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& token, int line_no, const char* what) {
  try {
    size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size() || value < 0) {
      throw std::invalid_argument("");
    }
    return value;
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("expected non-negative ") + what +
                                  ", got \"" + token + "\"");
  }
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

Relation parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  Universe u(0);
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = significant_part(raw);
    if (line.empty()) continue;

    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    if (fields >> extra) {
      throw ParseError(line_no, "expected two fields, got \"" + line + "\"");
    }

    if (!have_header) {
      if (a != "n") {
        throw ParseError(line_no, "expected header \"n <N>\" before edges");
      }
      const int n = parse_int(b, line_no, "vertex count");
      if (n > kMaxUniverse) {
        throw ParseError(line_no,
                         "vertex count " + std::to_string(n) +
                             " exceeds the supported maximum of " +
                             std::to_string(kMaxUniverse));
      }
      u = Universe(n);
      have_header = true;
      continue;
    }

    if (b.empty()) {
      throw ParseError(line_no, "edge line needs two vertices, got \"" +
                                    line + "\"");
    }
    const int from = parse_int(a, line_no, "vertex");
    const int to = parse_int(b, line_no, "vertex");
    if (from >= u.size() || to >= u.size()) {
      throw ParseError(line_no, "edge (" + std::to_string(from) + ", " +
                                    std::to_string(to) +
                                    ") outside universe of size " +
                                    std::to_string(u.size()));
    }
    edges.emplace_back(from, to);
  }

  if (!have_header) {
    throw ParseError(line_no == 0 ? 1 : line_no,
                     "missing header \"n <N>\"");
  }
  return Relation::from_pairs(u, edges);
}

std::string render_edge_list(const Relation& r) {
  std::ostringstream out;
  out << "n " << r.size() << "\n";
  for (const auto& [a, b] : r.pairs()) {
    out << a << " " << b << "\n";
  }
  return out.str();
}

std::string to_pair_string(const Relation& r) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [a, b] : r.pairs()) {
    if (!first) out << ",";
    first = false;
    out << "(" << a << "," << b << ")";
  }
  out << "}";
  return out.str();
}

std::string render_dot(const Relation& r) {
  std::ostringstream out;
  out << "digraph g {\n";
  for (int v = 0; v < r.size(); ++v) {
    out << "  " << v << ";\n";
  }
  for (const auto& [a, b] : r.pairs()) {
    out << "  " << a << " -> " << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace relalg
