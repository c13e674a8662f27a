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

#include "relalg/sweep.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "relalg/edgelist.hpp"

namespace relalg {

RelationEnumerator::RelationEnumerator(const Universe& u) : u_(u) {
  if (u.size() > 4) {
    throw std::invalid_argument(
        "exhaustive enumeration requires n ≤ 4, got n = " +
        std::to_string(u.size()));
  }
  total_ = std::uint64_t{1} << (u.size() * u.size());
}

Relation RelationEnumerator::next() {
  if (!has_next()) {
    throw std::out_of_range("RelationEnumerator exhausted");
  }
  return Relation::from_encoding(u_, next_code_++);
}

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Holds: return "Holds";
    case ReportStatus::Counterexample: return "Counterexample";
    case ReportStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t rnd(std::mt19937_64& g, std::uint64_t bound) {
  return bound == 0 ? 0 : g() % bound;
}

std::vector<int> shuffled_vertices(std::mt19937_64& g, int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(v[i], v[static_cast<int>(rnd(g, i + 1))]);
  }
  return v;
}

using Pairs = std::vector<std::pair<int, int>>;

Relation random_by_category(std::mt19937_64& g, const Universe& u) {
  const int n = u.size();
  Pairs pairs;
  switch (rnd(g, 12)) {
    case 0:  // uniform
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (g() & 1) pairs.emplace_back(a, b);
        }
      }
      break;
    case 1: {  // sparse
      const int k = static_cast<int>(rnd(g, n + 1));
      for (int i = 0; i < k; ++i) {
        pairs.emplace_back(static_cast<int>(rnd(g, n)),
                           static_cast<int>(rnd(g, n)));
      }
      break;
    }
    case 2: {  // partial injection
      const auto tgt = shuffled_vertices(g, n);
      for (int a = 0; a < n; ++a) {
        if (g() & 1) pairs.emplace_back(a, tgt[a]);
      }
      break;
    }
    case 3: {  // simple chain
      const auto v = shuffled_vertices(g, n);
      const int k = static_cast<int>(rnd(g, n));  // edge count
      for (int i = 0; i < k; ++i) pairs.emplace_back(v[i], v[i + 1]);
      break;
    }
    case 4: {  // simple cycle (k = 1 gives a loop)
      const auto v = shuffled_vertices(g, n);
      const int k = 1 + static_cast<int>(rnd(g, n));
      for (int i = 0; i < k; ++i) pairs.emplace_back(v[i], v[(i + 1) % k]);
      break;
    }
    case 5:  // atom
      pairs.emplace_back(static_cast<int>(rnd(g, n)),
                         static_cast<int>(rnd(g, n)));
      break;
    case 6:  // vector
      return Relation::vector_of(u, g() & ((std::uint64_t{1} << n) - 1));
    case 7:  // point
      return Relation::point_at(u, static_cast<int>(rnd(g, n)));
    case 8:  // constants
      switch (rnd(g, 3)) {
        case 0: return Relation::empty(u);
        case 1: return Relation::identity(u);
        default: return Relation::universal(u);
      }
    case 9: {  // DAG: permuted strict upper triangle
      const auto v = shuffled_vertices(g, n);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (rnd(g, 3) == 0) pairs.emplace_back(v[i], v[j]);
        }
      }
      break;
    }
    case 10: {  // symmetric sparse
      const int k = static_cast<int>(rnd(g, n + 1));
      for (int i = 0; i < k; ++i) {
        const int a = static_cast<int>(rnd(g, n));
        const int b = static_cast<int>(rnd(g, n));
        pairs.emplace_back(a, b);
        pairs.emplace_back(b, a);
      }
      break;
    }
    default: {  // union of two chains
      for (int c = 0; c < 2; ++c) {
        const auto v = shuffled_vertices(g, n);
        const int k = static_cast<int>(rnd(g, n));
        for (int i = 0; i < k; ++i) pairs.emplace_back(v[i], v[i + 1]);
      }
      break;
    }
  }
  return Relation::from_pairs(u, pairs);
}

// Vertex-disjoint chains sharing exactly the junction vertex; qualifies the
// concatenation laws.
std::vector<Relation> continuation_chains(std::mt19937_64& g,
                                          const Universe& u) {
  const int n = u.size();
  if (n < 3) {
    return {Relation::empty(u), Relation::empty(u)};
  }
  const auto v = shuffled_vertices(g, n);
  const int m = 3 + static_cast<int>(rnd(g, n - 2));
  const int split = 1 + static_cast<int>(rnd(g, m - 2));
  Pairs first, second;
  for (int i = 0; i < split; ++i) first.emplace_back(v[i], v[i + 1]);
  for (int i = split; i + 1 < m; ++i) second.emplace_back(v[i], v[i + 1]);
  return {Relation::from_pairs(u, first), Relation::from_pairs(u, second)};
}

// A chain and a disjoint return chain closing it; qualifies the cycle-join
// law.
std::vector<Relation> reverse_chains(std::mt19937_64& g, const Universe& u) {
  const int n = u.size();
  if (n < 2) {
    return {Relation::empty(u), Relation::empty(u)};
  }
  const auto v = shuffled_vertices(g, n);
  const int m = 2 + static_cast<int>(rnd(g, n - 1));
  const int k = 1 + static_cast<int>(rnd(g, m - 1));
  Pairs there, back;
  for (int i = 0; i < k; ++i) there.emplace_back(v[i], v[i + 1]);
  for (int i = k; i + 1 < m; ++i) back.emplace_back(v[i], v[i + 1]);
  back.emplace_back(v[m - 1], v[0]);
  return {Relation::from_pairs(u, there), Relation::from_pairs(u, back)};
}

std::vector<Relation> cycle_pair(std::mt19937_64& g, const Universe& u) {
  const int n = u.size();
  const auto v = shuffled_vertices(g, n);
  const int k = 1 + static_cast<int>(rnd(g, n));
  Pairs pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(v[i], v[(i + 1) % k]);
  const Relation c = Relation::from_pairs(u, pairs);
  return {c, c};
}

// A point lying on a chain; qualifies the path-restriction laws.
std::vector<Relation> point_on_chain(std::mt19937_64& g, const Universe& u) {
  const int n = u.size();
  const auto v = shuffled_vertices(g, n);
  const int k = 1 + static_cast<int>(rnd(g, n - 1));
  Pairs pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(v[i], v[i + 1]);
  const int at = static_cast<int>(rnd(g, k + 1));
  return {Relation::point_at(u, v[at]), Relation::from_pairs(u, pairs)};
}

Relation surjectivize(std::mt19937_64& g, const Relation& base) {
  const int n = base.size();
  Pairs extra = base.pairs();
  for (int b = 0; b < n; ++b) {
    bool covered = false;
    for (int a = 0; a < n; ++a) {
      if (base.contains(a, b)) {
        covered = true;
        break;
      }
    }
    if (!covered) extra.emplace_back(static_cast<int>(rnd(g, n)), b);
  }
  return Relation::from_pairs(base.universe(), extra);
}

Relation partial_injection(std::mt19937_64& g, const Universe& u) {
  const int n = u.size();
  const auto tgt = shuffled_vertices(g, n);
  Pairs pairs;
  for (int a = 0; a < n; ++a) {
    if (g() & 1) pairs.emplace_back(a, tgt[a]);
  }
  return Relation::from_pairs(u, pairs);
}

}  // namespace

std::vector<Relation> sample_instance(const Universe& u, int arity,
                                      std::uint64_t seed, long long index) {
  std::mt19937_64 g(mix(seed, static_cast<std::uint64_t>(index)));
  const int n = u.size();
  if (n == 0) {
    return std::vector<Relation>(arity, Relation::empty(u));
  }
  if (arity == 1) {
    return {random_by_category(g, u)};
  }
  if (arity == 2) {
    switch (rnd(g, 8)) {
      case 0:
      case 1:
        return {random_by_category(g, u), random_by_category(g, u)};
      case 2: {
        const Relation r = random_by_category(g, u);
        return {r, r};
      }
      case 3: {
        const Relation r = random_by_category(g, u);
        return {r, transpose(r)};
      }
      case 4:
        return continuation_chains(g, u);
      case 5:
        return reverse_chains(g, u);
      case 6:
        return cycle_pair(g, u);
      default:
        return point_on_chain(g, u);
    }
  }
  std::vector<Relation> inst;
  if (g() & 1) {
    for (int i = 0; i < arity; ++i) inst.push_back(random_by_category(g, u));
  } else {
    inst.push_back(surjectivize(g, random_by_category(g, u)));
    for (int i = 1; i + 1 < arity; ++i) {
      inst.push_back(random_by_category(g, u));
    }
    inst.push_back(partial_injection(g, u));
  }
  return inst;
}

namespace {

// Hard ceiling on per-law exhaustive work; large enough for every full
// product at n ≤ 3 and every pruned or unary product at n = 4.
constexpr long long kExhaustiveBudget = 1LL << 26;

struct SlotDomain {
  bool full = true;
  std::vector<std::uint32_t> codes;  // used when !full
  long long size = 0;
};

struct WorkerResult {
  long long qualifying = 0;
  long long first_bad = -1;
  std::vector<Relation> witness;
  std::exception_ptr error;
};

LawReport sweep_law(const Law& law, const Universe& u, const SweepMode& mode,
                    int workers) {
  const int n = u.size();
  LawReport rep;
  rep.id = law.id;

  std::vector<SlotDomain> doms;
  long long total = 0;
  if (mode.kind == SweepMode::Kind::Exhaustive) {
    const long long space = 1LL << (n * n);
    doms.resize(law.arity);
    total = 1;
    for (int s = 0; s < law.arity; ++s) {
      SlotDomain& dom = doms[s];
      if (!law.slot_guards.empty() && law.slot_guards[s]) {
        dom.full = false;
        for (long long code = 0; code < space; ++code) {
          if (law.slot_guards[s](Relation::from_encoding(u, code))) {
            dom.codes.push_back(static_cast<std::uint32_t>(code));
          }
        }
        dom.size = static_cast<long long>(dom.codes.size());
      } else {
        dom.size = space;
      }
      if (dom.size == 0 || total > kExhaustiveBudget / dom.size) {
        total = dom.size == 0 ? 0 : kExhaustiveBudget + 1;
      } else {
        total *= dom.size;
      }
    }
    if (total > kExhaustiveBudget) {
      throw std::invalid_argument(
          "law " + law.id + ": exhaustive instance space at n = " +
          std::to_string(n) +
          " exceeds the sweep budget; narrow --laws or use random mode");
    }
  } else {
    total = mode.samples;
  }

  const auto instance_at = [&](long long index) {
    if (mode.kind == SweepMode::Kind::Random) {
      return sample_instance(u, law.arity, mode.seed, index);
    }
    std::vector<Relation> inst(law.arity, Relation::empty(u));
    long long rest = index;
    for (int s = law.arity - 1; s >= 0; --s) {
      const long long at = rest % doms[s].size;
      rest /= doms[s].size;
      const std::uint64_t code =
          doms[s].full ? static_cast<std::uint64_t>(at) : doms[s].codes[at];
      inst[s] = Relation::from_encoding(u, code);
    }
    return inst;
  };

  int nw = std::clamp(workers, 1, 64);
  nw = static_cast<int>(std::min<long long>(nw, std::max<long long>(total, 1)));
  const long long chunk = (total + nw - 1) / nw;

  std::vector<WorkerResult> results(nw);
  {
    std::vector<std::thread> threads;
    threads.reserve(nw);
    for (int w = 0; w < nw; ++w) {
      const long long begin = w * chunk;
      const long long end = std::min(total, begin + chunk);
      threads.emplace_back([&, w, begin, end] {
        WorkerResult& out = results[w];
        try {
          for (long long i = begin; i < end; ++i) {
            const std::vector<Relation> inst = instance_at(i);
            if (law.guard(inst)) ++out.qualifying;
            if (out.first_bad < 0 && !law.holds(inst)) {
              out.first_bad = i;
              out.witness = inst;
            }
          }
        } catch (...) {
          out.error = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
  }

  rep.instances = total;
  long long best = -1;
  for (const WorkerResult& r : results) {
    if (r.error) std::rethrow_exception(r.error);
    rep.qualifying += r.qualifying;
    if (r.first_bad >= 0 && (best < 0 || r.first_bad < best)) {
      best = r.first_bad;
      rep.witness = r.witness;
    }
  }

  if (best >= 0) {
    rep.status = ReportStatus::Counterexample;
  } else if (!law.guard_desc.empty() && rep.qualifying == 0) {
    rep.status = ReportStatus::Inconclusive;
  } else {
    rep.status = ReportStatus::Holds;
  }
  return rep;
}

}  // namespace

SuiteReport run_suite(const Universe& u, const SweepMode& mode,
                      const std::vector<std::string>& law_ids,
                      const SuiteOptions& opts) {
  const int n = u.size();
  if (n < 1 || n > 8) {
    throw std::invalid_argument("run_suite: universe size must be in [1, 8]");
  }
  if (mode.kind == SweepMode::Kind::Exhaustive && n > 4) {
    throw std::invalid_argument("run_suite: exhaustive bound is 4");
  }
  if (mode.kind == SweepMode::Kind::Random && mode.samples < 1) {
    throw std::invalid_argument("run_suite: random mode needs samples ≥ 1");
  }

  std::vector<const Law*> selected;
  if (law_ids.empty()) {
    for (const Law& l : law_catalog()) {
      if (!l.mutated) selected.push_back(&l);
    }
  } else {
    for (const std::string& id : law_ids) {
      const Law* l = find_law(id);
      if (l == nullptr) {
        throw std::invalid_argument("run_suite: unknown law id: " + id);
      }
      selected.push_back(l);
    }
  }

  SuiteReport report;
  report.n = n;
  report.mode = mode;
  for (const Law* law : selected) {
    report.laws.push_back(sweep_law(*law, u, mode, opts.workers));
    switch (report.laws.back().status) {
      case ReportStatus::Holds: ++report.holds; break;
      case ReportStatus::Counterexample: ++report.counterexamples; break;
      case ReportStatus::Inconclusive: ++report.inconclusive; break;
    }
  }
  return report;
}

std::string render_report_text(const SuiteReport& report) {
  std::ostringstream out;
  out << "law suite: n=" << report.n << ", mode=";
  if (report.mode.kind == SweepMode::Kind::Exhaustive) {
    out << "exhaustive";
  } else {
    out << "random, samples=" << report.mode.samples
        << ", seed=" << report.mode.seed;
  }
  out << "\n";
  for (const LawReport& law : report.laws) {
    out << "  " << std::left << std::setw(28) << law.id << " " << std::setw(15)
        << to_string(law.status) << " instances=" << law.instances
        << " qualifying=" << law.qualifying << "\n";
    for (size_t i = 0; i < law.witness.size(); ++i) {
      out << "    witness[" << i << "] = " << law.witness[i].encoding() << " "
          << to_pair_string(law.witness[i]) << "\n";
    }
  }
  out << "summary: " << report.laws.size() << " laws, " << report.holds
      << " hold, " << report.counterexamples << " counterexamples, "
      << report.inconclusive << " inconclusive\n";
  return out.str();
}

std::string render_report_machine(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite n=" << report.n << " mode=";
  if (report.mode.kind == SweepMode::Kind::Exhaustive) {
    out << "exhaustive";
  } else {
    out << "random samples=" << report.mode.samples
        << " seed=" << report.mode.seed;
  }
  out << " laws=" << report.laws.size() << "\n";
  for (const LawReport& law : report.laws) {
    out << "law id=" << law.id << " status=" << to_string(law.status)
        << " instances=" << law.instances
        << " qualifying=" << law.qualifying;
    if (!law.witness.empty()) {
      out << " witness=";
      for (size_t i = 0; i < law.witness.size(); ++i) {
        out << (i ? "," : "") << law.witness[i].encoding();
      }
    }
    out << "\n";
  }
  out << "summary holds=" << report.holds
      << " counterexamples=" << report.counterexamples
      << " inconclusive=" << report.inconclusive << "\n";
  return out.str();
}

namespace {

std::string field_value(const std::string& token, const std::string& key,
                        int line_no) {
  if (token.rfind(key + "=", 0) != 0) {
    throw std::invalid_argument("report line " + std::to_string(line_no) +
                                ": expected " + key + "=..., got \"" + token +
                                "\"");
  }
  return token.substr(key.size() + 1);
}

long long to_ll(const std::string& s, int line_no) {
  try {
    size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("report line " + std::to_string(line_no) +
                                ": bad number \"" + s + "\"");
  }
}

}  // namespace

SuiteReport parse_report_machine(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  SuiteReport report;
  long long expected_laws = -1;
  bool have_summary = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (line_no == 1) {
      if (tag != "suite") {
        throw std::invalid_argument("report line 1: expected suite header");
      }
      std::string tok;
      fields >> tok;
      report.n = static_cast<int>(to_ll(field_value(tok, "n", line_no), line_no));
      fields >> tok;
      const std::string mode = field_value(tok, "mode", line_no);
      if (mode == "exhaustive") {
        report.mode = SweepMode::exhaustive();
      } else if (mode == "random") {
        fields >> tok;
        const long long samples =
            to_ll(field_value(tok, "samples", line_no), line_no);
        fields >> tok;
        const long long seed =
            to_ll(field_value(tok, "seed", line_no), line_no);
        report.mode =
            SweepMode::random(samples, static_cast<std::uint64_t>(seed));
      } else {
        throw std::invalid_argument("report line 1: unknown mode " + mode);
      }
      fields >> tok;
      expected_laws = to_ll(field_value(tok, "laws", line_no), line_no);
      continue;
    }
    if (tag == "law") {
      LawReport law;
      std::string tok;
      fields >> tok;
      law.id = field_value(tok, "id", line_no);
      fields >> tok;
      const std::string status = field_value(tok, "status", line_no);
      if (status == "Holds") {
        law.status = ReportStatus::Holds;
      } else if (status == "Counterexample") {
        law.status = ReportStatus::Counterexample;
      } else if (status == "Inconclusive") {
        law.status = ReportStatus::Inconclusive;
      } else {
        throw std::invalid_argument("report line " + std::to_string(line_no) +
                                    ": unknown status " + status);
      }
      fields >> tok;
      law.instances = to_ll(field_value(tok, "instances", line_no), line_no);
      fields >> tok;
      law.qualifying = to_ll(field_value(tok, "qualifying", line_no), line_no);
      if (fields >> tok) {
        std::istringstream codes(field_value(tok, "witness", line_no));
        std::string code;
        while (std::getline(codes, code, ',')) {
          law.witness.push_back(Relation::from_encoding(
              Universe(report.n),
              static_cast<std::uint64_t>(to_ll(code, line_no))));
        }
      }
      report.laws.push_back(std::move(law));
      continue;
    }
    if (tag == "summary") {
      std::string tok;
      fields >> tok;
      report.holds = to_ll(field_value(tok, "holds", line_no), line_no);
      fields >> tok;
      report.counterexamples =
          to_ll(field_value(tok, "counterexamples", line_no), line_no);
      fields >> tok;
      report.inconclusive =
          to_ll(field_value(tok, "inconclusive", line_no), line_no);
      have_summary = true;
      continue;
    }
    throw std::invalid_argument("report line " + std::to_string(line_no) +
                                ": unknown record \"" + tag + "\"");
  }

  if (expected_laws < 0 || !have_summary ||
      expected_laws != static_cast<long long>(report.laws.size())) {
    throw std::invalid_argument("report is truncated or inconsistent");
  }
  return report;
}

}  // namespace relalg
