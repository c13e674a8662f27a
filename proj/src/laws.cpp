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

#include "relalg/laws.hpp"

#include <array>
#include <initializer_list>
#include <map>
#include <stdexcept>

#include "relalg/algorithms.hpp"
#include "relalg/predicates.hpp"

namespace relalg {

namespace {

using Inst = std::vector<Relation>;

bool iff(bool a, bool b) { return a == b; }
bool imp(bool a, bool b) { return !a || b; }

bool agree(std::initializer_list<bool> xs) {
  bool first = *xs.begin();
  for (bool x : xs) {
    if (x != first) return false;
  }
  return true;
}

Relation T(const Relation& r) { return transpose(r); }
Relation L(const Relation& r) { return Relation::universal(r.universe()); }
Relation Id(const Relation& r) { return Relation::identity(r.universe()); }

bool fterm_path(const Relation& r) {
  return is_path(r) &&
         termination_inequality(r, TerminationKind::ForwardTerminating);
}

bool bterm_path(const Relation& r) {
  return is_path(r) &&
         termination_inequality(r, TerminationKind::BackwardTerminating);
}

bool term_path(const Relation& r) { return is_terminating_path(r); }

bool bfin_path(const Relation& r) {
  return is_path(r) &&
         termination_inequality(r, TerminationKind::BackwardFinite);
}

bool ne_cycle(const Relation& r) { return is_cycle(r) && !r.is_empty(); }

// R;L ∩ (Rᵀ;L ∪ S;L) ∩ Sᵀ;L = O: the two paths do not cross.
bool noncross(const Relation& r, const Relation& s) {
  const Relation l = L(r);
  return (r * l & (T(r) * l | s * l) & T(s) * l).is_empty();
}

template <typename F>
bool exists_point(const Universe& u, F f) {
  for (int v = 0; v < u.size(); ++v) {
    if (f(Relation::point_at(u, v))) return true;
  }
  return false;
}

template <typename F>
bool all_points(const Universe& u, F f) {
  for (int v = 0; v < u.size(); ++v) {
    if (!f(Relation::point_at(u, v))) return false;
  }
  return true;
}

// Items of the twelve-way backward/forward/two-sided termination theorem,
// 1-indexed.
std::array<bool, 13> term_items(const Relation& r) {
  const Relation l = L(r);
  const Relation lr = l * r;
  const Relation rl = r * l;
  const Relation rt = T(r);
  const Relation rs = star(r);
  const Relation rts = star(rt);
  const Relation back = ~lr * r * l;
  const Relation fwd = l * r * ~rl;
  std::array<bool, 13> t{};
  t[1] = l == back || r.is_empty();
  t[2] = r <= back;
  t[3] = r <= ~lr * rs;
  t[4] = r <= rts * ~(rt * l);
  t[5] = l == fwd || r.is_empty();
  t[6] = r <= fwd;
  t[7] = r <= rs * ~rl;
  t[8] = r <= ~(l * rt) * rts;
  t[9] = l == (back & fwd) || r.is_empty();
  t[10] = r <= (back & fwd);
  t[11] = r <= (~lr * rs & rs * ~rl);
  t[12] = r <= (rts * ~(rt * l) & ~(l * rt) * rts);
  return t;
}

// Items of the strong-connectivity theorem (the R* = Rᵀ* battery),
// 1-indexed; `eq` additionally holds the equality variants of (7), (8),
// (12)-(15).
struct MscItems {
  std::array<bool, 16> it{};
  std::array<bool, 16> eq{};
};

MscItems msc_items(const Relation& r) {
  const Relation l = L(r);
  const Relation rt = T(r);
  const Relation rs = star(r);
  const Relation rts = star(rt);
  const Relation rp = r * rs;
  const Relation rtp = rt * rts;
  MscItems m;
  m.it[1] = rs == rts;
  m.it[2] = rp == rtp;
  m.it[3] = rt <= rs;
  m.it[4] = rt <= rp;
  m.it[5] = r <= rts;
  m.it[6] = r <= rtp;
  m.it[7] = rs * rt <= rp;
  m.it[8] = rt * rs <= rp;
  m.it[9] = r * l == rt * l;
  m.it[10] = r * rt <= rp;
  m.it[11] = rt * r <= rp;
  m.it[12] = r * rt * rs <= rp;
  m.it[13] = rs * rt * r <= rp;
  m.it[14] = rs * r * rt <= rp;
  m.it[15] = rt * r * rs <= rp;
  m.eq[7] = rs * rt == rp;
  m.eq[8] = rt * rs == rp;
  m.eq[12] = r * rt * rs == rp;
  m.eq[13] = rs * rt * r == rp;
  m.eq[14] = rs * r * rt == rp;
  m.eq[15] = rt * r * rs == rp;
  return m;
}

// Items of the single-strongly-connected-component theorem, 1-indexed.
std::array<bool, 11> osc_items(const Relation& r) {
  const Relation l = L(r);
  const Relation rt = T(r);
  const Relation rs = star(r);
  const Relation rts = star(rt);
  const Relation rp = r * rs;
  std::array<bool, 11> o{};
  o[1] = is_connected(r) && rs == rts;
  o[2] = rt * l * rt <= rs;
  o[3] = rt * l * rt <= rp;
  o[4] = rt * l * rt == rp;
  o[5] = rt * l * r == rp;
  o[6] = r * l * rt == rp;
  o[7] = rt * l * r <= rp;
  o[8] = r * l * rt <= rp;
  o[9] = r * l * r <= r * rp;
  o[10] = r * l * r <= rp;
  return o;
}

// Items of the backward/forward/two-sided finiteness theorem, 1-indexed.
std::array<bool, 7> fin_items(const Relation& r) {
  const Relation l = L(r);
  const Relation rts = star(T(r));
  const Relation back = ~(l * r) * r * l;
  const Relation fwd = l * r * ~(r * l);
  const bool sc = star(r) == rts;
  std::array<bool, 7> f{};
  f[1] = sc || r <= back;
  f[2] = r <= (back | rts);
  f[3] = sc || r <= fwd;
  f[4] = r <= (fwd | rts);
  f[5] = sc || r <= (back & fwd);
  f[6] = r <= ((back & fwd) | rts);
  return f;
}

std::function<bool(const Inst&)> unary(std::function<bool(const Relation&)> f) {
  return [f = std::move(f)](const Inst& in) { return f(in[0]); };
}

std::function<bool(const Inst&)> binary(
    std::function<bool(const Relation&, const Relation&)> f) {
  return [f = std::move(f)](const Inst& in) { return f(in[0], in[1]); };
}

std::function<bool(const Inst&)> always_true() {
  return [](const Inst&) { return true; };
}

std::vector<Law> build_catalog() {
  std::vector<Law> c;
  auto add = [&](std::string id, int arity, std::string guard_desc,
                 std::function<bool(const Inst&)> guard,
                 std::vector<std::function<bool(const Relation&)>> slots,
                 std::function<bool(const Inst&)> holds, bool mutated = false) {
    c.push_back(Law{std::move(id), arity, std::move(guard_desc),
                    std::move(guard), std::move(slots), std::move(holds),
                    mutated});
  };

  // --- basic consequences of the axioms ---

  add("eq-triple", 1, "", always_true(), {},
      unary([](const Relation& r) { return r <= r * T(r) * r; }));

  add("eq-loops", 1, "", always_true(), {},
      unary([](const Relation& r) {
        return (r & Id(r)) == (T(r) & Id(r));
      }));

  add("lem-swap", 3, "P surjective, R injective",
      [](const Inst& in) {
        return is_basic(in[0], BasicProperty::Surjective) &&
               is_injective(in[2]);
      },
      {[](const Relation& p) { return is_basic(p, BasicProperty::Surjective); },
       [](const Relation&) { return true; },
       [](const Relation& r) { return is_injective(r); }},
      [](const Inst& in) {
        const Relation &p = in[0], &q = in[1], &r = in[2];
        const bool fwd = p <= q * r, bwd = r <= T(q) * p;
        const bool bij_both = is_basic(p, BasicProperty::Bijective) &&
                              is_basic(r, BasicProperty::Bijective);
        return imp(is_basic(p, BasicProperty::Surjective) && is_injective(r),
                   imp(fwd, bwd)) &&
               imp(bij_both, iff(fwd, bwd));
      });

  add("lem-vec", 2, "v and w vectors (second clause unguarded)",
      [](const Inst& in) { return is_vector(in[0]) && is_vector(in[1]); }, {},
      binary([](const Relation& v, const Relation& w) {
        const Relation l = L(v);
        return imp(is_vector(v) && is_vector(w), v * T(w) == (v & T(w))) &&
               v * l * w == (v * l & l * w);
      }));

  add("tarski", 1, "", always_true(), {},
      unary([](const Relation& r) {
        const Relation l = L(r);
        return iff(!r.is_empty(), l * r * l == l);
      }));

  add("point-char", 1, "", always_true(), {},
      unary([](const Relation& p) {
        return iff(is_point(p),
                   is_vector(p) && is_injective(p) && !p.is_empty());
      }));

  // Constructive reading: a non-empty relation contains an atom built from
  // two points.
  add("point-axiom", 1, "", always_true(), {},
      unary([](const Relation& r) {
        if (r.is_empty()) return true;
        const Relation p = choose_point(r * L(r));
        const Relation q = choose_point(T(r) * p);
        const Relation a = p * T(q);
        return is_atom(a) && a <= r;
      }));

  add("star-consequences", 2, "", always_true(), {},
      binary([](const Relation& r, const Relation& s) {
        return (star(r) | star(s)) == (plus(r) | star(s)) &&
               star(T(r)) == T(star(r));
      }));

  // --- paths and connectivity ---

  add("conv-path", 1, "", always_true(), {},
      unary([](const Relation& r) {
        return iff(is_connected(r), is_connected(T(r))) &&
               iff(is_path(r), is_path(T(r)));
      }));

  add("conn-8way", 1, "R univalent and injective",
      unary([](const Relation& r) {
        return is_univalent(r) && is_injective(r);
      }),
      {},
      unary([](const Relation& r) {
        if (!(is_univalent(r) && is_injective(r))) return true;
        const Relation l = L(r);
        const Relation rt = T(r);
        const Relation rs = star(r);
        const Relation rts = star(rt);
        const Relation rp = r * rs;
        const Relation rtp = rt * rts;
        const Relation un = rs | rts;
        return agree({r * l * r <= un, r * l * rt <= un, rt * l * r <= un,
                      rt * l * rt <= un, rp * l * rp <= un, rp * l * rtp <= un,
                      rtp * l * rp <= un, rtp * l * rtp <= un});
      }));

  // --- start points and end points ---

  add("sp-inj", 1, "R a path", unary([](const Relation& r) { return is_path(r); }),
      {},
      unary([](const Relation& r) {
        return imp(is_path(r), is_injective(start_points(r)) &&
                                   is_injective(end_points(r)));
      }));

  add("sp-point", 1, "R a path",
      unary([](const Relation& r) { return is_path(r); }), {},
      unary([](const Relation& r) {
        if (!is_path(r)) return true;
        const Relation sp = start_points(r), ep = end_points(r);
        return (sp.is_empty() || is_point(sp)) &&
               (ep.is_empty() || is_point(ep));
      }));

  struct SeIff {
    const char* id;
    std::function<bool(const Relation&)> body;
  };
  const SeIff se[] = {
      {"se-iff-1",
       [](const Relation& r) {
         const Relation l = L(r);
         return iff(!start_points(r).is_empty(), l == ~(l * r) * r * l);
       }},
      {"se-iff-2",
       [](const Relation& r) {
         return iff(start_points(r).is_empty(), r * L(r) <= T(r) * L(r));
       }},
      {"se-iff-3",
       [](const Relation& r) {
         const Relation l = L(r);
         return iff(!end_points(r).is_empty(), l == l * r * ~(r * l));
       }},
      {"se-iff-4",
       [](const Relation& r) {
         return iff(end_points(r).is_empty(), T(r) * L(r) <= r * L(r));
       }},
      {"se-iff-5",
       [](const Relation& r) {
         const Relation l = L(r);
         return iff(!start_points(r).is_empty() && !end_points(r).is_empty(),
                    l == (~(l * r) * r * l & l * r * ~(r * l)));
       }},
      {"se-iff-6",
       [](const Relation& r) {
         return iff(start_points(r).is_empty() && end_points(r).is_empty(),
                    r * L(r) == T(r) * L(r));
       }},
  };
  for (const auto& e : se) {
    add(e.id, 1, "R a path",
        unary([](const Relation& r) { return is_path(r); }), {},
        unary([body = e.body](const Relation& r) {
          return imp(is_path(r), body(r));
        }));
  }

  add("edge-lemma", 2, "p and q points",
      [](const Inst& in) { return is_point(in[0]) && is_point(in[1]); },
      {[](const Relation& p) { return is_point(p); },
       [](const Relation& q) { return is_point(q); }},
      binary([](const Relation& p, const Relation& q) {
        if (!(is_point(p) && is_point(q))) return true;
        const Relation e = p * T(q);
        if (!is_path(e)) return false;
        if (!(p == q)) {
          return start_points(e) == p && end_points(e) == q;
        }
        return start_points(e).is_empty() && end_points(e).is_empty();
      }));

  add("term-12", 1, "R a path",
      unary([](const Relation& r) { return is_path(r); }), {},
      unary([](const Relation& r) {
        if (!is_path(r)) return true;
        const auto t = term_items(r);
        const auto tc = term_items(T(r));
        const bool back =
            termination_inequality(r, TerminationKind::BackwardTerminating);
        const bool fwd =
            termination_inequality(r, TerminationKind::ForwardTerminating);
        const bool both =
            termination_inequality(r, TerminationKind::Terminating);
        return agree({t[1], t[2], t[3], t[4], back}) &&
               agree({t[5], t[6], t[7], t[8], fwd}) &&
               agree({t[9], t[10], t[11], t[12], both}) &&
               iff(t[2], tc[6]) && iff(t[10], tc[10]);
      }));

  add("concat", 2,
      "R forward terminating path, S backward terminating path, "
      "ep(R) = sp(S), non-crossing",
      [](const Inst& in) {
        return fterm_path(in[0]) && bterm_path(in[1]) &&
               end_points(in[0]) == start_points(in[1]) &&
               noncross(in[0], in[1]);
      },
      {fterm_path, bterm_path},
      binary([](const Relation& r, const Relation& s) {
        if (!(fterm_path(r) && bterm_path(s) &&
              end_points(r) == start_points(s) && noncross(r, s))) {
          return true;
        }
        const Relation u = r | s;
        return is_path(u) && start_points(u) <= start_points(r) &&
               end_points(u) <= end_points(s);
      }));

  add("concat-strength", 2, "", always_true(), {},
      binary([](const Relation& r, const Relation& s) {
        const Relation l = L(r);
        return iff((r * l & T(s) * l).is_empty(),
                   noncross(r, s) &&
                       (start_points(r) & end_points(s)).is_empty());
      }));

  add("concat-sp", 2,
      "R forward terminating path, S backward terminating path, "
      "ep(R) = sp(S), R;L ∩ Sᵀ;L = O",
      [](const Inst& in) {
        const Relation l = L(in[0]);
        return fterm_path(in[0]) && bterm_path(in[1]) &&
               end_points(in[0]) == start_points(in[1]) &&
               (in[0] * l & T(in[1]) * l).is_empty();
      },
      {fterm_path, bterm_path},
      binary([](const Relation& r, const Relation& s) {
        const Relation l = L(r);
        if (!(fterm_path(r) && bterm_path(s) &&
              end_points(r) == start_points(s) &&
              (r * l & T(s) * l).is_empty())) {
          return true;
        }
        const Relation u = r | s;
        return start_points(u) == start_points(r) &&
               end_points(u) == end_points(s);
      }));

  add("restrict", 2, "p a point, R a path",
      [](const Inst& in) { return is_point(in[0]) && is_path(in[1]); },
      {[](const Relation& p) { return is_point(p); },
       [](const Relation& r) { return is_path(r); }},
      binary([](const Relation& p, const Relation& r) {
        if (!(is_point(p) && is_path(r))) return true;
        const Relation x = star(T(r)) * p & r;
        return is_path(x) && start_points(x) <= p &&
               end_points(x) <= end_points(r);
      }));

  // With p on the path the restriction is non-empty and inherits the end
  // point; p becomes its start point unless the restriction closes into a
  // cycle (then there is no start point at all).
  add("restrict-on", 2, "p a point on the path: p ⊆ R;L",
      [](const Inst& in) {
        return is_point(in[0]) && is_path(in[1]) && in[0] <= in[1] * L(in[1]);
      },
      {[](const Relation& p) { return is_point(p); },
       [](const Relation& r) { return is_path(r); }},
      binary([](const Relation& p, const Relation& r) {
        if (!(is_point(p) && is_path(r) && p <= r * L(r))) return true;
        const Relation x = star(T(r)) * p & r;
        return !x.is_empty() && end_points(x) == end_points(r) &&
               (start_points(x) == p || star(x) == star(T(x)));
      }));

  // --- cycles and strong connectivity ---

  add("msc-1to8", 1, "", always_true(), {},
      unary([](const Relation& r) {
        const auto m = msc_items(r);
        return agree({m.it[1], m.it[2], m.it[3], m.it[4], m.it[5], m.it[6],
                      m.it[7], m.it[8]});
      }));

  add("msc-implied-9to15", 1, "", always_true(), {},
      unary([](const Relation& r) {
        const auto m = msc_items(r);
        return imp(m.it[1], m.it[9] && m.it[10] && m.it[11] && m.it[12] &&
                                m.it[13] && m.it[14] && m.it[15]);
      }));

  add("msc-conditional", 1, "R univalent or injective",
      unary([](const Relation& r) {
        return is_univalent(r) || is_injective(r);
      }),
      {},
      unary([](const Relation& r) {
        const auto m = msc_items(r);
        return imp(is_univalent(r), iff(m.it[10], m.it[1]) &&
                                        iff(m.it[12], m.it[1]) &&
                                        iff(m.it[14], m.it[1])) &&
               imp(is_injective(r), iff(m.it[11], m.it[1]) &&
                                        iff(m.it[13], m.it[1]) &&
                                        iff(m.it[15], m.it[1]));
      }));

  add("msc-equalities", 1, "", always_true(), {},
      unary([](const Relation& r) {
        const auto m = msc_items(r);
        return agree({m.it[1], m.it[2], m.it[3], m.it[4], m.it[5], m.it[6],
                      m.eq[7], m.eq[8]}) &&
               imp(m.it[1], m.eq[12] && m.eq[13] && m.eq[14] && m.eq[15]) &&
               imp(is_univalent(r),
                   iff(m.eq[12], m.it[1]) && iff(m.eq[14], m.it[1])) &&
               imp(is_injective(r),
                   iff(m.eq[13], m.it[1]) && iff(m.eq[15], m.it[1]));
      }));

  add("osc-1to6", 1, "", always_true(), {},
      unary([](const Relation& r) {
        const auto o = osc_items(r);
        return agree({o[1], o[2], o[3], o[4], o[5], o[6]});
      }));

  add("osc-implied-7to10", 1, "", always_true(), {},
      unary([](const Relation& r) {
        const auto o = osc_items(r);
        return imp(o[1], o[7] && o[8] && o[9] && o[10]);
      }));

  add("osc-conditional", 1, "R univalent or injective",
      unary([](const Relation& r) {
        return is_univalent(r) || is_injective(r);
      }),
      {},
      unary([](const Relation& r) {
        const auto o = osc_items(r);
        return imp(is_injective(r), iff(o[7], o[1])) &&
               imp(is_univalent(r), iff(o[8], o[1])) &&
               imp(is_injective(r) && is_univalent(r), iff(o[9], o[1]));
      }));

  add("osc-9-equality", 1, "", always_true(), {},
      unary([](const Relation& r) {
        const Relation l = L(r);
        const Relation rp = plus(r);
        return iff(r * l * r <= r * rp, r * l * r == r * rp);
      }));

  add("osc-10-equality", 1, "", always_true(), {},
      unary([](const Relation& r) {
        const Relation l = L(r);
        const Relation rp = plus(r);
        return iff(r * l * r <= rp, r * l * r == rp);
      }));

  // The guard doubles as a witness search: any qualifying instance is an
  // injective univalent R satisfying R;L;R ⊆ R⁺ without being strongly
  // connected, so the vacuity flag reports whether the asymmetry is
  // realised at the swept size.
  add("fig2-asymmetry", 1,
      "R injective and univalent with R;L;R ⊆ R⁺ but not strongly connected",
      unary([](const Relation& r) {
        if (!(is_injective(r) && is_univalent(r))) return false;
        const auto o = osc_items(r);
        return o[10] && !o[1];
      }),
      {},
      unary([](const Relation& r) {
        if (!(is_injective(r) && is_univalent(r))) return true;
        const auto o = osc_items(r);
        return imp(o[7], o[1]) && imp(o[8], o[1]) && imp(o[9], o[1]);
      }));

  add("fin-6", 1, "", always_true(), {},
      unary([](const Relation& r) {
        const auto f = fin_items(r);
        const auto fc = fin_items(T(r));
        return iff(f[1], f[2]) && iff(f[3], f[4]) && iff(f[5], f[6]) &&
               iff(f[2], fc[4]) && iff(f[6], fc[6]);
      }));

  add("cyc-from-path", 1, "R a terminating path", unary(term_path), {},
      unary([](const Relation& r) {
        return imp(term_path(r),
                   is_cycle(r | end_points(r) * T(start_points(r))));
      }));

  add("cyc-minus-edge", 1, "R a non-empty cycle", unary(ne_cycle), {},
      unary([](const Relation& r) {
        if (!is_cycle(r)) return true;
        const Universe u = r.universe();
        return all_points(u, [&](const Relation& e) {
          return all_points(u, [&](const Relation& s) {
            const Relation edge = e * T(s);
            if (!(edge <= r)) return true;
            const Relation x = r & ~edge;
            bool ok = term_path(x) && start_points(x) <= s &&
                      end_points(x) <= e;
            if (!(s == e)) {
              ok = ok && start_points(x) == s && end_points(x) == e;
            }
            return ok;
          });
        });
      }));

  add("cyc-join", 2,
      "R, S terminating paths, sp(R) = ep(S), sp(S) = ep(R), non-crossing",
      [](const Inst& in) {
        return term_path(in[0]) && term_path(in[1]) &&
               start_points(in[0]) == end_points(in[1]) &&
               start_points(in[1]) == end_points(in[0]) &&
               noncross(in[0], in[1]);
      },
      {term_path, term_path},
      binary([](const Relation& r, const Relation& s) {
        if (!(term_path(r) && term_path(s) &&
              start_points(r) == end_points(s) &&
              start_points(s) == end_points(r) && noncross(r, s))) {
          return true;
        }
        return is_cycle(r | s);
      }));

  // --- rooted characterisations ---

  auto bi = [](const Relation& r) {
    return is_injective(r) && is_univalent(r);
  };
  const std::string bi_desc = "R injective and univalent";

  add("root-path", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Relation un = star(r) | star(T(r));
        return iff(is_path(r), exists_point(r.universe(), [&](const Relation& p) {
                 return p * r <= un;
               }));
      }));

  add("root-path-ne", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Relation un = star(r) | star(T(r));
        const Relation onpath = (r | T(r)) * L(r);
        return iff(is_path(r) && !r.is_empty(),
                   exists_point(r.universe(), [&](const Relation& p) {
                     return p * r <= un && p <= onpath;
                   }));
      }));

  add("root-acyclic", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Relation un = star(r) | star(T(r));
        return all_points(r.universe(), [&](const Relation& p) {
          return imp(p * r <= un && (r * p).is_empty(), is_acyclic(r));
        });
      }));

  add("root-bfin", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Relation rp = plus(r);
        return iff(bfin_path(r),
                   exists_point(r.universe(), [&](const Relation& p) {
                     return p * r <= rp;
                   }));
      }));

  // Holds for arbitrary R, not only under the rooted-path hypotheses.
  add("root-bfin-equiv", 1, "", always_true(), {},
      unary([](const Relation& r) {
        const Relation l = L(r);
        const Relation rp = plus(r);
        const Relation rtp = plus(T(r));
        const Relation rtl = T(r) * l;
        return all_points(r.universe(), [&](const Relation& p) {
          return agree({p * r <= rp, rtl <= rtp * p, rtl == rtp * p});
        });
      }));

  add("root-bfin-ne", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Relation rp = plus(r);
        const Relation rl = r * L(r);
        return iff(bfin_path(r) && !r.is_empty(),
                   exists_point(r.universe(), [&](const Relation& p) {
                     return p * r <= rp && p <= rl;
                   }));
      }));

  add("root-bfin-acyclic-iff", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Relation rp = plus(r);
        return all_points(r.universe(), [&](const Relation& p) {
          return imp(p * r <= rp, iff((r * p).is_empty(), is_acyclic(r)));
        });
      }));

  add("root-cycle", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        const Relation rtl = T(r) * L(r);
        // For points, sitting on an incoming edge and R;p ≠ O coincide
        // regardless of the shape of R.
        const bool point_equiv =
            all_points(r.universe(), [&](const Relation& p) {
              return iff(p <= rtl, !(r * p).is_empty());
            });
        if (!bi(r)) return point_equiv;
        const Relation rp = plus(r);
        return point_equiv &&
               iff(ne_cycle(r), exists_point(r.universe(), [&](const Relation& p) {
                 return p * r <= rp && p <= rtl;
               }));
      }));

  add("root-cycle-anypoint", 1, "R a non-empty cycle (via a rooted point)",
      unary([bi](const Relation& r) { return bi(r) && ne_cycle(r); }), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Universe u = r.universe();
        const Relation l = L(r);
        const Relation rl = r * l;
        const Relation rtl = T(r) * l;
        const Relation rs = star(r);
        const Relation rp = plus(r);
        const Relation rtp = plus(T(r));
        return all_points(u, [&](const Relation& p) {
          if (!(p * r <= rp && p <= rtl)) return true;
          if (!(p * T(r) <= rtp && p <= rl)) return false;
          return all_points(u, [&](const Relation& q) {
            const bool on = q <= rs * p;
            if (!agree({on, p <= rs * q, !(r * q).is_empty(),
                        !(T(r) * q).is_empty(), q <= rl, q <= rtl})) {
              return false;
            }
            if (!on) return true;
            return q * r <= rp && q <= rtl && q <= rp * q &&
                   rp * q == rs * q && rs * q == rs * p && rs * p == rl;
          });
        });
      }));

  add("root-cycle-subset-eq", 2, "R, S non-empty cycles",
      [](const Inst& in) { return ne_cycle(in[0]) && ne_cycle(in[1]); },
      {ne_cycle, ne_cycle},
      binary([](const Relation& r, const Relation& s) {
        return imp(ne_cycle(r) && ne_cycle(s) && r <= s, r == s);
      }));

  add("root-cycle-oneineq", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Relation bound = plus(r) & T(r) * L(r);
        return iff(is_cycle(r),
                   exists_point(r.universe(), [&](const Relation& p) {
                     return p * r <= bound;
                   }));
      }));

  add("root-bterm", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Relation rp = plus(r);
        return iff(bterm_path(r),
                   exists_point(r.universe(), [&](const Relation& p) {
                     return p * r <= rp && (r * p).is_empty();
                   }));
      }));

  add("root-bterm-sp", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Relation sp = start_points(r);
        return iff(bterm_path(r) && !r.is_empty(),
                   is_point(sp) && sp * r <= plus(r));
      }));

  add("root-term", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Universe u = r.universe();
        const Relation rp = plus(r);
        const Relation rs = star(r);
        return iff(term_path(r), exists_point(u, [&](const Relation& p) {
                 return exists_point(u, [&](const Relation& q) {
                   return p * r <= rp && p <= rs * q &&
                          (T(r) * q).is_empty();
                 });
               }));
      }));

  add("root-term-consequences", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Universe u = r.universe();
        const Relation rp = plus(r);
        const Relation rs = star(r);
        const Relation rts = star(T(r));
        const Relation rtp = plus(T(r));
        return all_points(u, [&](const Relation& p) {
          return all_points(u, [&](const Relation& q) {
            if (!(p * r <= rp && p <= rs * q && (T(r) * q).is_empty())) {
              return true;
            }
            return (r * p).is_empty() && q <= rts * p &&
                   q * T(r) <= rtp && iff(r.is_empty(), p == q);
          });
        });
      }));

  add("root-term-ne", 1, bi_desc, unary(bi), {},
      unary([bi](const Relation& r) {
        if (!bi(r)) return true;
        const Relation sp = start_points(r);
        const Relation ep = end_points(r);
        return iff(term_path(r) && !r.is_empty(),
                   is_point(sp) && is_point(ep) && sp * r <= plus(r) &&
                       sp <= star(r) * ep);
      }));

  // --- deliberately weakened variants (mutation sensitivity) ---

  add("mut-osc10", 1, "R;L;R ⊆ R⁺",
      unary([](const Relation& r) { return osc_items(r)[10]; }), {},
      unary([](const Relation& r) {
        const auto o = osc_items(r);
        return imp(o[10], o[1]);
      }),
      /*mutated=*/true);

  add("mut-msc-drop-univalent", 1, "R;Rᵀ ⊆ R⁺",
      unary([](const Relation& r) { return msc_items(r).it[10]; }), {},
      unary([](const Relation& r) {
        const auto m = msc_items(r);
        return imp(m.it[10], m.it[1]);
      }),
      /*mutated=*/true);

  add("mut-sp-point", 1, "R a path",
      unary([](const Relation& r) { return is_path(r); }), {},
      unary([](const Relation& r) {
        return imp(is_path(r), is_point(start_points(r)));
      }),
      /*mutated=*/true);

  add("mut-concat-noncross", 2,
      "concat hypotheses minus the non-crossing condition",
      [](const Inst& in) {
        return fterm_path(in[0]) && bterm_path(in[1]) &&
               end_points(in[0]) == start_points(in[1]);
      },
      {fterm_path, bterm_path},
      binary([](const Relation& r, const Relation& s) {
        if (!(fterm_path(r) && bterm_path(s) &&
              end_points(r) == start_points(s))) {
          return true;
        }
        const Relation u = r | s;
        return is_path(u) && start_points(u) <= start_points(r) &&
               end_points(u) <= end_points(s);
      }),
      /*mutated=*/true);

  add("mut-concat-drop-injective", 2,
      "concat hypotheses with R's injectivity dropped",
      [](const Inst& in) {
        const Relation& r = in[0];
        return is_univalent(r) && is_connected(r) &&
               termination_inequality(r, TerminationKind::ForwardTerminating) &&
               bterm_path(in[1]) &&
               end_points(r) == start_points(in[1]) && noncross(r, in[1]);
      },
      {[](const Relation& r) {
         return is_univalent(r) && is_connected(r) &&
                termination_inequality(r,
                                       TerminationKind::ForwardTerminating);
       },
       bterm_path},
      binary([](const Relation& r, const Relation& s) {
        if (!(is_univalent(r) && is_connected(r) &&
              termination_inequality(r,
                                     TerminationKind::ForwardTerminating) &&
              bterm_path(s) && end_points(r) == start_points(s) &&
              noncross(r, s))) {
          return true;
        }
        const Relation u = r | s;
        return is_path(u) && start_points(u) <= start_points(r) &&
               end_points(u) <= end_points(s);
      }),
      /*mutated=*/true);

  return c;
}

}  // namespace

std::string to_string(LawStatus s) {
  switch (s) {
    case LawStatus::Holds: return "Holds";
    case LawStatus::Counterexample: return "Counterexample";
  }
  return "?";
}

const std::vector<Law>& law_catalog() {
  static const std::vector<Law> catalog = build_catalog();
  return catalog;
}

const Law* find_law(const std::string& id) {
  static const std::map<std::string, const Law*> index = [] {
    std::map<std::string, const Law*> m;
    for (const Law& l : law_catalog()) m.emplace(l.id, &l);
    return m;
  }();
  auto it = index.find(id);
  return it == index.end() ? nullptr : it->second;
}

CheckResult check_law(const Law& law, const std::vector<Relation>& instance) {
  if (static_cast<int>(instance.size()) != law.arity) {
    throw std::invalid_argument("check_law: law " + law.id + " expects " +
                                std::to_string(law.arity) + " relations, got " +
                                std::to_string(instance.size()));
  }
  CheckResult result;
  result.law_id = law.id;
  result.instances_checked = 1;
  if (law.holds(instance)) {
    result.status = LawStatus::Holds;
  } else {
    result.status = LawStatus::Counterexample;
    result.witness = instance;
  }
  return result;
}

CheckResult check_law(const std::string& id,
                      const std::vector<Relation>& instance) {
  const Law* law = find_law(id);
  if (law == nullptr) {
    throw std::invalid_argument("check_law: unknown law id: " + id);
  }
  return check_law(*law, instance);
}

}  // namespace relalg
