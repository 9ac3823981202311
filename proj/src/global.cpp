#include "dweb/global.hpp"

#include "dweb/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace dweb {

namespace {

void require_trivalent(const Web &web, const char *what) {
  for (const auto &v : web.vertices)
    if (v.kind != VertexKind::trivalent)
      throw SingularUnsupported(std::string(what) + ": web has a " + to_string(v.kind) + " vertex");
}

int corner(const Web &w, int in_he, int out_he) {
  return turn_between(opposite_octant(w.departure(in_he)), w.departure(out_he));
}

// Whether a half-edge carries an edge traversed in direction d into its vertex.
bool enters(int he, int d) { return (he_end(he) == 1) == (d > 0); }

LaurentPoly qpow_integral(const Rational &r) {
  if (r.denominator() != 1)
    throw std::logic_error("non-integral exponent " + std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
  return qpow(r.numerator());
}

// Turning of the vectorial arc where it leaves or joins the spin bundle.
int vect_corner(const Web &w, const TrivalentSlots &s, const ALabeling &l) {
  return enters(s.vect, l.dir[he_edge(s.vect)]) ? corner(w, s.vect, s.spin_out) : corner(w, s.spin_in, s.vect);
}

}  // namespace

// ---------------------------------------------------------------------------
// Oriented cycles

bool OrientedCycleZ::empty() const {
  return std::all_of(dir.begin(), dir.end(), [](std::int8_t d) { return d == 0; });
}

int OrientedCycleZ::edge_count() const {
  return static_cast<int>(std::count_if(dir.begin(), dir.end(), [](std::int8_t d) { return d != 0; }));
}

std::vector<OrientedCycleZ> enumerate_Z(const Web &web) {
  require_trivalent(web, "enumerate_Z");
  const int E = static_cast<int>(web.edges.size());
  const int V = static_cast<int>(web.vertices.size());
  std::vector<TrivalentSlots> slots(V);
  for (int v = 0; v < V; ++v) slots[v] = trivalent_slots(web, v);

  constexpr std::int8_t kUnset = 2;
  std::vector<std::int8_t> dir(E, kUnset);
  std::vector<OrientedCycleZ> out;
  std::vector<int> loops;
  for (int e = 0; e < E; ++e)
    if (web.edges[e].is_loop()) loops.push_back(e);

  auto emit_loops = [&](auto &self, std::size_t i) -> void {
    if (i == loops.size()) {
      out.push_back(OrientedCycleZ{dir});
      return;
    }
    const int e = loops[i];
    const std::vector<std::int8_t> choices =
        is_spin(web.edges[e].kind) ? std::vector<std::int8_t>{0, 1} : std::vector<std::int8_t>{0, 1, -1};
    for (auto d : choices) {
      dir[e] = d;
      self(self, i + 1);
    }
    dir[e] = kUnset;
  };

  // Vertex states: 0 avoids Z, 1 straight along the spin, 2 in along the spin and out
  // along the vectorial edge, 3 in along the vectorial edge and out along the spin.
  auto visit = [&](auto &self, int v) -> void {
    if (v == V) {
      emit_loops(emit_loops, 0);
      return;
    }
    const auto &s = slots[v];
    for (int state = 0; state < 4; ++state) {
      const bool use_in = state == 1 || state == 2;
      const bool use_out = state == 1 || state == 3;
      const bool use_vect = state >= 2;
      std::int8_t vd = 0;
      if (state == 2) vd = he_end(s.vect) == 0 ? 1 : -1;
      if (state == 3) vd = he_end(s.vect) == 1 ? 1 : -1;
      const std::pair<int, std::int8_t> wants[3] = {{he_edge(s.spin_in), static_cast<std::int8_t>(use_in ? 1 : 0)},
                                                    {he_edge(s.spin_out), static_cast<std::int8_t>(use_out ? 1 : 0)},
                                                    {he_edge(s.vect), static_cast<std::int8_t>(use_vect ? vd : 0)}};
      std::vector<int> touched;
      bool ok = true;
      for (const auto &[e, d] : wants) {
        if (dir[e] == kUnset) {
          dir[e] = d;
          touched.push_back(e);
        } else if (dir[e] != d) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, v + 1);
      for (int e : touched) dir[e] = kUnset;
    }
  };
  visit(visit, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Shifts

int side_sign(const Web &web, int vertex) { return which_side(web, vertex) == Side::right ? 1 : -1; }

Rational spin_rotational(const Web &web) {
  require_trivalent(web, "spin_rotational");
  std::int64_t t = 0;
  for (int e = 0; e < static_cast<int>(web.edges.size()); ++e)
    if (is_spin(web.edges[e].kind)) t += web.edge_turning(e);
  for (int v = 0; v < static_cast<int>(web.vertices.size()); ++v) {
    const auto s = trivalent_slots(web, v);
    t += corner(web, s.spin_in, s.spin_out);
  }
  return Rational(t, 8);
}

Rational cycle_rotational(const Web &web, const OrientedCycleZ &z) {
  std::int64_t t = 0;
  for (int e = 0; e < static_cast<int>(web.edges.size()); ++e) t += z.dir[e] * web.edge_turning(e);
  for (const auto &v : web.vertices) {
    int in = -1, out = -1;
    for (int he : v.half_edges) {
      const int d = z.dir[he_edge(he)];
      if (d != 0) (enters(he, d) ? in : out) = he;
    }
    if (in >= 0 && out >= 0) t += corner(web, in, out);
  }
  return Rational(t, 8);
}

Rational gsh(const Web &web, int N) {
  Rational r = -Rational(N - 1) * spin_rotational(web);
  for (int v = 0; v < static_cast<int>(web.vertices.size()); ++v) r += Rational(side_sign(web, v), 2);
  return r;
}

Rational zsh(const Web &web, const OrientedCycleZ &z, int N) {
  require_trivalent(web, "zsh");
  Rational r = Rational(2 * (N - 1)) * cycle_rotational(web, z);
  for (int v = 0; v < static_cast<int>(web.vertices.size()); ++v) {
    const auto s = trivalent_slots(web, v);
    const bool in = z.dir[he_edge(s.spin_in)] != 0;
    const bool out = z.dir[he_edge(s.spin_out)] != 0;
    if (!in && !out) continue;
    if (in && out) r -= side_sign(web, v);
    else r += Rational((N - 2) * side_sign(web, v), 2);
  }
  return r;
}

Web web_minus(const Web &web, const OrientedCycleZ &z) {
  require_trivalent(web, "web_minus");
  Web w = web;
  const int E = static_cast<int>(w.edges.size());
  std::vector<bool> edge_alive(E, true), vertex_alive(w.vertices.size(), true);
  for (int e = 0; e < E; ++e) {
    if (z.dir[e] == 0) continue;
    auto &ed = w.edges[e];
    if (ed.kind == EdgeKind::vectorial) edge_alive[e] = false;
    else ed.kind = ed.kind == EdgeKind::spin_even ? EdgeKind::spin_odd : EdgeKind::spin_even;
  }
  for (auto &v : w.vertices)
    std::erase_if(v.half_edges, [&](int he) { return !edge_alive[he_edge(he)]; });

  for (int v = 0; v < static_cast<int>(w.vertices.size()); ++v) {
    auto &hs = w.vertices[v].half_edges;
    if (hs.size() != 2) continue;
    const int hin = he_end(hs[0]) == 1 ? hs[0] : hs[1];
    const int hout = hin == hs[0] ? hs[1] : hs[0];
    const int a = he_edge(hin), b = he_edge(hout);
    vertex_alive[v] = false;
    hs.clear();
    if (a == b) {
      w.edges[a].tail = w.edges[a].head = -1;
      continue;
    }
    auto &ea = w.edges[a];
    auto &eb = w.edges[b];
    ea.poly.insert(ea.poly.end(), eb.poly.begin() + 1, eb.poly.end());
    ea.head = eb.head;
    std::replace(w.vertices[eb.head].half_edges.begin(), w.vertices[eb.head].half_edges.end(), half_edge(b, 1),
                 half_edge(a, 1));
    if (ea.tail == ea.head && !vertex_alive[ea.tail]) ea.tail = ea.head = -1;
    edge_alive[b] = false;
  }

  Web r;
  std::vector<int> vmap(w.vertices.size(), -1);
  for (int v = 0; v < static_cast<int>(w.vertices.size()); ++v)
    if (vertex_alive[v]) vmap[v] = r.add_vertex(w.vertices[v].kind, w.vertices[v].pos);
  for (int e = 0; e < E; ++e) {
    if (!edge_alive[e]) continue;
    const auto &ed = w.edges[e];
    r.add_edge(ed.kind, ed.tail < 0 ? -1 : vmap[ed.tail], ed.head < 0 ? -1 : vmap[ed.head], ed.poly);
  }
  r.sort_half_edges();
  const auto rep = validate(r);
  if (!rep.ok) throw std::logic_error("web_minus produced an invalid web: " + rep.violations.front());
  return r;
}

IdentityReport branching_check(const Web &web, int N, const EvalOptions &opts) {
  if (N < 2) throw std::invalid_argument("branching_check: N must be at least 2");
  require_trivalent(web, "branching_check");
  IdentityReport rep;
  rep.N = N;
  rep.lhs = evaluate_poly(web, N, opts);
  const auto zs = enumerate_Z(web);
  rep.terms = zs.size();
  const Rational g = gsh(web, N);
  for (const auto &z : zs) {
    const auto ev = evaluate_poly(web_minus(web, z), N - 1, opts);
    if (!ev.is_zero()) rep.rhs += qpow_integral(g + zsh(web, z, N)) * ev;
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

// ---------------------------------------------------------------------------
// Type A

std::vector<ALabeling> enumerate_labelings(const Web &web, int N) {
  require_trivalent(web, "enumerate_labelings");
  const int E = static_cast<int>(web.edges.size());
  const int V = static_cast<int>(web.vertices.size());
  std::vector<TrivalentSlots> slots(V);
  for (int v = 0; v < V; ++v) slots[v] = trivalent_slots(web, v);
  // Vertices checkable once the given edge is assigned.
  std::vector<std::vector<int>> ready(E);
  for (int v = 0; v < V; ++v) {
    const int last = std::max({he_edge(slots[v].spin_in), he_edge(slots[v].spin_out), he_edge(slots[v].vect)});
    ready[last].push_back(v);
  }

  ALabeling l{std::vector<std::int8_t>(E, 1), std::vector<int>(E, 0)};
  std::vector<ALabeling> out;
  auto flow_ok = [&](int v) {
    const auto &s = slots[v];
    const int f = he_edge(s.vect);
    const int into = enters(s.vect, l.dir[f]) ? 1 : -1;
    return l.thickness[he_edge(s.spin_out)] - l.thickness[he_edge(s.spin_in)] == into;
  };
  auto visit = [&](auto &self, int e) -> void {
    if (e == E) {
      out.push_back(l);
      return;
    }
    std::vector<std::pair<std::int8_t, int>> choices;
    const auto kind = web.edges[e].kind;
    if (kind == EdgeKind::vectorial) {
      choices = {{1, 1}, {-1, 1}};
    } else {
      for (int t = kind == EdgeKind::spin_even ? 0 : 1; t <= N; t += 2) choices.push_back({1, t});
    }
    for (const auto &[d, t] : choices) {
      l.dir[e] = d;
      l.thickness[e] = t;
      if (std::all_of(ready[e].begin(), ready[e].end(), flow_ok)) self(self, e + 1);
    }
    l.dir[e] = 1;
    l.thickness[e] = 0;
  };
  visit(visit, 0);
  return out;
}

Rational ashift(const Web &web, const ALabeling &l) {
  Rational r = 0;
  for (int v = 0; v < static_cast<int>(web.vertices.size()); ++v) {
    const auto s = trivalent_slots(web, v);
    const int k = std::min(l.thickness[he_edge(s.spin_in)], l.thickness[he_edge(s.spin_out)]);
    r -= Rational(side_sign(web, v) * k, 2);
  }
  return r;
}

Rational aweb_rotational(const AWeb &a) {
  const Web &w = a.web;
  std::int64_t t = 0;
  for (int e = 0; e < static_cast<int>(w.edges.size()); ++e)
    t += static_cast<std::int64_t>(a.label.thickness[e]) * a.label.dir[e] * w.edge_turning(e);
  for (int v = 0; v < static_cast<int>(w.vertices.size()); ++v) {
    const auto s = trivalent_slots(w, v);
    const int tin = a.label.thickness[he_edge(s.spin_in)], tout = a.label.thickness[he_edge(s.spin_out)];
    t += static_cast<std::int64_t>(std::min(tin, tout)) * corner(w, s.spin_in, s.spin_out);
    t += vect_corner(w, s, a.label);
  }
  return Rational(t, 8);
}

LaurentPoly moy_evaluate(const AWeb &a, int N) {
  const Web &w = a.web;
  require_trivalent(w, "moy_evaluate");
  const int E = static_cast<int>(w.edges.size());
  const int V = static_cast<int>(w.vertices.size());
  const auto &l = a.label;
  std::vector<TrivalentSlots> slots(V);
  for (int v = 0; v < V; ++v) slots[v] = trivalent_slots(w, v);
  std::vector<int> turning(E);
  for (int e = 0; e < E; ++e) turning[e] = w.edge_turning(e);

  // Breadth-first edge order so that vertex constraints force values early.
  std::vector<int> order;
  std::vector<bool> placed(E, false);
  for (int s = 0; s < E; ++s) {
    if (placed[s]) continue;
    std::queue<int> q;
    q.push(s);
    placed[s] = true;
    while (!q.empty()) {
      const int e = q.front();
      q.pop();
      order.push_back(e);
      for (int v : {w.edges[e].tail, w.edges[e].head}) {
        if (v < 0) continue;
        for (int he : w.vertices[v].half_edges)
          if (!placed[he_edge(he)]) {
            placed[he_edge(he)] = true;
            q.push(he_edge(he));
          }
      }
    }
  }

  std::vector<Color> col(E, 0);
  std::vector<bool> known(E, false);
  auto vertex_ok = [&](int v) {
    const auto &s = slots[v];
    const Color in = col[he_edge(s.spin_in)], out = col[he_edge(s.spin_out)], f = col[he_edge(s.vect)];
    if (enters(s.vect, l.dir[he_edge(s.vect)])) return (in & f) == 0 && out == (in | f);
    return (out & f) == 0 && in == (out | f);
  };
  auto all_known = [&](int v) {
    const auto &s = slots[v];
    return known[he_edge(s.spin_in)] && known[he_edge(s.spin_out)] && known[he_edge(s.vect)];
  };

  std::vector<Color> subsets_by_size[33];
  for (Color c = 0; c < (Color{1} << N); ++c) subsets_by_size[std::popcount(c)].push_back(c);

  auto degree = [&]() {
    std::int64_t total = 0;
    for (int lo = 1; lo <= N; ++lo)
      for (int hi = lo + 1; hi <= N; ++hi) {
        auto d = [&](int e) {
          return l.dir[e] * (static_cast<int>(has_pigment(col[e], hi)) - static_cast<int>(has_pigment(col[e], lo)));
        };
        std::int64_t t = 0;
        for (int e = 0; e < E; ++e) t += d(e) * turning[e];
        for (const auto &vx : w.vertices) {
          int in = -1, out = -1;
          for (int he : vx.half_edges) {
            const int de = d(he_edge(he));
            if (de != 0) (enters(he, de) ? in : out) = he;
          }
          if (in >= 0 && out >= 0) t += corner(w, in, out);
        }
        if (t % 8 != 0) throw NonClosedTurning("moy_evaluate: bicolored curve does not close");
        total += t / 8;
      }
    return total;
  };

  LaurentPoly result;
  auto visit = [&](auto &self, std::size_t i) -> void {
    if (i == order.size()) {
      result.add_term_half(2 * degree(), 1);
      return;
    }
    const int e = order[i];
    std::vector<Color> forced;
    bool have_forced = false;
    for (int v : {w.edges[e].tail, w.edges[e].head}) {
      if (v < 0 || have_forced) continue;
      const auto &s = slots[v];
      int others[2], n = 0;
      bool ok = true;
      for (int he : {s.spin_in, s.spin_out, s.vect}) {
        if (he_edge(he) == e) continue;
        if (n == 2 || !known[he_edge(he)]) ok = false;
        else others[n++] = he_edge(he);
      }
      if (ok && n == 2) {
        forced = {col[others[0]] ^ col[others[1]]};
        have_forced = true;
      }
    }
    const auto &cands = have_forced ? forced : subsets_by_size[l.thickness[e]];
    for (Color c : cands) {
      if (std::popcount(c) != l.thickness[e]) continue;
      col[e] = c;
      known[e] = true;
      bool ok = true;
      for (int v : {w.edges[e].tail, w.edges[e].head})
        if (v >= 0 && all_known(v) && !vertex_ok(v)) ok = false;
      if (ok) self(self, i + 1);
      known[e] = false;
    }
    col[e] = 0;
  };
  visit(visit, 0);
  return result;
}

Rational vertex_sign_sum(const Web &web, const ALabeling &l) {
  std::int64_t t = 0;
  for (int v = 0; v < static_cast<int>(web.vertices.size()); ++v) t += vect_corner(web, trivalent_slots(web, v), l) / 2;
  return t;
}

Rational typeA_exponent(const Web &web, const ALabeling &l, int N) {
  const AWeb a{web, l};
  return -Rational(N * (N - 1), 2) * spin_rotational(web) + ashift(web, l) + Rational(N - 1) * aweb_rotational(a) -
         Rational(N - 1, 2) * vertex_sign_sum(web, l);
}

IdentityReport typeA_check(const Web &web, int N, const EvalOptions &opts) {
  if (N < 1) throw std::invalid_argument("typeA_check: N must be positive");
  require_trivalent(web, "typeA_check");
  IdentityReport rep;
  rep.N = N;
  rep.lhs = evaluate_poly(web, N, opts);
  const auto labelings = enumerate_labelings(web, N);
  rep.terms = labelings.size();
  for (const auto &l : labelings) {
    AWeb a{web, l};
    const auto moy = moy_evaluate(a, N);
    if (moy.is_zero()) continue;
    rep.rhs += qpow_integral(typeA_exponent(web, l, N)) * moy;
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace dweb
