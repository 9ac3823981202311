#include "dweb/oracle.hpp"

#include "dweb/evaluate.hpp"

#include <algorithm>
#include <map>

namespace dweb {

// ---------------------------------------------------------------------------
// Square replacement

Web square_replace(const Web &gweb, const std::vector<int> &variants) {
  constexpr std::int64_t kScale = 8;
  Web w;
  // Scale so every square fits in a radius-2 neighbourhood of its vertex.
  for (const auto &v : gweb.vertices) {
    if (v.kind == VertexKind::crossing) throw std::invalid_argument("square_replace: diagram has crossings");
    w.vertices.push_back(v);
    w.vertices.back().pos = {v.pos.x * kScale, v.pos.y * kScale};
    w.vertices.back().half_edges.clear();
  }
  std::vector<Edge> edges = gweb.edges;
  for (auto &e : edges)
    for (auto &p : e.poly) p = {p.x * kScale, p.y * kScale};
  // New trivalent vertex per singular leg, keyed by (singular vertex, axis octant).
  std::map<std::pair<int, int>, int> leg_vertex;
  int k = 0;
  std::vector<std::pair<int, int>> squares;  // (singular vertex, variant)
  for (int v = 0; v < static_cast<int>(gweb.vertices.size()); ++v) {
    if (gweb.vertices[v].kind != VertexKind::singular) continue;
    const int variant = k < static_cast<int>(variants.size()) ? variants[k] : 1;
    ++k;
    if (variant < 1 || variant > 4) throw std::invalid_argument("square_replace: variant must be 1..4");
    squares.push_back({v, variant});
    const Point P = w.vertices[v].pos;
    for (int d = 0; d < 8; d += 2) {
      const Point s = octant_step(d);
      leg_vertex[{v, d}] = w.add_vertex(VertexKind::trivalent, {P.x + 2 * s.x, P.y + 2 * s.y});
    }
  }
  // Re-attach legs: the first point of a leg moves out to its new vertex.
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    Edge ed = edges[e];
    for (int end = 0; end < 2; ++end) {
      const int v = end == 0 ? ed.tail : ed.head;
      if (v < 0 || gweb.vertices[v].kind != VertexKind::singular) continue;
      auto &poly = ed.poly;
      const Point P = end == 0 ? poly.front() : poly.back();
      const Point Q = end == 0 ? poly[1] : poly[poly.size() - 2];
      const int d = octant_of(P, Q);
      const Point s = octant_step(d);
      const Point np{P.x + 2 * s.x, P.y + 2 * s.y};
      (end == 0 ? poly.front() : poly.back()) = np;
      (end == 0 ? ed.tail : ed.head) = leg_vertex.at({v, d});
    }
    w.add_edge(ed.kind, ed.tail, ed.head, ed.poly);
  }
  // Square sides between consecutive legs (counterclockwise E, N, W, S).
  for (const auto &[v, variant] : squares) {
    const Point P = w.vertices[v].pos;
    const bool ccw = variant <= 2;
    const bool first_even = variant % 2 == 1;
    for (int i = 0; i < 4; ++i) {
      const int d0 = 2 * i, d1 = (2 * i + 2) % 8;
      const Point a = octant_step(d0), b = octant_step(d1);
      // From P+2a around the corner to P+2b.
      std::vector<Point> poly = {{P.x + 2 * a.x, P.y + 2 * a.y},
                                 {P.x + 2 * a.x + b.x, P.y + 2 * a.y + b.y},
                                 {P.x + a.x + 2 * b.x, P.y + a.y + 2 * b.y},
                                 {P.x + 2 * b.x, P.y + 2 * b.y}};
      int tail = leg_vertex.at({v, d0}), head = leg_vertex.at({v, d1});
      if (!ccw) {
        std::reverse(poly.begin(), poly.end());
        std::swap(tail, head);
      }
      const bool even = (i % 2 == 0) == first_even;
      w.add_edge(even ? EdgeKind::spin_even : EdgeKind::spin_odd, tail, head, std::move(poly));
    }
  }
  // Drop the singular vertices and renumber.
  Web out;
  std::vector<int> remap(w.vertices.size(), -1);
  for (int v = 0; v < static_cast<int>(w.vertices.size()); ++v) {
    if (v < static_cast<int>(gweb.vertices.size()) && gweb.vertices[v].kind == VertexKind::singular) continue;
    remap[v] = out.add_vertex(w.vertices[v].kind, w.vertices[v].pos);
  }
  for (const auto &e : w.edges)
    out.add_edge(e.kind, e.tail < 0 ? -1 : remap[e.tail], e.head < 0 ? -1 : remap[e.head], e.poly);
  out.sort_half_edges();
  const auto rep = validate(out);
  if (!rep.ok) throw std::logic_error("square_replace: invalid result: " + rep.violations.front());
  return out;
}

LaurentPoly square_replacement_eval(const Web &gweb, int N, const std::vector<int> &variants) {
  if (N < 3) throw std::invalid_argument("square_replacement_eval: N must be at least 3");
  const int s = gweb.count_vertices(VertexKind::singular);
  LaurentPoly val = evaluate_poly(square_replace(gweb, variants), N);
  const LaurentPoly unit = qtwo_bracket(N - 3);
  for (int i = 0; i < s; ++i) val = exact_div(val, unit);
  return val;
}

// ---------------------------------------------------------------------------
// Kauffman recursion

PDCode pd_code(const Diagram &d) {
  const Web &w = d.web;
  PDCode pd;
  for (const auto &e : w.edges) {
    if (e.kind != EdgeKind::vectorial) throw std::invalid_argument("pd_code: diagram has spin edges");
    if (e.is_loop()) ++pd.free_loops;
  }
  for (const auto &v : w.vertices) {
    if (v.kind != VertexKind::crossing) throw std::invalid_argument("pd_code: diagram has web vertices");
    std::array<int, 4> c{};
    // Slots 0 and 2 must hold the under strand.
    const int shift = v.over_pair == 0 ? 1 : 0;
    for (int j = 0; j < 4; ++j) c[j] = he_edge(v.half_edges[(j + shift) % 4]);
    pd.crossings.push_back(c);
  }
  return pd;
}

namespace {

struct KauffmanEval {
  int N;
  int max_depth;
  LaurentPoly z, a, a_inv, delta;

  // Joins slot pairs of crossing c into arcs and removes c.
  static PDCode smooth(const PDCode &pd, int c, int s0, int s1, int s2, int s3) {
    PDCode r = pd;
    std::array<int, 4> x = r.crossings[c];
    r.crossings.erase(r.crossings.begin() + c);
    auto join = [&](int p, int q) {
      if (p == q) {
        ++r.free_loops;
        return;
      }
      // Rename arc q to p everywhere.
      bool found = false;
      for (auto &cr : r.crossings)
        for (auto &s : cr)
          if (s == q) {
            s = p;
            found = true;
          }
      // Arc q may also be waiting to be joined inside this crossing.
      for (auto &s : x)
        if (s == q) s = p;
      (void)found;
    };
    join(x[s0], x[s1]);
    join(x[s2], x[s3]);
    return r;
  }

  LaurentPoly apow(int w) const {
    LaurentPoly r(1);
    for (int i = 0; i < std::abs(w); ++i) r *= (w > 0 ? a : a_inv);
    return r;
  }

  LaurentPoly eval(const PDCode &pd, int depth) const {
    if (depth > max_depth) throw DepthExceeded("kauffman_specialized: recursion depth exceeded");
    const int C = static_cast<int>(pd.crossings.size());
    // Arc endpoints.
    std::map<int, std::vector<std::pair<int, int>>> ends;
    for (int c = 0; c < C; ++c)
      for (int s = 0; s < 4; ++s) ends[pd.crossings[c][s]].push_back({c, s});
    std::vector<int> first_slot(C, -1);  // slot through which each crossing is first entered
    std::vector<char> visited_arc;
    std::map<int, char> seen;
    int components = pd.free_loops;
    int self_writhe = 0;
    std::vector<int> comp_of(C * 4, -1);
    int comp_id = 0;
    std::vector<int> enter_under(C, -1), enter_over(C, -1), comp_under(C, -1), comp_over(C, -1);
    for (const auto &[arc, eps] : ends) {
      if (seen.count(arc)) continue;
      ++components;
      // Traverse from the lower-numbered end of this arc.
      int cur_arc = arc;
      std::pair<int, int> at = eps[1];  // arrive here along the arc
      while (true) {
        seen[cur_arc] = 1;
        const auto [c, s] = at;
        if (s % 2 == 0) {
          enter_under[c] = s;
          comp_under[c] = comp_id;
        } else {
          enter_over[c] = s;
          comp_over[c] = comp_id;
        }
        if (first_slot[c] < 0) {
          first_slot[c] = s;
          if (s % 2 == 0) {
            // First passage goes under: switch this crossing.
            return switch_identity(pd, c, depth);
          }
        }
        const int out = (s + 2) % 4;
        const int next_arc = pd.crossings[c][out];
        const auto &ne = ends[next_arc];
        at = (ne[0] == std::make_pair(c, out)) ? ne[1] : ne[0];
        cur_arc = next_arc;
        if (cur_arc == arc) break;
      }
      ++comp_id;
    }
    for (int c = 0; c < C; ++c) {
      if (comp_under[c] != comp_over[c]) continue;
      self_writhe += (enter_over[c] == (enter_under[c] + 3) % 4) ? 1 : -1;
    }
    LaurentPoly r = apow(self_writhe);
    for (int i = 0; i < components; ++i) r *= delta;
    return r;
  }

  LaurentPoly switch_identity(const PDCode &pd, int c, int depth) const {
    PDCode sw = pd;
    const auto x = pd.crossings[c];
    sw.crossings[c] = {x[1], x[2], x[3], x[0]};
    return eval(sw, depth + 1) + z * (eval(smooth(pd, c, 1, 2, 3, 0), depth + 1) - eval(smooth(pd, c, 0, 1, 2, 3), depth + 1));
  }
};

}  // namespace

LaurentPoly kauffman_specialized(const PDCode &pd, int N, int max_depth) {
  KauffmanEval k{N, max_depth, {}, {}, {}, {}};
  k.z = qpow(1) - qpow(-1);
  k.a = -qpow(2 * N - 1);
  k.a_inv = -qpow(1 - 2 * N);
  k.delta = qint(2 * N - 1) + LaurentPoly(1);
  return k.eval(pd, 0);
}

LaurentPoly kauffman_specialized(const Diagram &d, int N, int max_depth) { return kauffman_specialized(pd_code(d), N, max_depth); }

}  // namespace dweb
