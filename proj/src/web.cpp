#include "dweb/web.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace dweb {

static const std::array<Point, 8> kSteps = {{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};

int octant_of(Point from, Point to) {
  const auto dx = to.x - from.x;
  const auto dy = to.y - from.y;
  if (dx == 0 && dy == 0) return -1;
  if (dx != 0 && dy != 0 && std::abs(dx) != std::abs(dy)) return -1;
  const auto sx = (dx > 0) - (dx < 0);
  const auto sy = (dy > 0) - (dy < 0);
  for (int d = 0; d < 8; ++d)
    if (kSteps[d].x == sx && kSteps[d].y == sy) return d;
  return -1;
}

Point octant_step(int d) { return kSteps[((d % 8) + 8) % 8]; }

int turn_between(int d1, int d2) {
  int t = ((d2 - d1) % 8 + 8) % 8;
  if (t >= 4) t -= 8;
  return t;
}

const char *to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::vectorial: return "v";
    case EdgeKind::spin_even: return "e";
    case EdgeKind::spin_odd: return "o";
  }
  return "?";
}

const char *to_string(VertexKind k) {
  switch (k) {
    case VertexKind::trivalent: return "trivalent";
    case VertexKind::singular: return "singular";
    case VertexKind::crossing: return "crossing";
  }
  return "?";
}

int Web::add_vertex(VertexKind kind, Point pos) {
  vertices.push_back(Vertex{kind, pos, {}, 0});
  return static_cast<int>(vertices.size()) - 1;
}

int Web::add_edge(EdgeKind kind, int tail, int head, std::vector<Point> poly) {
  edges.push_back(Edge{kind, tail, head, std::move(poly)});
  const int e = static_cast<int>(edges.size()) - 1;
  if (tail >= 0) vertices[tail].half_edges.push_back(half_edge(e, 0));
  if (head >= 0) vertices[head].half_edges.push_back(half_edge(e, 1));
  return e;
}

int Web::departure(int he) const {
  const auto &p = edges[he_edge(he)].poly;
  if (he_end(he) == 0) return octant_of(p[0], p[1]);
  return octant_of(p[p.size() - 1], p[p.size() - 2]);
}

int Web::he_vertex(int he) const {
  const auto &e = edges[he_edge(he)];
  return he_end(he) == 0 ? e.tail : e.head;
}

void Web::sort_half_edges() {
  for (auto &v : vertices) {
    auto &hs = v.half_edges;
    std::sort(hs.begin(), hs.end(), [&](int a, int b) { return departure(a) < departure(b); });
  }
}

int Web::edge_turning(int e) const {
  const auto &p = edges[e].poly;
  int total = 0;
  for (std::size_t i = 0; i + 2 < p.size(); ++i) total += turn_between(octant_of(p[i], p[i + 1]), octant_of(p[i + 1], p[i + 2]));
  if (edges[e].is_loop() && p.size() >= 3)
    total += turn_between(octant_of(p[p.size() - 2], p[p.size() - 1]), octant_of(p[0], p[1]));
  return total;
}

bool Web::has_crossings() const { return count_vertices(VertexKind::crossing) > 0; }

int Web::count_vertices(VertexKind k) const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(), [&](const Vertex &v) { return v.kind == k; }));
}

TrivalentSlots trivalent_slots(const Web &web, int vertex) {
  TrivalentSlots s;
  for (int he : web.vertices[vertex].half_edges) {
    const auto &e = web.edges[he_edge(he)];
    if (e.kind == EdgeKind::vectorial) {
      s.vect = he;
    } else if (he_end(he) == 1) {
      s.spin_in = he;
    } else {
      s.spin_out = he;
    }
  }
  return s;
}

Side which_side(const Web &web, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(web.vertices.size()) || web.vertices[vertex].kind != VertexKind::trivalent)
    throw InvalidVertex("which_side: not a trivalent vertex");
  const auto s = trivalent_slots(web, vertex);
  if (s.spin_in < 0 || s.spin_out < 0 || s.vect < 0) throw InvalidVertex("which_side: malformed trivalent vertex");
  const int flow = web.departure(s.spin_out);
  const int vd = web.departure(s.vect);
  const int t = turn_between(flow, vd);
  if (t == 0 || t == -4) throw InvalidVertex("which_side: vectorial edge collinear with spin");
  return t > 0 ? Side::left : Side::right;
}

namespace {

struct Seg {
  Point a, b;
  int edge;
  int index;
};

std::int64_t cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool on_segment(Point p, Point a, Point b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Classification of the intersection of two segments.
enum class Hit { none, point, overlap };

Hit intersect(const Seg &s, const Seg &t, Point &at) {
  const auto d1 = cross(t.a, t.b, s.a);
  const auto d2 = cross(t.a, t.b, s.b);
  const auto d3 = cross(s.a, s.b, t.a);
  const auto d4 = cross(s.a, s.b, t.b);
  if (d1 == 0 && d2 == 0) {
    // Collinear: project on the dominant axis.
    const bool use_x = s.a.x != s.b.x || t.a.x != t.b.x;
    auto key = [&](Point p) { return use_x ? p.x : p.y; };
    const auto lo = std::max(std::min(key(s.a), key(s.b)), std::min(key(t.a), key(t.b)));
    const auto hi = std::min(std::max(key(s.a), key(s.b)), std::max(key(t.a), key(t.b)));
    if (lo > hi) return Hit::none;
    if (lo < hi) return Hit::overlap;
    for (Point p : {s.a, s.b})
      if (key(p) == lo && on_segment(p, t.a, t.b)) {
        at = p;
        return Hit::point;
      }
    return Hit::none;
  }
  const bool proper = ((d1 > 0) != (d2 > 0) || d1 == 0 || d2 == 0) && ((d3 > 0) != (d4 > 0) || d3 == 0 || d4 == 0);
  if (!proper) return Hit::none;
  if (d1 == 0) at = s.a;
  else if (d2 == 0) at = s.b;
  else if (d3 == 0) at = t.a;
  else if (d4 == 0) at = t.b;
  else at = Point{INT64_MIN, INT64_MIN};  // interior crossing, never allowed
  return Hit::point;
}

}  // namespace

ValidationReport validate(const Web &web) {
  ValidationReport r;
  const int ne = static_cast<int>(web.edges.size());
  const int nv = static_cast<int>(web.vertices.size());
  auto where = [](const char *what, int id) { return std::string(what) + " " + std::to_string(id) + ": "; };

  // Edge-level checks.
  for (int e = 0; e < ne; ++e) {
    const auto &ed = web.edges[e];
    const auto &p = ed.poly;
    if (p.size() < 2) {
      r.fail(where("edge", e) + "degenerate polyline");
      continue;
    }
    bool octant_ok = true;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (octant_of(p[i], p[i + 1]) < 0) octant_ok = false;
    if (!octant_ok) {
      r.fail(where("edge", e) + "non-octant segment");
      continue;
    }
    for (std::size_t i = 0; i + 2 < p.size(); ++i)
      if (std::abs(turn_between(octant_of(p[i], p[i + 1]), octant_of(p[i + 1], p[i + 2]))) > 3)
        r.fail(where("edge", e) + "reversal inside edge");
    if ((ed.tail < 0) != (ed.head < 0)) r.fail(where("edge", e) + "half-attached edge");
    if (ed.is_loop()) {
      if (p.front() != p.back() || p.size() < 4) r.fail(where("edge", e) + "loop polyline not closed");
      else if (std::abs(turn_between(octant_of(p[p.size() - 2], p.back()), octant_of(p[0], p[1]))) > 3)
        r.fail(where("edge", e) + "reversal at loop closure");
    } else {
      if (ed.tail >= nv || ed.head >= nv) r.fail(where("edge", e) + "dangling endpoint");
      else if (web.vertices[ed.tail].pos != p.front() || web.vertices[ed.head].pos != p.back())
        r.fail(where("edge", e) + "polyline does not meet its endpoints");
    }
  }
  if (!r.ok) return r;

  // Vertex-level checks.
  for (int v = 0; v < nv; ++v) {
    const auto &vx = web.vertices[v];
    const auto &hs = vx.half_edges;
    for (int he : hs)
      if (he_edge(he) >= ne || web.he_vertex(he) != v) r.fail(where("vertex", v) + "half-edge not incident");
    if (!r.ok) return r;
    std::vector<int> dirs;
    for (int he : hs) dirs.push_back(web.departure(he));
    for (std::size_t i = 1; i < dirs.size(); ++i)
      if (dirs[i] <= dirs[i - 1]) r.fail(where("vertex", v) + "cyclic order inconsistent with geometry");
    int nvect = 0, neven = 0, nodd = 0;
    for (int he : hs) {
      switch (web.edges[he_edge(he)].kind) {
        case EdgeKind::vectorial: ++nvect; break;
        case EdgeKind::spin_even: ++neven; break;
        case EdgeKind::spin_odd: ++nodd; break;
      }
    }
    if (vx.kind == VertexKind::trivalent) {
      if (hs.size() != 3 || nvect != 1 || neven != 1 || nodd != 1) {
        r.fail(where("vertex", v) + "incident kinds");
        continue;
      }
      const auto s = trivalent_slots(web, v);
      if (s.spin_in < 0 || s.spin_out < 0) {
        r.fail(where("vertex", v) + "spin flow");
        continue;
      }
      const int din = web.departure(s.spin_in), dout = web.departure(s.spin_out), dv = web.departure(s.vect);
      if (dout != opposite_octant(din)) r.fail(where("vertex", v) + "spin through-strand not straight");
      if (std::abs(turn_between(dout, dv)) != 2) r.fail(where("vertex", v) + "vectorial edge not perpendicular");
    } else if (vx.kind == VertexKind::singular) {
      if (hs.size() != 4 || nvect != 4) {
        r.fail(where("vertex", v) + "incident kinds");
        continue;
      }
      if (dirs != std::vector<int>{0, 2, 4, 6}) r.fail(where("vertex", v) + "singular legs not on the axes");
    } else {
      if (hs.size() != 4) {
        r.fail(where("vertex", v) + "incident kinds");
        continue;
      }
      for (int k = 0; k < 2; ++k) {
        const int h0 = hs[k], h1 = hs[k + 2];
        const auto k0 = web.edges[he_edge(h0)].kind, k1 = web.edges[he_edge(h1)].kind;
        if (web.departure(h1) != opposite_octant(web.departure(h0))) r.fail(where("vertex", v) + "crossing strand bends");
        if (k0 != k1) r.fail(where("vertex", v) + "crossing strand changes kind");
        if (is_spin(k0) && he_end(h0) == he_end(h1)) r.fail(where("vertex", v) + "spin flow");
      }
      const bool spin0 = is_spin(web.edges[he_edge(hs[0])].kind), spin1 = is_spin(web.edges[he_edge(hs[1])].kind);
      if (spin0 && spin1) r.fail(where("vertex", v) + "spin-spin crossing");
    }
  }
  if (!r.ok) return r;

  // Geometric disjointness.
  std::vector<Seg> segs;
  for (int e = 0; e < ne; ++e) {
    const auto &p = web.edges[e].poly;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) segs.push_back({p[i], p[i + 1], e, static_cast<int>(i)});
  }
  std::set<Point> vertex_points;
  std::map<Point, int> vertex_at;
  for (int v = 0; v < nv; ++v) {
    if (!vertex_points.insert(web.vertices[v].pos).second) r.fail(where("vertex", v) + "overlap with another vertex");
    vertex_at[web.vertices[v].pos] = v;
  }
  // Sort by min x to prune comparisons.
  std::vector<int> order(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) order[i] = static_cast<int>(i);
  auto minx = [&](int i) { return std::min(segs[i].a.x, segs[i].b.x); };
  auto maxx = [&](int i) { return std::max(segs[i].a.x, segs[i].b.x); };
  std::sort(order.begin(), order.end(), [&](int i, int j) { return minx(i) < minx(j); });
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const int i = order[oi];
    for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
      const int j = order[oj];
      if (minx(j) > maxx(i)) break;
      const Seg &s = segs[i], &t = segs[j];
      Point at;
      const Hit h = intersect(s, t, at);
      if (h == Hit::none) continue;
      if (h == Hit::overlap) {
        r.fail("edges " + std::to_string(s.edge) + "," + std::to_string(t.edge) + ": overlap");
        continue;
      }
      // A single touching point is fine only at a shared polyline joint or at a common vertex.
      bool allowed = false;
      if (s.edge == t.edge) {
        const auto &p = web.edges[s.edge].poly;
        const int n = static_cast<int>(p.size()) - 1;
        const int lo = std::min(s.index, t.index), hi = std::max(s.index, t.index);
        if (hi == lo + 1 && at == p[hi]) allowed = true;
        if (web.edges[s.edge].is_loop() && lo == 0 && hi == n - 1 && at == p[0]) allowed = true;
        if (!web.edges[s.edge].is_loop() && at == p[0] && (lo == 0) && (hi == n - 1) && p[0] == p[n]) allowed = true;
        if (!allowed && (at == p[0] || at == p[n]) && vertex_at.count(at)) {
          const auto &ed = web.edges[s.edge];
          if (ed.tail == ed.head && ed.tail >= 0) allowed = true;
        }
      } else {
        auto it = vertex_at.find(at);
        if (it != vertex_at.end()) {
          const int v = it->second;
          auto incident = [&](int e) {
            const auto &ed = web.edges[e];
            return ed.tail == v || ed.head == v;
          };
          const bool s_end = at == s.a || at == s.b;
          const bool t_end = at == t.a || at == t.b;
          allowed = incident(s.edge) && incident(t.edge) && s_end && t_end;
        }
      }
      if (!allowed) r.fail("edges " + std::to_string(s.edge) + "," + std::to_string(t.edge) + ": overlap");
    }
  }
  return r;
}

std::string serialize(const Web &web) {
  std::ostringstream os;
  os << "dweb-web 1\n";
  os << "vertices " << web.vertices.size() << "\n";
  for (const auto &v : web.vertices) {
    os << to_string(v.kind) << " " << v.pos.x << " " << v.pos.y << " " << v.over_pair << " " << v.half_edges.size();
    for (int he : v.half_edges) os << " " << he;
    os << "\n";
  }
  os << "edges " << web.edges.size() << "\n";
  for (const auto &e : web.edges) {
    os << to_string(e.kind) << " " << e.tail << " " << e.head << " " << e.poly.size();
    for (const auto &p : e.poly) os << " " << p.x << " " << p.y;
    os << "\n";
  }
  return os.str();
}

Web deserialize(const std::string &text) {
  std::istringstream is(text);
  std::string tag;
  int version = 0;
  if (!(is >> tag >> version) || tag != "dweb-web" || version != 1) throw std::runtime_error("deserialize: bad header");
  Web w;
  std::size_t n = 0;
  is >> tag >> n;
  if (tag != "vertices") throw std::runtime_error("deserialize: expected vertices");
  for (std::size_t i = 0; i < n; ++i) {
    std::string kind;
    Vertex v;
    std::size_t k = 0;
    is >> kind >> v.pos.x >> v.pos.y >> v.over_pair >> k;
    if (kind == "trivalent") v.kind = VertexKind::trivalent;
    else if (kind == "singular") v.kind = VertexKind::singular;
    else if (kind == "crossing") v.kind = VertexKind::crossing;
    else throw std::runtime_error("deserialize: unknown vertex kind " + kind);
    v.half_edges.resize(k);
    for (auto &h : v.half_edges) is >> h;
    w.vertices.push_back(std::move(v));
  }
  is >> tag >> n;
  if (tag != "edges") throw std::runtime_error("deserialize: expected edges");
  for (std::size_t i = 0; i < n; ++i) {
    std::string kind;
    Edge e;
    std::size_t k = 0;
    is >> kind >> e.tail >> e.head >> k;
    if (kind == "v") e.kind = EdgeKind::vectorial;
    else if (kind == "e") e.kind = EdgeKind::spin_even;
    else if (kind == "o") e.kind = EdgeKind::spin_odd;
    else throw std::runtime_error("deserialize: unknown edge kind " + kind);
    e.poly.resize(k);
    for (auto &p : e.poly) is >> p.x >> p.y;
    w.edges.push_back(std::move(e));
  }
  if (!is) throw std::runtime_error("deserialize: truncated input");
  return w;
}

static void translate(Web &w, std::int64_t dx, std::int64_t dy) {
  for (auto &v : w.vertices) v.pos = {v.pos.x + dx, v.pos.y + dy};
  for (auto &e : w.edges)
    for (auto &p : e.poly) p = {p.x + dx, p.y + dy};
}

static std::pair<Point, Point> bounds(const Web &w) {
  Point lo{INT64_MAX, INT64_MAX}, hi{INT64_MIN, INT64_MIN};
  auto take = [&](Point p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  };
  for (const auto &v : w.vertices) take(v.pos);
  for (const auto &e : w.edges)
    for (const auto &p : e.poly) take(p);
  if (lo.x == INT64_MAX) return {{0, 0}, {0, 0}};
  return {lo, hi};
}

std::string canonical_key(const Web &web) {
  Web w = web;
  const auto [lo, hi] = bounds(w);
  translate(w, -lo.x, -lo.y);
  // Loops start at their smallest point so that the key does not depend on where a loop was cut open.
  for (auto &e : w.edges) {
    if (!e.is_loop() || e.poly.size() < 2) continue;
    e.poly.pop_back();
    std::rotate(e.poly.begin(), std::min_element(e.poly.begin(), e.poly.end()), e.poly.end());
    e.poly.push_back(e.poly.front());
  }
  return serialize(w);
}

Web disjoint_union(const Web &a, const Web &b) {
  Web r = a;
  Web c = b;
  const auto [alo, ahi] = bounds(a);
  const auto [blo, bhi] = bounds(b);
  translate(c, ahi.x - blo.x + 8, alo.y - blo.y);
  const int voff = static_cast<int>(r.vertices.size());
  const int eoff = static_cast<int>(r.edges.size());
  for (auto v : c.vertices) {
    for (auto &h : v.half_edges) h += 2 * eoff;
    r.vertices.push_back(std::move(v));
  }
  for (auto e : c.edges) {
    if (e.tail >= 0) e.tail += voff;
    if (e.head >= 0) e.head += voff;
    r.edges.push_back(std::move(e));
  }
  return r;
}

Web opposite_web(const Web &web) {
  Web w = web;
  for (std::size_t e = 0; e < w.edges.size(); ++e) {
    auto &ed = w.edges[e];
    if (!is_spin(ed.kind)) continue;
    std::reverse(ed.poly.begin(), ed.poly.end());
    std::swap(ed.tail, ed.head);
    const int h0 = half_edge(static_cast<int>(e), 0), h1 = half_edge(static_cast<int>(e), 1);
    for (auto &v : w.vertices)
      for (auto &h : v.half_edges) {
        if (h == h0) h = h1;
        else if (h == h1) h = h0;
      }
  }
  return w;
}

Web bar_web(const Web &web) {
  Web w = web;
  for (auto &e : w.edges) {
    if (e.kind == EdgeKind::spin_even) e.kind = EdgeKind::spin_odd;
    else if (e.kind == EdgeKind::spin_odd) e.kind = EdgeKind::spin_even;
  }
  return w;
}

Web dual_web(const Web &web, int N) {
  Web w = opposite_web(web);
  return N % 2 == 1 ? bar_web(w) : w;
}

}  // namespace dweb
