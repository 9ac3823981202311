#include "dweb/coloring.hpp"

#include <bit>
#include <stdexcept>

namespace dweb {

int single_pigment(Color c) {
  if (std::popcount(c) != 1) throw std::invalid_argument("single_pigment: color is not a singleton");
  return std::countr_zero(c) + 1;
}

namespace {

// Orientation sign that points a vectorial half-edge into its vertex.
std::int8_t into_sign(int he) { return he_end(he) == 1 ? 1 : -1; }

bool leg_into(const Coloring &c, int he) { return c.orient[he_edge(he)] == into_sign(he); }

bool singular_ok(const Web &w, const Coloring &c, int v) {
  const auto &hs = w.vertices[v].half_edges;
  int balance[33] = {};
  Color all = 0;
  for (int he : hs) {
    const int p = single_pigment(c.color[he_edge(he)]);
    balance[p] += leg_into(c, he) ? 1 : -1;
    all |= c.color[he_edge(he)];
  }
  for (int p = 1; p <= 32; ++p)
    if (balance[p] != 0) return false;
  if (std::popcount(all) == 1) return leg_into(c, hs[0]) == leg_into(c, hs[2]);
  return true;
}

bool is_mono(const Web &w, const Coloring &c, int v) {
  const auto &hs = w.vertices[v].half_edges;
  const Color c0 = c.color[he_edge(hs[0])];
  for (int he : hs)
    if (c.color[he_edge(he)] != c0) return false;
  return true;
}

}  // namespace

struct SearchState {
  const ColoringSearch &s;
  Coloring col;
  std::vector<char> known;
  std::vector<int> trail;
  std::vector<int> queue;

  explicit SearchState(const ColoringSearch &search) : s(search) {
    const auto E = s.web_.edges.size();
    col.color.assign(E, 0);
    col.orient.assign(E, 0);
    col.sign.assign(s.web_.vertices.size(), 0);
    known.assign(E, 0);
  }

  bool set(int e, Color c, std::int8_t o) {
    if (known[e]) return col.color[e] == c && col.orient[e] == o;
    known[e] = 1;
    col.color[e] = c;
    col.orient[e] = o;
    trail.push_back(e);
    for (int v : s.incident_[e]) queue.push_back(v);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      known[trail.back()] = 0;
      trail.pop_back();
    }
  }

  bool trivalent(int v) {
    const auto sl = trivalent_slots(s.web_, v);
    const int ei = he_edge(sl.spin_in), eo = he_edge(sl.spin_out), ev = he_edge(sl.vect);
    const bool ki = known[ei], ko = known[eo], kv = known[ev];
    const std::int8_t sig = into_sign(sl.vect);
    if (ki && ko) {
      const Color a = col.color[ei] ^ col.color[eo];
      if (std::popcount(a) != 1) return false;
      const bool into = (a & col.color[ei]) == 0;
      return set(ev, a, into ? sig : static_cast<std::int8_t>(-sig));
    }
    if (!kv) return true;
    const Color a = col.color[ev];
    const bool into = col.orient[ev] == sig;
    if (ki) {
      const Color in = col.color[ei];
      if (into == ((a & in) != 0)) return false;
      return set(eo, in ^ a, 0);
    }
    if (ko) {
      const Color in = col.color[eo] ^ a;
      if (into == ((a & in) != 0)) return false;
      return set(ei, in, 0);
    }
    return true;
  }

  bool singular(int v) {
    for (int he : s.web_.vertices[v].half_edges)
      if (!known[he_edge(he)]) return true;
    return singular_ok(s.web_, col, v);
  }

  bool propagate() {
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      const auto kind = s.web_.vertices[v].kind;
      const bool ok = kind == VertexKind::trivalent ? trivalent(v) : kind == VertexKind::singular ? singular(v) : true;
      if (!ok) {
        queue.clear();
        return false;
      }
    }
    return true;
  }

  bool emit(const ColoringVisitor &visit) {
    std::vector<int> mono;
    for (int v = 0; v < static_cast<int>(s.web_.vertices.size()); ++v)
      if (s.web_.vertices[v].kind == VertexKind::singular && is_mono(s.web_, col, v)) mono.push_back(v);
    const std::uint64_t combos = std::uint64_t{1} << mono.size();
    for (std::uint64_t m = 0; m < combos; ++m) {
      for (std::size_t i = 0; i < mono.size(); ++i) col.sign[mono[i]] = ((m >> i) & 1U) ? -1 : 1;
      if (!visit(col)) return false;
    }
    for (int v : mono) col.sign[v] = 0;
    return true;
  }

  bool rec(std::size_t pos, const ColoringVisitor &visit, const std::vector<int> *roots) {
    while (pos < s.order_.size() && known[s.order_[pos]]) ++pos;
    if (pos == s.order_.size()) return emit(visit);
    const int e = s.order_[pos];
    const auto cands = s.candidates(e);
    auto try_one = [&](const std::pair<Color, std::int8_t> &cand) {
      const auto mark = trail.size();
      bool go = true;
      if (set(e, cand.first, cand.second) && propagate()) go = rec(pos + 1, visit, nullptr);
      undo_to(mark);
      return go;
    };
    if (roots) {
      for (int r : *roots)
        if (!try_one(cands.at(r))) return false;
    } else {
      for (const auto &cand : cands)
        if (!try_one(cand)) return false;
    }
    return true;
  }
};

ColoringSearch::ColoringSearch(const Web &web, int N) : web_(web), N_(N) {
  if (N < 1 || N > 31) throw std::invalid_argument("coloring: N out of range");
  const int E = static_cast<int>(web.edges.size());
  incident_.resize(E);
  for (int e = 0; e < E; ++e) {
    const auto &ed = web.edges[e];
    if (ed.tail >= 0) incident_[e].push_back(ed.tail);
    if (ed.head >= 0 && ed.head != ed.tail) incident_[e].push_back(ed.head);
  }
  // Edge order: breadth-first over vertices so that propagation fires early.
  std::vector<char> in_order(E, 0), seen(web.vertices.size(), 0);
  for (int start = 0; start < static_cast<int>(web.vertices.size()); ++start) {
    if (seen[start]) continue;
    std::vector<int> bfs{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      for (int he : web.vertices[bfs[i]].half_edges) {
        const int e = he_edge(he);
        if (!in_order[e]) {
          in_order[e] = 1;
          order_.push_back(e);
        }
        for (int u : incident_[e])
          if (!seen[u]) {
            seen[u] = 1;
            bfs.push_back(u);
          }
      }
    }
  }
  for (int e = 0; e < E; ++e)
    if (!in_order[e]) order_.push_back(e);
}

std::vector<std::pair<Color, std::int8_t>> ColoringSearch::candidates(int e) const {
  std::vector<std::pair<Color, std::int8_t>> r;
  const auto kind = web_.edges[e].kind;
  if (kind == EdgeKind::vectorial) {
    for (int p = 1; p <= N_; ++p)
      for (std::int8_t o : {std::int8_t{1}, std::int8_t{-1}}) r.push_back({pigment_bit(p), o});
    return r;
  }
  const int parity = kind == EdgeKind::spin_even ? 0 : 1;
  for (Color c = 0; c < (Color{1} << N_); ++c)
    if (std::popcount(c) % 2 == parity) r.push_back({c, 0});
  return r;
}

int ColoringSearch::root_choices() const {
  if (order_.empty()) return 0;
  return static_cast<int>(candidates(order_[0]).size());
}

void ColoringSearch::run(const ColoringVisitor &visit, const std::vector<int> &roots) const {
  SearchState st(*this);
  st.rec(0, visit, roots.empty() ? nullptr : &roots);
}

void enumerate(const Web &web, int N, const ColoringVisitor &visit) { ColoringSearch(web, N).run(visit); }

std::vector<Coloring> enumerate_all(const Web &web, int N) {
  std::vector<Coloring> out;
  enumerate(web, N, [&](const Coloring &c) {
    out.push_back(c);
    return true;
  });
  return out;
}

bool check(const Web &web, int N, const Coloring &c) {
  const auto E = web.edges.size();
  if (c.color.size() != E || c.orient.size() != E || c.sign.size() != web.vertices.size()) return false;
  const Color full = (Color{1} << N) - 1;
  for (std::size_t e = 0; e < E; ++e) {
    const Color col = c.color[e];
    if (col & ~full) return false;
    switch (web.edges[e].kind) {
      case EdgeKind::vectorial:
        if (std::popcount(col) != 1 || (c.orient[e] != 1 && c.orient[e] != -1)) return false;
        break;
      case EdgeKind::spin_even:
        if (std::popcount(col) % 2 != 0 || c.orient[e] != 0) return false;
        break;
      case EdgeKind::spin_odd:
        if (std::popcount(col) % 2 != 1 || c.orient[e] != 0) return false;
        break;
    }
  }
  for (int v = 0; v < static_cast<int>(web.vertices.size()); ++v) {
    const auto kind = web.vertices[v].kind;
    if (kind == VertexKind::trivalent) {
      const auto sl = trivalent_slots(web, v);
      const Color in = c.color[he_edge(sl.spin_in)], out = c.color[he_edge(sl.spin_out)];
      const Color a = c.color[he_edge(sl.vect)];
      const bool into = leg_into(c, sl.vect);
      if (into ? ((a & in) != 0 || out != (in | a)) : ((a & in) == 0 || out != (in & ~a))) return false;
      if (c.sign[v] != 0) return false;
    } else if (kind == VertexKind::singular) {
      if (!singular_ok(web, c, v)) return false;
      const bool mono = is_mono(web, c, v);
      if (mono != (c.sign[v] != 0)) return false;
    } else {
      return false;
    }
  }
  return true;
}

std::uint64_t count(const Web &web, int N) {
  std::uint64_t n = 0;
  enumerate(web, N, [&](const Coloring &) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace dweb
