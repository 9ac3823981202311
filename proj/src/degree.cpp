#include "dweb/degree.hpp"

#include <json.hpp>

#include <bit>
#include <map>

namespace dweb {

extern const char *const kSingularTablesJson;

// ---------------------------------------------------------------------------
// Tables

namespace {

int turn_value(const std::string &s) {
  if (s == "left") return 1;
  if (s == "right") return -1;
  throw std::runtime_error("tables: turn must be 'left' or 'right', got '" + s + "'");
}

int type_index(const std::string &s) {
  if (s == "first") return 0;
  if (s == "second") return 1;
  throw std::runtime_error("tables: type must be 'first' or 'second', got '" + s + "'");
}

int role_index(const std::string &s) {
  if (s == "low") return 0;
  if (s == "high") return 1;
  throw std::runtime_error("tables: role must be 'low' or 'high', got '" + s + "'");
}

}  // namespace

SingularTables parse_tables(const std::string &json_text) {
  const auto j = nlohmann::json::parse(json_text);
  if (j.value("schema", 0) != 1) throw std::runtime_error("tables: unsupported schema");
  SingularTables t;
  for (const auto &e : j.at("mono")) {
    const std::string sign = e.at("sign");
    if (sign != "+" && sign != "-") throw std::runtime_error("tables: sign must be '+' or '-'");
    t.mono[sign == "+" ? 0 : 1][type_index(e.at("type"))][role_index(e.at("role"))] = turn_value(e.at("turn"));
  }
  for (const auto &e : j.at("adjacent_second")) {
    const std::string pat = e.at("pattern");
    if (pat != "LL" && pat != "RR") throw std::runtime_error("tables: pattern must be LL or RR");
    t.adjacent_second[pat == "LL" ? 0 : 1] = turn_value(e.at("turn"));
  }
  for (const auto &e : j.at("adjacent_lr_first")) t.adjacent_lr_first[role_index(e.at("left_turning"))] = turn_value(e.at("turn"));
  return t;
}

std::string tables_to_json(const SingularTables &t) {
  auto turn = [](int v) { return v > 0 ? "left" : v < 0 ? "right" : "unset"; };
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["mono"] = nlohmann::ordered_json::array();
  for (int s = 0; s < 2; ++s)
    for (int ty = 0; ty < 2; ++ty)
      for (int r = 0; r < 2; ++r)
        j["mono"].push_back({{"sign", s == 0 ? "+" : "-"},
                             {"type", ty == 0 ? "first" : "second"},
                             {"role", r == 0 ? "low" : "high"},
                             {"turn", turn(t.mono[s][ty][r])}});
  j["adjacent_second"] = {{{"pattern", "LL"}, {"turn", turn(t.adjacent_second[0])}},
                          {{"pattern", "RR"}, {"turn", turn(t.adjacent_second[1])}}};
  j["adjacent_lr_first"] = {{{"left_turning", "low"}, {"turn", turn(t.adjacent_lr_first[0])}},
                            {{"left_turning", "high"}, {"turn", turn(t.adjacent_lr_first[1])}}};
  return j.dump(2);
}

const SingularTables &default_tables() {
  static const SingularTables t = parse_tables(kSingularTablesJson);
  return t;
}

// ---------------------------------------------------------------------------
// Cycles

std::vector<OrientedTraversal> colored_cycle(const Web &web, const Coloring &c, int a, CycleVariant variant) {
  std::vector<OrientedTraversal> r;
  for (int e = 0; e < static_cast<int>(web.edges.size()); ++e) {
    const bool in = has_pigment(c.color[e], a);
    if (is_spin(web.edges[e].kind)) {
      if (variant == CycleVariant::natural && in) r.push_back({e, true});
      if (variant == CycleVariant::prime && in) r.push_back({e, false});
      if (variant == CycleVariant::star && !in) r.push_back({e, false});
    } else if (in) {
      const bool along = c.orient[e] > 0;
      r.push_back({e, variant == CycleVariant::prime ? !along : along});
    }
  }
  return r;
}

int bicolored_direction(const Web &web, const Coloring &c, int e, int lo, int hi, BicolorType type) {
  const Color col = c.color[e];
  const int in_hi = has_pigment(col, hi), in_lo = has_pigment(col, lo);
  if (is_spin(web.edges[e].kind)) return type == BicolorType::first ? in_hi - in_lo : in_hi - (1 - in_lo);
  return c.orient[e] * (type == BicolorType::first ? in_hi - in_lo : in_hi + in_lo);
}

namespace {

struct Leg {
  int slot;
  int he;
  bool in;
};

int corner(const Web &w, int in_he, int out_he) {
  return turn_between(opposite_octant(w.departure(in_he)), w.departure(out_he));
}

bool leg_into(const Coloring &c, int he) { return c.orient[he_edge(he)] == (he_end(he) == 1 ? 1 : -1); }

// Turn (+2 left, -2 right, 0 straight) of one pigment's arc at a two-pigment singular vertex.
int pigment_turn(const Web &w, const Coloring &c, int v, int p) {
  int in_he = -1, out_he = -1;
  for (int he : w.vertices[v].half_edges)
    if (has_pigment(c.color[he_edge(he)], p)) (leg_into(c, he) ? in_he : out_he) = he;
  return corner(w, in_he, out_he);
}

int table_turn(const SingularTables &t, const Web &w, const Coloring &c, int v, int lo, int hi, BicolorType type) {
  const int ty = type == BicolorType::first ? 0 : 1;
  int val = 0;
  switch (singular_class(w, c, v)) {
    case SingularClass::mono: {
      const int p = single_pigment(c.color[he_edge(w.vertices[v].half_edges[0])]);
      val = t.mono[c.sign[v] > 0 ? 0 : 1][ty][p == lo ? 0 : 1];
      break;
    }
    case SingularClass::adjacent_ll:
    case SingularClass::adjacent_rr:
      if (type == BicolorType::second) val = t.adjacent_second[singular_class(w, c, v) == SingularClass::adjacent_ll ? 0 : 1];
      break;
    case SingularClass::adjacent_lr:
      if (type == BicolorType::first) val = t.adjacent_lr_first[pigment_turn(w, c, v, lo) > 0 ? 0 : 1];
      break;
    case SingularClass::opposite: break;
  }
  if (val == 0)
    throw TableMiss("no table entry at singular vertex " + std::to_string(v) + " for pair (" + std::to_string(lo) + "," +
                    std::to_string(hi) + ")");
  return val;
}

struct Passage {
  int turning = 0;
  std::vector<std::pair<int, int>> pairs;  // (incoming he, outgoing he)
};

Passage passage(const Web &w, const Coloring &c, int v, int lo, int hi, BicolorType type, const SingularTables &t,
                bool want_pairs) {
  Leg legs[4];
  int n = 0;
  const auto &hs = w.vertices[v].half_edges;
  for (int s = 0; s < static_cast<int>(hs.size()); ++s) {
    const int d = bicolored_direction(w, c, he_edge(hs[s]), lo, hi, type);
    if (d == 0) continue;
    legs[n++] = {s, hs[s], (he_end(hs[s]) == 1) == (d > 0)};
  }
  Passage p;
  if (n == 0) return p;
  if (n == 2) {
    if (legs[0].in == legs[1].in) throw TableMiss("bicolored curve does not pass through vertex " + std::to_string(v));
    const int i = legs[0].in ? 0 : 1;
    p.turning = corner(w, legs[i].he, legs[1 - i].he);
    if (want_pairs) p.pairs.push_back({legs[i].he, legs[1 - i].he});
    return p;
  }
  if (n != 4) throw TableMiss("bicolored curve meets vertex " + std::to_string(v) + " in an odd number of legs");
  int ins[2], k = 0;
  for (int i = 0; i < 4; ++i)
    if (legs[i].in) {
      if (k == 2) throw TableMiss("unbalanced legs at vertex " + std::to_string(v));
      ins[k++] = legs[i].slot;
    }
  if (k != 2) throw TableMiss("unbalanced legs at vertex " + std::to_string(v));
  auto pair_turn = [&](int shift, std::vector<std::pair<int, int>> &pairs) {
    int total = 0;
    for (int s : ins) {
      const int o = (s + shift + 4) % 4;
      total += corner(w, hs[s], hs[o]);
      pairs.push_back({hs[s], hs[o]});
    }
    return total;
  };
  if ((ins[1] - ins[0]) % 2 != 0) {
    // Adjacent in-legs: the non-crossing pairing; both pairings have zero total turning.
    const int s0 = ins[0], s1 = ins[1];
    const bool s1_after = (s0 + 1) % 4 == s1;
    const int o0 = s1_after ? (s0 + 3) % 4 : (s0 + 1) % 4;
    const int o1 = s1_after ? (s1 + 1) % 4 : (s1 + 3) % 4;
    p.turning = corner(w, hs[s0], hs[o0]) + corner(w, hs[s1], hs[o1]);
    if (want_pairs) p.pairs = {{hs[s0], hs[o0]}, {hs[s1], hs[o1]}};
    return p;
  }
  const int want = table_turn(t, w, c, v, lo, hi, type);
  std::vector<std::pair<int, int>> a, b;
  const int ta = pair_turn(+1, a), tb = pair_turn(-1, b);
  if ((ta > 0) == (want > 0)) {
    p.turning = ta;
    p.pairs = std::move(a);
  } else {
    p.turning = tb;
    p.pairs = std::move(b);
  }
  return p;
}

}  // namespace

SingularClass singular_class(const Web &w, const Coloring &c, int v) {
  const auto &hs = w.vertices[v].half_edges;
  Color all = 0;
  for (int he : hs) all |= c.color[he_edge(he)];
  if (std::popcount(all) == 1) return SingularClass::mono;
  const int p1 = std::countr_zero(all) + 1;
  const int p2 = 32 - std::countl_zero(all);
  const int t1 = pigment_turn(w, c, v, p1), t2 = pigment_turn(w, c, v, p2);
  if (t1 == 0 || t2 == 0) return SingularClass::opposite;
  if (t1 > 0 && t2 > 0) return SingularClass::adjacent_ll;
  if (t1 < 0 && t2 < 0) return SingularClass::adjacent_rr;
  return SingularClass::adjacent_lr;
}

CurveSet bicolored_cycle(const Web &web, const Coloring &c, int a, int b, BicolorType type, const SingularTables &tables) {
  if (a == b) throw std::invalid_argument("bicolored_cycle: pigments must differ");
  const int lo = std::min(a, b), hi = std::max(a, b);
  const int E = static_cast<int>(web.edges.size());
  std::vector<int> dir(E);
  for (int e = 0; e < E; ++e) dir[e] = bicolored_direction(web, c, e, lo, hi, type);
  std::map<int, std::pair<int, int>> next;  // incoming he -> (outgoing he, corner turn)
  for (int v = 0; v < static_cast<int>(web.vertices.size()); ++v) {
    const auto p = passage(web, c, v, lo, hi, type, tables, true);
    for (const auto &[in, out] : p.pairs) next[in] = {out, corner(web, in, out)};
  }
  CurveSet cs;
  std::vector<char> used(E, 0);
  for (int e0 = 0; e0 < E; ++e0) {
    if (dir[e0] == 0 || used[e0]) continue;
    CurveComponent comp;
    int e = e0;
    while (true) {
      used[e] = 1;
      comp.steps.push_back({e, dir[e] > 0});
      comp.turning += dir[e] * web.edge_turning(e);
      if (web.edges[e].is_loop()) break;
      const int arrive = half_edge(e, dir[e] > 0 ? 1 : 0);
      const auto it = next.find(arrive);
      if (it == next.end()) throw TableMiss("bicolored curve stops at a vertex");
      comp.turning += it->second.second;
      const int ne = he_edge(it->second.first);
      if (used[ne]) {
        if (ne != e0) throw TableMiss("bicolored curve revisits an edge");
        break;
      }
      e = ne;
    }
    cs.components.push_back(std::move(comp));
  }
  return cs;
}

int rotational(const CurveSet &curves) {
  int total = 0;
  for (const auto &comp : curves.components) {
    if (comp.turning % 8 != 0)
      throw NonClosedTurning("curve component turning " + std::to_string(comp.turning) + " is not a multiple of 8");
    total += comp.turning / 8;
  }
  return total;
}

static int sign_term(const Web &web, const Coloring &c) {
  int s = 0;
  for (int v = 0; v < static_cast<int>(web.vertices.size()); ++v) s -= c.sign[v];
  return s;
}

int degree_reference(const Web &web, const Coloring &c, int N, const SingularTables &tables) {
  int d = sign_term(web, c);
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b)
      for (auto type : {BicolorType::first, BicolorType::second}) d += rotational(bicolored_cycle(web, c, a, b, type, tables));
  return d;
}

DegreeContext::DegreeContext(const Web &web, int N, const SingularTables &tables) : web_(web), N_(N), tables_(tables) {
  for (int e = 0; e < static_cast<int>(web.edges.size()); ++e) kappa_.push_back(web.edge_turning(e));
}

int DegreeContext::degree(const Coloring &c) const {
  const int N = N_;
  long long total = 0;
  for (int e = 0; e < static_cast<int>(web_.edges.size()); ++e) {
    if (kappa_[e] == 0) continue;
    const Color col = c.color[e];
    long long D = 0;
    if (is_spin(web_.edges[e].kind)) {
      for (int x = 1; x <= N; ++x)
        if (has_pigment(col, x)) D += 2 * x - N - 1 + (N - 1);
      D -= N * (N - 1) / 2;
    } else {
      D = c.orient[e] * (2 * single_pigment(col) - 2);
    }
    total += D * kappa_[e];
  }
  for (int v = 0; v < static_cast<int>(web_.vertices.size()); ++v) {
    const auto &vx = web_.vertices[v];
    Color pigs = 0;
    if (vx.kind == VertexKind::trivalent) {
      pigs = c.color[he_edge(trivalent_slots(web_, v).vect)];
    } else {
      for (int he : vx.half_edges) pigs |= c.color[he_edge(he)];
    }
    for (int p = 1; p <= N; ++p) {
      if (!has_pigment(pigs, p)) continue;
      for (int x = 1; x <= N; ++x) {
        if (x == p || (has_pigment(pigs, x) && x < p)) continue;
        const int lo = std::min(p, x), hi = std::max(p, x);
        for (auto type : {BicolorType::first, BicolorType::second})
          total += passage(web_, c, v, lo, hi, type, tables_, false).turning;
      }
    }
  }
  if (total % 8 != 0) throw NonClosedTurning("total turning " + std::to_string(total) + " is not a multiple of 8");
  return sign_term(web_, c) + static_cast<int>(total / 8);
}

int degree(const Web &web, const Coloring &c, int N, const SingularTables &tables) {
  return DegreeContext(web, N, tables).degree(c);
}

}  // namespace dweb
