#include "dweb/skein.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

namespace dweb {

const MixedConventions &default_mixed_conventions() {
  static const MixedConventions conv = [] {
    MixedConventions c;
    c.rule[mixed_index(EdgeKind::spin_even, true)] = {true, 1};
    c.rule[mixed_index(EdgeKind::spin_even, false)] = {false, -1};
    c.rule[mixed_index(EdgeKind::spin_odd, true)] = {true, -1};
    c.rule[mixed_index(EdgeKind::spin_odd, false)] = {false, 1};
    c.turned_sign = -1;
    return c;
  }();
  return conv;
}

namespace {

struct Resolution {
  LaurentPoly coefficient;
  TileKind kind;
};

std::vector<Resolution> resolutions(const Tile &t, const MixedConventions &conv) {
  switch (t.kind) {
    // The SW-NE over strand: -q (vertical smoothing) + singular - q^{-1} (horizontal smoothing).
    case TileKind::over:
      return {{-qpow(1), TileKind::smooth_v}, {LaurentPoly(1), TileKind::singular}, {-qpow(-1), TileKind::smooth_h}};
    case TileKind::under:
      return {{-qpow(1), TileKind::smooth_h}, {LaurentPoly(1), TileKind::singular}, {-qpow(-1), TileKind::smooth_v}};
    case TileKind::mixed_over:
    case TileKind::mixed_under: {
      const bool spin_sw_ne = strand_is_spin(t.bottom[0]);
      const EdgeKind parity = strand_kind(spin_sw_ne ? t.bottom[0] : t.bottom[1]);
      const MixedRule &r = conv.rule[mixed_index(parity, t.kind == TileKind::mixed_over)];
      // A quarter turn maps the SE-NW frame to the SW-NE frame and swaps H with I.
      const bool first_h = r.first_is_h == spin_sw_ne;
      const TileKind a = first_h ? TileKind::res_h : TileKind::res_i;
      const TileKind b = first_h ? TileKind::res_i : TileKind::res_h;
      const int sign = spin_sw_ne ? r.sign : r.sign * conv.turned_sign;
      return {{qpow_half(1) * LaurentPoly(sign), a}, {qpow_half(-1) * LaurentPoly(-sign), b}};
    }
    default: return {};
  }
}

}  // namespace

WeightedSum expand(const Diagram &d, const MixedConventions &conv) {
  WeightedSum out;
  if (d.crossings.empty()) {
    out.terms.push_back({LaurentPoly(1), d.web});
    return out;
  }
  std::vector<std::vector<Resolution>> choices;
  for (const auto &c : d.crossings) choices.push_back(resolutions(d.program.rows[c.row].tiles[c.index], conv));
  std::map<std::string, std::size_t> index;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    SliceProgram p = d.program;
    LaurentPoly coef(1);
    for (std::size_t k = 0; k < choices.size(); ++k) {
      const auto &c = d.crossings[k];
      const auto &r = choices[k][pick[k]];
      p.rows[c.row].tiles[c.index].kind = r.kind;
      coef *= r.coefficient;
    }
    Web w = layout_web(p);
    const std::string key = canonical_key(w);
    if (auto it = index.find(key); it != index.end()) {
      out.terms[it->second].first += coef;
    } else {
      index.emplace(key, out.terms.size());
      out.terms.push_back({coef, std::move(w)});
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  std::erase_if(out.terms, [](const auto &t) { return t.first.is_zero(); });
  return out;
}

LaurentPoly evaluate_diagram(const Diagram &d, int N, const EvalOptions &opts, const MixedConventions &conv) {
  const WeightedSum sum = expand(d, conv);
  const std::size_t n = sum.terms.size();
  std::vector<LaurentPoly> values(n);
  const int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(n)));
  EvalOptions inner = opts;
  if (threads > 1) inner.threads = 1;
  auto work = [&](std::size_t begin) {
    for (std::size_t i = begin; i < n; i += threads) values[i] = evaluate_poly(sum.terms[i].second, N, inner);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  LaurentPoly total;
  for (std::size_t i = 0; i < n; ++i) total += sum.terms[i].first * values[i];
  return total;
}

LaurentPoly evaluate_source(const std::string &source, int N, const EvalOptions &opts) {
  const Diagram d = layout(parse(resolve_source(source)));
  if (d.crossings.empty()) return evaluate_poly(d.web, N, opts);
  return evaluate_diagram(d, N, opts);
}

void require_link_diagram(const Diagram &d) {
  for (const auto &e : d.web.edges)
    if (e.kind != EdgeKind::vectorial) throw NonLinkDiagram("link diagram has spin edges");
  for (const auto &v : d.web.vertices)
    if (v.kind != VertexKind::crossing) throw NonLinkDiagram("link diagram has web vertices");
}

LaurentPoly link_invariant(const std::string &source, int N, const EvalOptions &opts) {
  const Diagram d = layout(parse(resolve_source(source)));
  require_link_diagram(d);
  return evaluate_diagram(d, N, opts);
}

SliceProgram mirror(const SliceProgram &p) {
  SliceProgram m = p;
  for (auto &row : m.rows)
    for (auto &t : row.tiles) {
      switch (t.kind) {
        case TileKind::over: t.kind = TileKind::under; break;
        case TileKind::under: t.kind = TileKind::over; break;
        case TileKind::mixed_over: t.kind = TileKind::mixed_under; break;
        case TileKind::mixed_under: t.kind = TileKind::mixed_over; break;
        default: break;
      }
    }
  return m;
}

// ---------------------------------------------------------------------------
// Relation catalog

namespace {

using Coef = std::function<LaurentPoly(int)>;

Coef constant(long long c) {
  return [c](int) { return LaurentPoly(c); };
}
Coef qint_of(int a, int b) {
  return [a, b](int N) { return qint(a * N + b); };
}
LaurentPoly circle_v_value(int N) { return qint(2 * N - 1) + LaurentPoly(1); }

RelationTerm term(Coef c, std::string name) { return {std::move(c), std::move(name)}; }
RelationTerm term(std::string name) { return {constant(1), std::move(name)}; }

std::vector<Relation> build_catalog() {
  std::vector<Relation> r;
  const Coef circle = circle_v_value;
  const Coef spin_circle = [](int N) { return qtwo_bracket(N - 1); };
  const Coef two_n2 = [](int N) { return qtwo_bracket(N - 2); };
  const Coef two_n3 = [](int N) { return qtwo_bracket(N - 3); };
  const Coef qN = qint_of(1, 0), qN1 = qint_of(1, -1), qN2 = qint_of(1, -2), qN3 = qint_of(1, -3);
  const Coef two = [](int) { return qint(2); };
  const Coef curl = [](int N) { return qint(2 * N - 2) + qint(2); };
  const Coef two_sing = [](int N) { return qint(2 * N - 3) + LaurentPoly(1); };
  const Coef kink_pos = [](int N) { return -qpow(2 * N - 1); };
  const Coef kink_neg = [](int N) { return -qpow(1 - 2 * N); };
  const Coef minus_z = [](int) { return qpow(-1) - qpow(1); };

  // Circles and the theta web.
  r.push_back({"circle_v", "vectorial circle", {term("circle_v")}, {term(circle, "empty")}});
  r.push_back({"circle_e", "even spin circle, counterclockwise", {term("circle_e")}, {term(spin_circle, "empty")}});
  r.push_back({"circle_e_rev", "even spin circle, clockwise", {term("circle_e_rev")}, {term(spin_circle, "empty")}});
  r.push_back({"circle_o", "odd spin circle, counterclockwise", {term("circle_o")}, {term(spin_circle, "empty")}});
  r.push_back({"circle_o_rev", "odd spin circle, clockwise", {term("circle_o_rev")}, {term(spin_circle, "empty")}});
  r.push_back({"theta", "theta web", {term("theta")}, {term([](int N) { return qint(N) * qtwo_bracket(N - 1); }, "empty")}});

  // Bigons.
  r.push_back({"digon", "spin digon on a vectorial edge", {term("digon_lhs")}, {term(two_n2, "circle_v")}});
  r.push_back({"digon_flip", "spin digon on a vectorial edge, flipped", {term("digon_flip_lhs")}, {term(two_n2, "circle_v")}});
  r.push_back({"digon_theta", "spin digon inside the theta web", {term("digon_theta_lhs")}, {term(two_n2, "theta")}});
  for (const char *p : {"e", "o"})
    for (const char *s : {"l", "r"}) {
      const std::string id = std::string("bad_digon_") + p + "_" + s;
      r.push_back({id, "mixed digon on a spin edge", {term(id + "_lhs")}, {term(qN, std::string("circle_") + p)}});
    }

  // Singular curl and singular square.
  r.push_back({"curl", "singular curl", {term("curl_lhs")}, {term(curl, "circle_v")}});
  r.push_back({"curl_theta", "singular curl inside the theta web", {term("curl_theta_lhs")}, {term(curl, "theta")}});
  for (int k = 1; k <= 4; ++k) {
    const std::string id = "singular_square_" + std::to_string(k);
    r.push_back({id, "square web against the singular vertex", {term(id + "_lhs")}, {term(two_n3, "singular_square_rhs")}});
  }

  // Triangles.
  for (int k = 1; k <= 4; ++k) {
    const std::string id = "triangle_" + std::to_string(k);
    r.push_back({id, "triangle collapses to a vertex", {term(id + "_lhs")}, {term(qN1, id + "_rhs")}});
  }

  // X next to I.
  for (int k = 1; k <= 4; ++k) {
    const std::string id = "xihii_" + std::to_string(k);
    r.push_back({id, "singular vertex beside a spin strand", {term(id + "_lhs")},
                 {term(two, id + "_h"), term(qN1, id + "_ii")}});
  }
  r.push_back({"two_sing", "two stacked singular vertices", {term("two_sing_lhs")},
               {term(two, "two_sing_sing"), term(two_sing, "two_sing_hor")}});

  // Square with one vectorial side, and the pentagon.
  for (int k = 1; k <= 4; ++k) {
    const std::string id = "square31_" + std::to_string(k);
    r.push_back({id, "square with three spin sides", {term(id + "_lhs")}, {term(qN2, id + "_i"), term(id + "_smooth")}});
  }
  for (int k = 1; k <= 4; ++k) {
    const std::string id = "pentagon_" + std::to_string(k);
    r.push_back({id, "pentagon", {term(id + "_lhs")}, {term(id + "_x"), term(qN3, id + "_t")}});
  }

  // Reidemeister moves and their web-level companions.
  r.push_back({"r1_pos", "positive kink", {term("unknot_kink_pos")}, {term(kink_pos, "unknot")}});
  r.push_back({"r1_neg", "negative kink", {term("unknot_kink_neg")}, {term(kink_neg, "unknot")}});
  r.push_back({"r1_hopf", "kink on a Hopf link component", {term("hopf_kink_pos")}, {term(kink_pos, "hopf")}});
  r.push_back({"r2", "second Reidemeister move", {term("r2_lhs")}, {term("r2_rhs")}});
  r.push_back({"r2_rev", "second Reidemeister move, other order", {term("r2_rev_lhs")}, {term("r2_rhs")}});
  for (const char *v : {"over", "under"})
    for (const char *p : {"e", "o"}) {
      const std::string id = std::string("pf_") + v + "_" + p;
      r.push_back({id, "pitchfork move", {term(id + "_lhs")}, {term(id + "_rhs")}});
    }
  for (const char *v : {"over", "under"})
    for (const char *p : {"e", "o"}) {
      const std::string id = std::string("pf2_") + v + "_" + p;
      r.push_back({id, "pitchfork move, reversed spin orientation", {term(id + "_lhs")}, {term(id + "_rhs")}});
    }
  for (const char *v : {"over", "under"})
    for (const char *p : {"e", "o"}) {
      const std::string id = std::string("r2_mixed_") + v + "_" + p;
      r.push_back({id, "second Reidemeister move between a spin and a vectorial strand", {term(id + "_lhs")},
                   {term(id + "_rhs")}});
    }
  r.push_back({"r3_sing_over", "strand passing over a singular vertex", {term("r3_sing_over_lhs")}, {term("r3_sing_over_rhs")}});
  r.push_back({"r3_sing_under", "strand passing under a singular vertex", {term("r3_sing_under_lhs")},
               {term("r3_sing_under_rhs")}});
  r.push_back({"r3", "third Reidemeister move", {term("r3_lhs")}, {term("r3_rhs")}});
  r.push_back({"r3_mixed", "third Reidemeister move, mixed crossing types", {term("r3_mixed_lhs")}, {term("r3_mixed_rhs")}});
  r.push_back({"skein", "crossing difference", {term("skein_over"), term(minus_z, "skein_smooth_h")},
               {term("skein_under"), term(minus_z, "skein_smooth_v")}});
  return r;
}

}  // namespace

const std::vector<Relation> &relation_catalog() {
  static const std::vector<Relation> cat = build_catalog();
  return cat;
}

std::vector<std::string> relation_ids() {
  std::vector<std::string> ids;
  for (const auto &r : relation_catalog()) ids.push_back(r.id);
  return ids;
}

const Relation &find_relation(const std::string &id) {
  for (const auto &r : relation_catalog())
    if (r.id == id) return r;
  throw UnknownRelation("unknown relation '" + id + "'");
}

RelationReport verify_relation(const std::string &id, int N, const EvalOptions &opts) {
  const Relation &rel = find_relation(id);
  RelationReport rep;
  rep.id = id;
  rep.N = N;
  auto side = [&](const std::vector<RelationTerm> &terms) {
    LaurentPoly s;
    for (const auto &t : terms) {
      const LaurentPoly c = t.coefficient(N);
      if (c.is_zero()) continue;
      s += c * evaluate_source(builtin(t.builtin), N, opts);
    }
    return s;
  };
  rep.lhs = side(rel.lhs);
  rep.rhs = side(rel.rhs);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace dweb
