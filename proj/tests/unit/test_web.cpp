#include "dweb/web.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace dweb;
using dweb::test::web_of;

namespace {

// One trivalent vertex at the origin with the spin strand entering along `in_dir`
// and the vectorial edge leaving along `vect_dir`.
Web star(int in_dir, int vect_dir) {
  Web w;
  const int c = w.add_vertex(VertexKind::trivalent, {0, 0});
  auto far = [](int d) {
    const Point s = octant_step(d);
    return Point{2 * s.x, 2 * s.y};
  };
  const int a = w.add_vertex(VertexKind::trivalent, far(opposite_octant(in_dir)));
  const int b = w.add_vertex(VertexKind::trivalent, far(in_dir));
  const int v = w.add_vertex(VertexKind::trivalent, far(vect_dir));
  w.add_edge(EdgeKind::spin_even, a, c, {far(opposite_octant(in_dir)), {0, 0}});
  w.add_edge(EdgeKind::spin_odd, c, b, {{0, 0}, far(in_dir)});
  w.add_edge(EdgeKind::vectorial, c, v, {{0, 0}, far(vect_dir)});
  w.sort_half_edges();
  return w;
}

}  // namespace

TEST_CASE("octant directions") {
  CHECK(octant_of({0, 0}, {3, 0}) == 0);
  CHECK(octant_of({0, 0}, {2, 2}) == 1);
  CHECK(octant_of({0, 0}, {0, -1}) == 6);
  CHECK(octant_of({0, 0}, {2, 1}) == -1);
  CHECK(octant_of({1, 1}, {1, 1}) == -1);
  CHECK(turn_between(0, 2) == 2);
  CHECK(turn_between(2, 0) == -2);
  CHECK(turn_between(0, 4) == -4);
  CHECK(turn_between(7, 1) == 2);
}

TEST_CASE("which side") {
  // Spin west to east, vectorial north: left.
  CHECK(which_side(star(0, 2), 0) == Side::left);
  // Vectorial south: right.
  CHECK(which_side(star(0, 6), 0) == Side::right);
  // Spin south to north, vectorial east: right.
  CHECK(which_side(star(2, 0), 0) == Side::right);
  CHECK_THROWS_AS(which_side(star(0, 2), 1), InvalidVertex);
}

TEST_CASE("layouts of builtins validate") {
  for (const auto &n : test::crossing_free_builtins()) {
    INFO(n);
    const auto rep = validate(web_of(n));
    CHECK(rep.ok);
  }
}

TEST_CASE("validation rejects broken geometry") {
  Web w = web_of("theta");
  w.edges[0].poly.back().x += 1;
  CHECK_FALSE(validate(w).ok);

  Web flow = web_of("theta");
  for (auto &e : flow.edges)
    if (is_spin(e.kind)) {
      std::reverse(e.poly.begin(), e.poly.end());
      std::swap(e.tail, e.head);
      break;
    }
  CHECK_FALSE(validate(flow).ok);
}

TEST_CASE("serialization round trip") {
  for (const char *n : {"theta", "gweb_sing_zigzag", "circle_o_rev", "empty"}) {
    INFO(n);
    const Web w = web_of(n);
    const Web back = deserialize(serialize(w));
    CHECK(serialize(back) == serialize(w));
    CHECK(canonical_key(back) == canonical_key(w));
  }
  CHECK_THROWS(deserialize("not a web"));
}

TEST_CASE("canonical key ignores translation") {
  Web w = web_of("theta");
  Web moved = w;
  for (auto &v : moved.vertices) v.pos = {v.pos.x + 16, v.pos.y - 8};
  for (auto &e : moved.edges)
    for (auto &p : e.poly) p = {p.x + 16, p.y - 8};
  CHECK(canonical_key(moved) == canonical_key(w));
  CHECK(serialize(moved) != serialize(w));
}

TEST_CASE("transforms") {
  const Web ccw = web_of("circle_e");
  const Web cw = web_of("circle_e_rev");
  CHECK(canonical_key(opposite_web(ccw)) == canonical_key(cw));
  CHECK(canonical_key(dual_web(ccw, 4)) == canonical_key(cw));
  CHECK(canonical_key(dual_web(ccw, 3)) == canonical_key(web_of("circle_o_rev")));
  CHECK(canonical_key(bar_web(web_of("theta"))) == canonical_key(web_of("theta_bar")));
  CHECK(canonical_key(opposite_web(opposite_web(web_of("theta")))) == canonical_key(web_of("theta")));
  for (const char *n : {"theta", "digon_lhs", "pentagon_lhs"}) {
    INFO(n);
    CHECK(validate(opposite_web(web_of(n))).ok);
    CHECK(validate(bar_web(web_of(n))).ok);
  }
}

TEST_CASE("disjoint union") {
  const Web u = disjoint_union(web_of("theta"), web_of("circle_v"));
  CHECK(validate(u).ok);
  CHECK(u.vertices.size() == 2);
  CHECK(u.edges.size() == 4);
}
