#include "dweb/global.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace dweb;
using dweb::test::web_of;

TEST_CASE("shift examples") {
  CHECK(gsh(web_of("circle_v"), 3) == Rational(0));
  CHECK(gsh(web_of("circle_e"), 3) == Rational(-2));
  CHECK(gsh(web_of("circle_e_rev"), 3) == Rational(2));
  const Web theta = web_of("theta");
  const auto zs = enumerate_Z(theta);
  REQUIRE(zs.front().empty());
  CHECK(zsh(theta, zs.front(), 4) == Rational(0));
  CHECK(spin_rotational(web_of("circle_o")) == Rational(1));
}

TEST_CASE("cycle enumeration") {
  CHECK(enumerate_Z(web_of("empty")).size() == 1);
  CHECK(enumerate_Z(web_of("circle_v")).size() == 3);
  CHECK(enumerate_Z(web_of("circle_e")).size() == 2);
  CHECK(enumerate_Z(web_of("unlink2")).size() == 9);
  CHECK_THROWS_AS(enumerate_Z(web_of("curl_lhs")), SingularUnsupported);
}

TEST_CASE("cycle enumeration matches brute force") {
  // Every sign vector on the edges that is balanced at each vertex and follows spin orientation.
  for (const char *n : {"theta", "digon_lhs", "triangle_1_lhs", "pentagon_1_t"}) {
    INFO(n);
    const Web w = web_of(n);
    const int E = static_cast<int>(w.edges.size());
    std::size_t expected = 0;
    std::vector<std::int8_t> dir(E);
    for (int code = 0; code < static_cast<int>(std::pow(3, E)); ++code) {
      int x = code;
      bool ok = true;
      for (int e = 0; e < E; ++e, x /= 3) {
        dir[e] = static_cast<std::int8_t>(x % 3 - 1);
        if (is_spin(w.edges[e].kind) && dir[e] < 0) ok = false;
      }
      for (const auto &v : w.vertices) {
        int in = 0, out = 0;
        for (int he : v.half_edges) {
          const int d = dir[he_edge(he)];
          if (d == 0) continue;
          ((he_end(he) == 1) == (d > 0) ? in : out)++;
        }
        if (in != out || in > 1) ok = false;
      }
      expected += ok;
    }
    CHECK(enumerate_Z(w).size() == expected);
  }
}

TEST_CASE("web minus") {
  const Web ccw = web_of("circle_e");
  const auto zs = enumerate_Z(ccw);
  CHECK(canonical_key(web_minus(ccw, zs[0])) == canonical_key(ccw));
  CHECK(canonical_key(web_minus(ccw, zs[1])) == canonical_key(web_of("circle_o")));
  const Web theta = web_of("theta");
  for (const auto &z : enumerate_Z(theta)) {
    const Web m = web_minus(theta, z);
    CHECK(validate(m).ok);
    int vect = 0;
    for (const auto &e : theta.edges) vect += e.kind == EdgeKind::vectorial;
    int removed = 0;
    for (std::size_t e = 0; e < theta.edges.size(); ++e) removed += z.dir[e] != 0 && theta.edges[e].kind == EdgeKind::vectorial;
    int left = 0;
    for (const auto &e : m.edges) left += e.kind == EdgeKind::vectorial;
    CHECK(left == vect - removed);
  }
}

TEST_CASE("branching rule on trivalent builtins") {
  for (const auto &n : test::trivalent_builtins()) {
    INFO(n);
    for (int N : {4, 5}) CHECK(branching_check(web_of(n), N).equal);
  }
}

TEST_CASE("branching rule at N = 3") {
  for (const char *n : {"theta", "digon_lhs", "circle_v", "circle_o"}) {
    INFO(n);
    CHECK(branching_check(web_of(n), 3).equal);
  }
}

TEST_CASE("moy examples") {
  const Web odd = web_of("circle_o");
  AWeb one{odd, {{1}, {1}}};
  CHECK(moy_evaluate(one, 2) == qpow(1) + qpow(-1));
  const Web even = web_of("circle_e");
  AWeb full{even, {{1}, {2}}};
  CHECK(moy_evaluate(full, 2) == LaurentPoly(1));
  AWeb none{even, {{1}, {0}}};
  CHECK(moy_evaluate(none, 3) == LaurentPoly(1));
  AWeb empty{web_of("empty"), {}};
  CHECK(moy_evaluate(empty, 3) == LaurentPoly(1));
  // A thickness-k circle evaluates to the quantum binomial [N choose k].
  AWeb two{even, {{1}, {2}}};
  CHECK(moy_evaluate(two, 4) == exact_div(qint(4) * qint(3), qint(2)));
}

TEST_CASE("labeled rotation agrees with the arc picture") {
  // With spin thicknesses at most 1 the labeled web is a union of simple arcs; its
  // rotation number is the rotation number of that oriented cycle.
  for (const char *n : {"theta", "digon_lhs", "triangle_2_lhs", "xihii_3_ii"}) {
    INFO(n);
    const Web w = web_of(n);
    for (const auto &l : enumerate_labelings(w, 3)) {
      if (std::any_of(l.thickness.begin(), l.thickness.end(), [](int t) { return t > 1; })) continue;
      OrientedCycleZ z;
      for (std::size_t e = 0; e < w.edges.size(); ++e) z.dir.push_back(static_cast<std::int8_t>(l.thickness[e] > 0 ? l.dir[e] : 0));
      CHECK(aweb_rotational(AWeb{w, l}) == cycle_rotational(w, z));
    }
  }
}

TEST_CASE("type A decomposition on trivalent builtins") {
  for (const auto &n : test::trivalent_builtins()) {
    INFO(n);
    for (int N : {3, 4}) CHECK(typeA_check(web_of(n), N).equal);
  }
}

TEST_CASE("type A with the summed vertex sign fails") {
  // Counting each vertex quarter turn at +(N-1)/4 breaks the identity on the theta web.
  const Web w = web_of("theta");
  const int N = 3;
  LaurentPoly rhs;
  for (const auto &l : enumerate_labelings(w, N)) {
    const Rational e = typeA_exponent(w, l, N) + Rational(N - 1) * vertex_sign_sum(w, l);
    REQUIRE(e.denominator() == 1);
    rhs += qpow(e.numerator()) * moy_evaluate(AWeb{w, l}, N);
  }
  CHECK(rhs != evaluate_poly(w, N));
}

TEST_CASE("labelings respect parity and flow") {
  const Web w = web_of("theta");
  const auto ls = enumerate_labelings(w, 4);
  CHECK_FALSE(ls.empty());
  for (const auto &l : ls)
    for (std::size_t e = 0; e < w.edges.size(); ++e) {
      if (w.edges[e].kind == EdgeKind::spin_even) CHECK(l.thickness[e] % 2 == 0);
      if (w.edges[e].kind == EdgeKind::spin_odd) CHECK(l.thickness[e] % 2 == 1);
      CHECK(l.thickness[e] <= 4);
    }
  CHECK_THROWS_AS(typeA_check(web_of("curl_lhs"), 3), SingularUnsupported);
}
