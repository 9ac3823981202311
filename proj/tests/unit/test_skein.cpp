#include "dweb/skein.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace dweb;

TEST_CASE("relation catalog holds at N = 3") {
  for (const auto &id : relation_ids()) {
    INFO(id);
    const auto rep = verify_relation(id, 3);
    CHECK(rep.equal);
    CHECK_FALSE(rep.lhs.is_zero());
  }
}

TEST_CASE("relation ids are unique and resolvable") {
  const auto ids = relation_ids();
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(find_relation("pentagon_1").lhs.size() == 1);
  CHECK_THROWS_AS(find_relation("pentagon"), UnknownRelation);
}

TEST_CASE("kink factors") {
  for (int N : {3, 4}) {
    const LaurentPoly unknot = test::circle_v_value(N);
    CHECK(link_invariant("builtin:unknot_kink_pos", N) == -qpow(2 * N - 1) * unknot);
    CHECK(link_invariant("builtin:unknot_kink_neg", N) == -qpow(1 - 2 * N) * unknot);
  }
}

TEST_CASE("skein difference") {
  // Subtracting the two crossing expansions leaves (q - q^-1) (smooth_h - smooth_v).
  for (int N : {3, 4}) {
    const auto over = evaluate_source("builtin:skein_over", N);
    const auto under = evaluate_source("builtin:skein_under", N);
    const auto v = evaluate_source("builtin:skein_smooth_v", N);
    const auto h = evaluate_source("builtin:skein_smooth_h", N);
    CHECK(over - under == (qpow(1) - qpow(-1)) * (h - v));
  }
}

TEST_CASE("expansion merges equal webs") {
  const Diagram d = test::diagram_of("hopf");
  const WeightedSum s = expand(d);
  CHECK(s.terms.size() <= 9);
  LaurentPoly total;
  for (const auto &[c, w] : s.terms) total += c * evaluate_poly(w, 3);
  CHECK(total == evaluate_diagram(d, 3));
}

TEST_CASE("mirror swaps crossing tiles") {
  const SliceProgram p = parse(builtin("trefoil"));
  const SliceProgram m = mirror(p);
  CHECK_FALSE(same_program(p, m));
  CHECK(same_program(mirror(m), p));
  for (const char *n : {"trefoil", "figure8", "hopf"}) {
    INFO(n);
    CHECK(evaluate_diagram(layout(mirror(parse(builtin(n)))), 3) == bar(link_invariant(std::string("builtin:") + n, 3)));
  }
}

TEST_CASE("link invariant rejects webs") {
  CHECK_THROWS_AS(link_invariant("builtin:theta", 3), NonLinkDiagram);
  CHECK_THROWS_AS(link_invariant("builtin:r2_mixed_over_e_lhs", 3), NonLinkDiagram);
}

TEST_CASE("mixed conventions are parameters") {
  MixedConventions flipped = default_mixed_conventions();
  flipped.turned_sign = 1;
  const Diagram lhs = test::diagram_of("r2_mixed_over_e_lhs");
  const Diagram rhs = test::diagram_of("r2_mixed_over_e_rhs");
  CHECK(evaluate_diagram(lhs, 3) == evaluate_diagram(rhs, 3));
  CHECK(evaluate_diagram(lhs, 3, {}, flipped) != evaluate_diagram(rhs, 3, {}, flipped));
}
