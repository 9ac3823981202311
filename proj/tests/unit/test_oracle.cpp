#include "dweb/oracle.hpp"

#include "dweb/evaluate.hpp"
#include "dweb/skein.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace dweb;
using dweb::test::web_of;

TEST_CASE("square replacement without singular vertices is evaluation") {
  for (const char *n : {"theta", "circle_v", "pentagon_1_lhs"}) CHECK(square_replacement_eval(web_of(n), 4) == evaluate_poly(web_of(n), 4));
}

TEST_CASE("square replacement matches evaluation") {
  for (const auto &n : test::singular_builtins()) {
    const Web w = web_of(n);
    if (w.count_vertices(VertexKind::singular) > 2) continue;
    INFO(n);
    CHECK(square_replacement_eval(w, 3) == evaluate_poly(w, 3));
  }
}

TEST_CASE("square choice does not matter") {
  const Web w = web_of("gweb_theta_sing2");
  const auto base = square_replacement_eval(w, 4);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) CHECK(square_replacement_eval(w, 4, {a, b}) == base);
  CHECK(square_replace(w).count_vertices(VertexKind::singular) == 0);
}

TEST_CASE("curl value") {
  for (int N : {3, 4}) {
    const LaurentPoly expected = (qint(2 * N - 2) + qint(2)) * test::circle_v_value(N);
    CHECK(square_replacement_eval(web_of("curl_lhs"), N) == expected);
  }
}

TEST_CASE("kauffman base cases") {
  for (int N : {3, 4, 5}) CHECK(kauffman_specialized(test::diagram_of("unknot"), N) == test::circle_v_value(N));
  const LaurentPoly kink = -qpow(5) * (qint(5) + LaurentPoly(1));
  CHECK(kauffman_specialized(test::diagram_of("unknot_kink_pos"), 3) == kink);
  const LaurentPoly u = test::circle_v_value(4);
  CHECK(kauffman_specialized(test::diagram_of("unlink2"), 4) == u * u);
}

TEST_CASE("pd codes") {
  const PDCode pd = pd_code(test::diagram_of("trefoil"));
  CHECK(pd.crossings.size() == 3);
  CHECK(pd.free_loops == 0);
  std::map<int, int> uses;
  for (const auto &x : pd.crossings)
    for (int s : x) ++uses[s];
  for (const auto &[s, n] : uses) CHECK(n == 2);
  CHECK(pd_code(test::diagram_of("unlink2")).free_loops == 2);
}

TEST_CASE("named links: both paths agree with the frozen values") {
  struct Case {
    const char *name;
    int N;
    const char *value;
  };
  // Values recorded from the Kauffman recursion.
  const Case cases[] = {
      {"trefoil", 3, "-q^11 - q^9 - 3q^7 - 3q^5 - 3q^3 - q + 2q^-3 + 2q^-5 + 2q^-7 + q^-9 - q^-15"},
      {"trefoil", 4, "-q^15 - q^13 - 2q^11 - 3q^9 - 3q^7 - 3q^5 - 2q^3 - q + q^-3 + 2q^-5 + 2q^-7 + 2q^-9 + q^-11 + q^-13 - q^-21"},
      {"figure8", 3, "q^20 + q^18 + 3q^16 + 4q^14 + 6q^12 + 6q^10 + 6q^8 + 4q^6 + 3q^4 + q^2 + 1"},
      {"hopf", 3, "q^10 + q^8 + 3q^6 + 4q^4 + 6q^2 + 6 + 6q^-2 + 4q^-4 + 3q^-6 + q^-8 + q^-10"},
      {"hopf", 4, "q^14 + q^12 + 2q^10 + 4q^8 + 5q^6 + 7q^4 + 8q^2 + 8 + 8q^-2 + 7q^-4 + 5q^-6 + 4q^-8 + 2q^-10 + q^-12 + q^-14"},
  };
  for (const auto &c : cases) {
    INFO(c.name << " N=" << c.N);
    CHECK(kauffman_specialized(test::diagram_of(c.name), c.N).to_string() == c.value);
    CHECK(link_invariant(std::string("builtin:") + c.name, c.N).to_string() == c.value);
  }
}

TEST_CASE("recursion cap") { CHECK_THROWS_AS(kauffman_specialized(test::diagram_of("figure8"), 3, 0), DepthExceeded); }
