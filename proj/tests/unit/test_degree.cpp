#include "dweb/degree.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace dweb;
using dweb::test::web_of;

TEST_CASE("fast degree equals curve assembly") {
  std::vector<std::string> names = {"theta", "digon_lhs", "pentagon_2_lhs", "circle_o_rev"};
  for (const auto &n : test::singular_builtins()) names.push_back(n);
  for (const auto &n : names) {
    const Web w = web_of(n);
    if (w.edges.size() > 8) continue;
    INFO(n);
    for (int N : {3, 4}) {
      const DegreeContext ctx(w, N);
      for (const auto &c : enumerate_all(w, N)) {
        const int d = degree_reference(w, c, N);
        CHECK(degree(w, c, N) == d);
        CHECK(ctx.degree(c) == d);
      }
    }
  }
}

TEST_CASE("vectorial circle degrees") {
  // Pigment a on a counterclockwise circle has degree 2(N - a) + 1 - ... ; the multiset is {2N-2, ..., 2-2N} plus two zeros.
  const Web w = web_of("circle_v");
  std::multiset<int> degs;
  for (const auto &c : enumerate_all(w, 3)) degs.insert(degree(w, c, 3));
  CHECK(degs == std::multiset<int>{-4, -2, 0, 0, 2, 4});
}

TEST_CASE("bicolored cycles close up") {
  const Web w = web_of("pentagon_1_lhs");
  for (const auto &c : enumerate_all(w, 3))
    for (int a = 1; a <= 3; ++a)
      for (int b = a + 1; b <= 3; ++b)
        for (auto t : {BicolorType::first, BicolorType::second}) {
          const auto curves = bicolored_cycle(w, c, a, b, t);
          for (const auto &comp : curves.components) CHECK(comp.turning % 8 == 0);
        }
}

TEST_CASE("colored cycle variants") {
  const Web w = web_of("theta");
  const auto c = enumerate_all(w, 3).front();
  for (int a = 1; a <= 3; ++a) {
    const auto nat = colored_cycle(w, c, a, CycleVariant::natural);
    const auto prime = colored_cycle(w, c, a, CycleVariant::prime);
    REQUIRE(nat.size() == prime.size());
    for (std::size_t i = 0; i < nat.size(); ++i) CHECK(nat[i].along != prime[i].along);
  }
}

TEST_CASE("tables json round trip") {
  const auto &t = default_tables();
  const auto back = parse_tables(tables_to_json(t));
  CHECK(back.mono == t.mono);
  CHECK(back.adjacent_second == t.adjacent_second);
  CHECK(back.adjacent_lr_first == t.adjacent_lr_first);
  CHECK_THROWS(parse_tables(R"({"schema": 2})"));
  CHECK_THROWS(parse_tables(R"({"schema": 1, "mono": [{"sign": "+", "type": "first", "role": "low", "turn": "up"}]})"));
}

TEST_CASE("missing table entries are reported") {
  SingularTables empty;
  const Web w = web_of("curl_lhs");
  bool missed = false;
  for (const auto &c : enumerate_all(w, 3)) {
    try {
      degree(w, c, 3, empty);
    } catch (const TableMiss &) {
      missed = true;
    }
  }
  CHECK(missed);
}
