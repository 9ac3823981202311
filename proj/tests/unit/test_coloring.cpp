#include "dweb/coloring.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <bit>

using namespace dweb;
using dweb::test::web_of;

TEST_CASE("circle counts") {
  for (int N = 2; N <= 6; ++N) {
    INFO(N);
    CHECK(count(web_of("circle_v"), N) == static_cast<std::uint64_t>(2 * N));
    // Spin circles: subsets of a fixed parity, 2^{N-1} of each.
    CHECK(count(web_of("circle_e"), N) == (std::uint64_t{1} << (N - 1)));
    CHECK(count(web_of("circle_o_rev"), N) == (std::uint64_t{1} << (N - 1)));
    CHECK(count(web_of("empty"), N) == 1);
  }
}

TEST_CASE("theta count matches the closed form at q = 1") {
  // [N] [2]^{[N-1]} at q = 1 is N 2^{N-1}.
  for (int N = 2; N <= 6; ++N) CHECK(count(web_of("theta"), N) == static_cast<std::uint64_t>(N) << (N - 1));
}

TEST_CASE("enumerated colorings are valid and distinct") {
  for (const char *n : {"theta", "digon_lhs", "gweb_theta_sing", "two_sing_lhs", "curl_lhs", "pentagon_1_lhs"}) {
    INFO(n);
    const Web w = web_of(n);
    const auto all = enumerate_all(w, 4);
    CHECK(all.size() == count(w, 4));
    for (const auto &c : all) CHECK(check(w, 4, c));
    for (std::size_t i = 1; i < all.size(); ++i)
      CHECK((all[i].color != all[i - 1].color || all[i].orient != all[i - 1].orient || all[i].sign != all[i - 1].sign));
  }
}

TEST_CASE("flow condition at trivalent vertices") {
  const Web w = web_of("theta");
  for (const auto &c : enumerate_all(w, 4))
    for (int v = 0; v < static_cast<int>(w.vertices.size()); ++v) {
      const auto s = trivalent_slots(w, v);
      const Color in = c.color[he_edge(s.spin_in)], out = c.color[he_edge(s.spin_out)], f = c.color[he_edge(s.vect)];
      CHECK(std::popcount(f) == 1);
      CHECK(std::popcount(in ^ out) == 1);
      CHECK((in ^ out) == f);
    }
}

TEST_CASE("check rejects tampered colorings") {
  const Web w = web_of("theta");
  auto c = enumerate_all(w, 3).front();
  for (std::size_t e = 0; e < w.edges.size(); ++e)
    if (w.edges[e].kind == EdgeKind::vectorial) c.orient[e] = static_cast<std::int8_t>(-c.orient[e]);
  CHECK_FALSE(check(w, 3, c));
}

TEST_CASE("singular vertex count") {
  // The curl evaluates to ([2N-2] + [2]) ([2N-1] + 1), which is 4N^2 at q = 1.
  for (int N = 3; N <= 5; ++N) CHECK(count(web_of("curl_lhs"), N) == static_cast<std::uint64_t>(4 * N * N));
}

TEST_CASE("partial enumeration covers the whole space") {
  const Web w = web_of("pentagon_1_lhs");
  ColoringSearch s(w, 4);
  std::uint64_t total = 0;
  for (int r = 0; r < s.root_choices(); ++r)
    s.run([&](const Coloring &) { return ++total, true; }, {r});
  CHECK(total == count(w, 4));
  std::uint64_t seen = 0;
  s.run([&](const Coloring &) { return ++seen < 3; });
  CHECK(seen == 3);
}
