#include "dweb/evaluate.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>

using namespace dweb;
using dweb::test::web_of;

TEST_CASE("closed forms") {
  for (int N = 2; N <= 6; ++N) {
    INFO(N);
    CHECK(evaluate_poly(web_of("circle_v"), N) == test::circle_v_value(N));
    for (const char *n : {"circle_e", "circle_e_rev", "circle_o", "circle_o_rev"}) CHECK(evaluate_poly(web_of(n), N) == test::circle_spin_value(N));
    CHECK(evaluate_poly(web_of("theta"), N) == test::theta_value(N));
    CHECK(evaluate_poly(web_of("empty"), N) == LaurentPoly(1));
  }
  CHECK(evaluate_poly(web_of("circle_v"), 3).to_string() == "q^4 + q^2 + 2 + q^-2 + q^-4");
}

TEST_CASE("histogram matches the polynomial") {
  const Evaluation ev = evaluate(web_of("gweb_theta_sing2"), 4, {.threads = 1, .use_cache = false});
  LaurentPoly p;
  std::uint64_t total = 0;
  for (const auto &[d, n] : ev.histogram) {
    total += n;
    p += LaurentPoly::monomial(d, n);
  }
  CHECK(total == ev.coloring_count);
  CHECK(ev.poly == p);
}

TEST_CASE("thread count does not change the result") {
  const Web w = web_of("gweb_sing_zigzag");
  const auto one = evaluate(w, 4, {.threads = 1, .use_cache = false});
  const auto many = evaluate(w, 4, {.threads = 8, .use_cache = false});
  CHECK(one.poly == many.poly);
  CHECK(one.histogram == many.histogram);
}

TEST_CASE("positivity and bar symmetry") {
  for (const auto &n : test::crossing_free_builtins()) {
    const Web w = web_of(n);
    if (w.edges.size() > 8) continue;
    INFO(n);
    const auto p = evaluate_poly(w, 3);
    CHECK(p.all_nonnegative());
    CHECK(bar(p) == p);
  }
}

TEST_CASE("cache persists to disk") {
  const auto dir = std::filesystem::temp_directory_path() / "dweb_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv(kCacheDirEnv, dir.c_str(), 1);
  EvalCache::instance().clear();
  const Web w = web_of("theta");
  const auto first = evaluate_poly(w, 5);
  CHECK(EvalCache::instance().size() >= 1);
  CHECK_FALSE(std::filesystem::is_empty(dir));
  EvalCache::instance().clear();
  CHECK(evaluate_poly(w, 5) == first);
  ::unsetenv(kCacheDirEnv);
  std::filesystem::remove_all(dir);
}
