#include "dweb/poly.hpp"

#include <catch_amalgamated.hpp>

using namespace dweb;

TEST_CASE("quantum integers") {
  CHECK(qint(1) == LaurentPoly(1));
  CHECK(qint(3).to_string() == "q^2 + 1 + q^-2");
  CHECK(qint(4).to_string() == "q^3 + q + q^-1 + q^-3");
  // [k] (q - q^-1) = q^k - q^-k
  for (int k = 1; k <= 7; ++k) CHECK(qint(k) * (qpow(1) - qpow(-1)) == qpow(k) - qpow(-k));
}

TEST_CASE("two bracket") {
  CHECK(qtwo_bracket(0) == LaurentPoly(1));
  CHECK(qtwo_bracket(1).to_string() == "q + q^-1");
  CHECK(qtwo_bracket(2).to_string() == "q^3 + q + q^-1 + q^-3");
}

TEST_CASE("formatting") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((qint(5) + LaurentPoly(1)).to_string() == "q^4 + q^2 + 2 + q^-2 + q^-4");
  CHECK((-qpow(1) + LaurentPoly(3)).to_string() == "-q + 3");
  CHECK(qpow_half(3).to_string() == "q^(3/2)");
  CHECK(LaurentPoly::monomial(-2, 5).to_string() == "5q^-2");
}

TEST_CASE("arithmetic") {
  const LaurentPoly a = qpow(2) + LaurentPoly(1);
  const LaurentPoly b = qpow(-1) - LaurentPoly(2);
  CHECK(a + b == arith(a, b, ArithOp::add));
  CHECK(a - b == arith(a, b, ArithOp::sub));
  CHECK(a * b == arith(a, b, ArithOp::mul));
  CHECK(a * b == qpow(1) - LaurentPoly(2) * qpow(2) + qpow(-1) - LaurentPoly(2));
  CHECK((a - a).is_zero());
  CHECK(qpow_half(1) * qpow_half(1) == qpow(1));
}

TEST_CASE("big coefficients") {
  BigInt big = 1;
  big <<= 100;
  const auto p = LaurentPoly::monomial(1, big);
  CHECK((p * p).coeff_half(4) == big * big);
  CHECK(LaurentPoly::from_pairs(p.to_pairs()) == p);
}

TEST_CASE("bar and negate") {
  const LaurentPoly p = qpow(3) + LaurentPoly(2) * qpow(-1);
  CHECK(bar(p) == qpow(-3) + LaurentPoly(2) * qpow(1));
  CHECK(bar(bar(p)) == p);
  CHECK(negate_q(p) == -qpow(3) - LaurentPoly(2) * qpow(-1));
  CHECK(negate_q(negate_q(p)) == p);
  CHECK_THROWS_AS(negate_q(qpow_half(1)), HalfIntegerExponent);
}

TEST_CASE("exact division") {
  const LaurentPoly a = qint(6);
  CHECK(exact_div(a, qint(2)) == qpow(4) + LaurentPoly(1) + qpow(-4));
  CHECK(exact_div(a * qint(3), qint(3)) == a);
  CHECK_THROWS_AS(exact_div(qint(3), qint(2)), NotDivisible);
  CHECK_THROWS(exact_div(a, LaurentPoly()));
}

TEST_CASE("pairs round trip") {
  const LaurentPoly p = qint(5) + qpow_half(-3);
  const auto pairs = p.to_pairs();
  REQUIRE(pairs.front().first == -8);
  CHECK(LaurentPoly::from_pairs(pairs) == p);
  CHECK(p.has_half_exponent());
  CHECK(qint(5).all_nonnegative());
  CHECK_FALSE((qint(5) - LaurentPoly(2)).all_nonnegative());
}
