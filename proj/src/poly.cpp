#include "dweb/poly.hpp"

#include <sstream>

namespace dweb {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial_half(std::int64_t half, BigInt c) {
  LaurentPoly p;
  if (c != 0) p.terms_[half] = std::move(c);
  return p;
}

bool LaurentPoly::has_half_exponent() const {
  for (const auto &[k, c] : terms_)
    if (k % 2 != 0) return true;
  return false;
}

bool LaurentPoly::all_nonnegative() const {
  for (const auto &[k, c] : terms_)
    if (c < 0) return false;
  return true;
}

BigInt LaurentPoly::coeff_half(std::int64_t half) const {
  auto it = terms_.find(half);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term_half(std::int64_t half, const BigInt &c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(half, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
  for (const auto &[k, c] : o.terms_) add_term_half(k, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
  for (const auto &[k, c] : o.terms_) add_term_half(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  LaurentPoly r;
  for (const auto &[ka, ca] : a.terms_)
    for (const auto &[kb, cb] : b.terms_) r.add_term_half(ka + kb, ca * cb);
  return r;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto &[k, c] : r.terms_) c = -c;
  return r;
}

static std::string exponent_text(std::int64_t half) {
  if (half % 2 == 0) return std::to_string(half / 2);
  return "(" + std::to_string(half) + "/2)";
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto half = it->first;
    BigInt c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (half == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << "q";
    if (half != 2) os << "^" << exponent_text(half);
  }
  return os.str();
}

std::vector<std::pair<std::int64_t, BigInt>> LaurentPoly::to_pairs() const {
  return {terms_.begin(), terms_.end()};
}

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<std::int64_t, BigInt>> &pairs) {
  LaurentPoly p;
  for (const auto &[k, c] : pairs) p.add_term_half(k, c);
  return p;
}

LaurentPoly qint(int k) {
  if (k < 0) throw std::invalid_argument("qint: negative argument");
  LaurentPoly r;
  for (int i = 0; i < k; ++i) r.add_term_half(2 * (k - 1 - 2 * i), 1);
  return r;
}

LaurentPoly qtwo_bracket(int k) {
  if (k < 0) throw std::invalid_argument("qtwo_bracket: negative argument");
  LaurentPoly r(1);
  for (int i = 1; i <= k; ++i) r *= qpow(i) + qpow(-i);
  return r;
}

LaurentPoly arith(const LaurentPoly &a, const LaurentPoly &b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  return {};
}

LaurentPoly bar(const LaurentPoly &a) {
  LaurentPoly r;
  for (const auto &[k, c] : a.terms()) r.add_term_half(-k, c);
  return r;
}

LaurentPoly negate_q(const LaurentPoly &a) {
  if (a.has_half_exponent()) throw HalfIntegerExponent("negate_q: polynomial has a q^(1/2) term");
  LaurentPoly r;
  for (const auto &[k, c] : a.terms()) r.add_term_half(k, (k / 2) % 2 == 0 ? c : BigInt(-c));
  return r;
}

LaurentPoly exact_div(const LaurentPoly &a, const LaurentPoly &b) {
  if (b.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  // Long division from the top degree; both are finite Laurent polynomials.
  const auto &bt = b.terms();
  const auto b_top = bt.rbegin()->first;
  const auto b_low = bt.begin()->first;
  const BigInt lead = bt.rbegin()->second;
  LaurentPoly rem = a;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const auto r_top = rem.terms().rbegin()->first;
    const auto r_low = rem.terms().begin()->first;
    if (r_top - b_top < r_low - b_low) throw NotDivisible("exact_div: remainder does not vanish");
    const BigInt &rc = rem.terms().rbegin()->second;
    if (rc % lead != 0) throw NotDivisible("exact_div: non-integral quotient coefficient");
    const auto qk = r_top - b_top;
    LaurentPoly step = LaurentPoly::monomial_half(qk, rc / lead);
    quot += step;
    rem -= step * b;
  }
  return quot;
}

}  // namespace dweb
