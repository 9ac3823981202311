#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dweb {

using BigInt = boost::multiprecision::cpp_int;

/// Raised by negate_q on a polynomial with a genuine q^{1/2} term.
struct HalfIntegerExponent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by exact_div when the divisor does not divide the dividend.
struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sparse Laurent polynomial in q^{1/2} with big-integer coefficients.
/// Keys count half-units: key k stands for q^{k/2}.
class LaurentPoly {
public:
  using Terms = std::map<std::int64_t, BigInt>;

  LaurentPoly() = default;
  /// Constant polynomial.
  LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)

  /// c * q^{half/2}.
  static LaurentPoly monomial_half(std::int64_t half, BigInt c = 1);
  /// c * q^{e}.
  static LaurentPoly monomial(std::int64_t e, BigInt c = 1) { return monomial_half(2 * e, std::move(c)); }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_half_exponent() const;
  bool all_nonnegative() const;
  /// Coefficient of q^{half/2}.
  BigInt coeff_half(std::int64_t half) const;

  LaurentPoly &operator+=(const LaurentPoly &o);
  LaurentPoly &operator-=(const LaurentPoly &o);
  LaurentPoly &operator*=(const LaurentPoly &o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly &a, const LaurentPoly &b) { return !(a == b); }

  /// Adds c * q^{half/2} in place.
  void add_term_half(std::int64_t half, const BigInt &c);

  /// Human-readable form, e.g. "q^4 + q^2 + 2 + q^-2 + q^-4".
  std::string to_string() const;
  /// Pairs (2*exponent, coefficient) sorted by exponent.
  std::vector<std::pair<std::int64_t, BigInt>> to_pairs() const;
  static LaurentPoly from_pairs(const std::vector<std::pair<std::int64_t, BigInt>> &pairs);

private:
  Terms terms_;
};

/// Quantum integer [k] = sum_{i=0}^{k-1} q^{k-1-2i}.
LaurentPoly qint(int k);
/// [2]^{[k]} = prod_{i=1}^k (q^i + q^{-i}).
LaurentPoly qtwo_bracket(int k);

enum class ArithOp { add, sub, mul };
LaurentPoly arith(const LaurentPoly &a, const LaurentPoly &b, ArithOp op);

/// q -> q^{-1}.
LaurentPoly bar(const LaurentPoly &a);
/// q -> -q; throws HalfIntegerExponent on q^{1/2} terms.
LaurentPoly negate_q(const LaurentPoly &a);
/// c with c*b == a; throws NotDivisible otherwise.
LaurentPoly exact_div(const LaurentPoly &a, const LaurentPoly &b);

/// q^{e}.
inline LaurentPoly qpow(std::int64_t e) { return LaurentPoly::monomial(e); }
/// q^{half/2}.
inline LaurentPoly qpow_half(std::int64_t half) { return LaurentPoly::monomial_half(half); }

}  // namespace dweb
