#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cadef/exactnum/rational.hpp"

namespace cadef {

/// Univariate polynomial over the rationals; coefficient i multiplies t^i.
/// Trailing zeros are never stored, so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UniPoly(std::int64_t c) : UniPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly monomial(const Rational& c, std::size_t degree);
  static UniPoly t() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return int(coeffs_.size()) - 1; }
  const Rational& leading() const;
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  Rational constant_term() const { return coeff(0); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational eval(const Rational& at) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly scaled(const Rational& c) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Renders in the given variable, highest degree first, e.g. "t^2 - 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& base, unsigned exponent);

struct BezoutResult {
  UniPoly gcd;  // monic
  UniPoly u;
  UniPoly v;    // u*p + v*q == gcd
};

/// Monic gcd with Bezout cofactors. Throws ZeroInput if both are zero.
BezoutResult xgcd(const UniPoly& p, const UniPoly& q);
UniPoly gcd(const UniPoly& p, const UniPoly& q);

/// Squarefree part (product of distinct irreducible factors), monic.
UniPoly squarefree_part(const UniPoly& p);

}  // namespace cadef
