#include "cadef/exactnum/unipoly.hpp"

#include <algorithm>

#include "cadef/error.hpp"

namespace cadef {

UniPoly::UniPoly(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& UniPoly::leading() const {
  static const Rational zero;
  return coeffs_.empty() ? zero : coeffs_.back();
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(std::int64_t(i));
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

UniPoly UniPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  UniPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

UniPoly UniPoly::operator-() const { return scaled(Rational(-1)); }

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.coeffs_.size() == 1) return b.scaled(a.coeffs_[0]);
  if (b.coeffs_.size() == 1) return a.scaled(b.coeffs_[0]);
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[std::size_t(i)];
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = mag.is_one();
    if (i == 0 || !unit) {
      out += mag.to_string();
      if (i != 0) out += "*";
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo(std::size_t(a.degree() - b.degree() + 1));
  const auto& bc = b.coefficients();
  Rational lead_inv = b.leading().inverse();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Rational& top = rem[std::size_t(i + b.degree())];
    if (top.is_zero()) continue;
    Rational q = top * lead_inv;
    quo[std::size_t(i)] = q;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[std::size_t(i) + j] -= q * bc[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly result(1);
  UniPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

BezoutResult xgcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::ZeroInput, "gcd of two zero polynomials");
  UniPoly r0 = p, r1 = q;
  UniPoly s0(1), s1;
  UniPoly t0, t1(1);
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    UniPoly s2 = s0 - quo * s1;
    UniPoly t2 = t0 - quo * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = r0.leading().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::ZeroInput, "gcd of two zero polynomials");
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree part of zero");
  if (p.degree() == 0) return UniPoly(1);
  return (p / gcd(p, p.derivative())).monic();
}

}  // namespace cadef
