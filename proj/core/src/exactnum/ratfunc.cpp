#include "cadef/exactnum/ratfunc.hpp"

#include "cadef/error.hpp"

namespace cadef {

RatFunc::RatFunc(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  UniPoly g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  Rational lc = den_.leading().inverse();
  num_ = num_.scaled(lc);
  den_ = den_.scaled(lc);
}

Rational RatFunc::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (d.is_zero()) {
    throw Error(ErrorCode::PoleAtEvaluationPoint, "denominator " + den_.to_string() + " vanishes at " + at.to_string());
  }
  return num_.eval(at) / d;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, UniPoly(1), RatFunc::Reduced{});
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.is_one()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

Rational ratfunc_eval(const RatFunc& f, const Rational& at) { return f.eval(at); }

}  // namespace cadef
