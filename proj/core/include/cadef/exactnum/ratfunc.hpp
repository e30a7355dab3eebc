#pragma once

#include <string>

#include "cadef/exactnum/unipoly.hpp"

namespace cadef {

/// Element of Q(t), kept reduced with a monic denominator. Evaluation uses
/// the stored reduced form only.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(std::int64_t c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const UniPoly& p) : num_(p), den_(1) {}    // NOLINT(google-explicit-constructor)
  RatFunc(const UniPoly& num, const UniPoly& den);

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// Throws PoleAtEvaluationPoint when the reduced denominator vanishes.
  Rational eval(const Rational& at) const;
  RatFunc inverse() const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  struct Reduced {};
  RatFunc(UniPoly num, UniPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  UniPoly num_;
  UniPoly den_;
};

Rational ratfunc_eval(const RatFunc& f, const Rational& at);

}  // namespace cadef
