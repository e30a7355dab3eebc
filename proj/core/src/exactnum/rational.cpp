#include "cadef/exactnum/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "cadef/error.hpp"

namespace cadef {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  std::uint64_t x = a < 0 ? 0 - std::uint64_t(a) : std::uint64_t(a);
  std::uint64_t y = b < 0 ? 0 - std::uint64_t(b) : std::uint64_t(b);
  while (y != 0) {
    std::uint64_t r = x % y;
    x = y;
    y = r;
  }
  return std::int64_t(x);
}

bool fits(i128 v) { return v > i128(kMin) && v <= i128(kMax); }

mpz_class mpz_from_u128(u128 v) {
  mpz_class z;
  std::uint64_t words[2] = {std::uint64_t(v), std::uint64_t(v >> 64)};
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  return z;
}

mpz_class mpz_from_i128(i128 v) {
  mpz_class z = mpz_from_u128(uabs(v));
  if (v < 0) z = -z;
  return z;
}

mpz_class mpz_from_i64(std::int64_t v) {
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    return mpz_class(static_cast<long>(v));
  }
  return mpz_from_i128(v);
}

bool mpz_to_i64(const mpz_class& z, std::int64_t& out) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) return false;
  long v = z.get_si();
  if (v == kMin) return false;
  out = v;
  return true;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { *this = canonical(q); }

Rational::Rational(const mpz_class& z) { *this = canonical(mpq_class(z)); }

Rational Rational::canonical(mpq_class q) {
  q.canonicalize();
  Rational r;
  std::int64_t n = 0;
  std::int64_t d = 0;
  if (mpz_to_i64(q.get_num(), n) && mpz_to_i64(q.get_den(), d)) {
    r.num_ = n;
    r.den_ = d;
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  u128 g = gcd128(uabs(n), u128(d));
  if (g > 1) {
    n /= i128(g);
    d /= i128(g);
  }
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = std::int64_t(n);
    r.den_ = std::int64_t(d);
    return r;
  }
  Rational r;
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw SyntaxError(ErrorCode::SyntaxError, b, "empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& p, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !p.empty() && (p[0] == '-' || p[0] == '+')) i = 1;
    if (i >= p.size()) return false;
    for (; i < p.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(p[i]))) return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw SyntaxError(ErrorCode::SyntaxError, b, "malformed rational '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class nz(num, 10);
  mpz_class dz(den, 10);
  if (dz == 0) throw SyntaxError(ErrorCode::DivisionByZero, b, "zero denominator");
  return Rational(mpq_class(nz, dz));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(num_); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(den_); }

std::string Rational::to_string() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const { return big_ ? big_->get_d() : double(num_) / double(den_); }

Rational Rational::operator-() const {
  if (big_) return canonical(-*big_);
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (big_) return canonical(1 / *big_);
  return from_i128(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s = 0;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != kMin) {
        Rational r;
        r.num_ = s;
        return r;
      }
      return Rational::from_i128(i128(a.num_) + b.num_, 1);
    }
    if (a.den_ == b.den_) return Rational::from_i128(i128(a.num_) + b.num_, a.den_);
    return Rational::from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  return Rational::canonical(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t p = 0;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != kMin) {
        Rational r;
        r.num_ = p;
        return r;
      }
      return Rational::from_i128(i128(a.num_) * b.num_, 1);
    }
    std::int64_t g1 = gcd64(a.num_, b.den_);
    std::int64_t g2 = gcd64(b.num_, a.den_);
    i128 n = i128(a.num_ / g1) * (b.num_ / g2);
    i128 d = i128(a.den_ / g2) * (b.den_ / g1);
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = std::int64_t(n);
      r.den_ = std::int64_t(d);
      return r;
    }
    return Rational::from_i128(n, d);
  }
  return Rational::canonical(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical form: a big value never equals a small one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(to_string());
  std::size_t h = std::hash<std::int64_t>{}(num_);
  return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace cadef
