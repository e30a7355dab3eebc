#include "cadef/wedderburn/factor.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <random>

#include "cadef/error.hpp"

namespace cadef {
namespace {

constexpr int kMaxDegree = 64;

// ---- polynomials over Z/p, p a small odd prime, low degree first ----

using ModPoly = std::vector<std::int64_t>;

struct Fp {
  std::int64_t p;

  std::int64_t norm(std::int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t r = 1, b = norm(a), e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = norm((i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0));
    trim(r);
    return r;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
    if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero mod p");
    if (a.size() < b.size()) return {{}, a};
    ModPoly q(a.size() - b.size() + 1);
    std::int64_t li = inv(b.back());
    for (std::size_t k = q.size(); k-- > 0;) {
      std::int64_t c = a[k + b.size() - 1] * li % p;
      q[k] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = norm(a[k + j] - c * b[j]);
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    std::int64_t li = inv(a.back());
    for (auto& c : a) c = c * li % p;
    return a;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s, t with s a + t b = gcd(a, b) (monic)
  void xgcd(const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s, ModPoly& t) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    std::int64_t li = inv(r0.back());
    auto scale = [&](ModPoly v) {
      for (auto& c : v) c = c * li % p;
      return v;
    };
    g = scale(r0);
    s = scale(s0);
    t = scale(t0);
  }
  ModPoly powmod(ModPoly base, const mpz_class& e, const ModPoly& m) const {
    ModPoly r{1};
    base = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }
  ModPoly derivative(const ModPoly& a) const {
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(norm(std::int64_t(i) * a[i]));
    trim(r);
    return r;
  }
};

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, int>> ddf(const Fp& F, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly x{0, 1};
  ModPoly h = x;
  int i = 1;
  while (int(f.size()) - 1 >= 2 * i) {
    h = F.powmod(h, mpz_class(F.p), f);
    ModPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      out.emplace_back(g, i);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
    ++i;
  }
  if (f.size() > 1) out.emplace_back(f, int(f.size()) - 1);
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus), deterministic seed.
void edf(const Fp& F, const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  int n = int(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), std::uint64_t(F.p), std::uint64_t(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::int64_t> dist(0, F.p - 1);
  while (true) {
    ModPoly a(std::size_t(n), 0);
    for (auto& c : a) c = dist(rng);
    Fp::trim(a);
    if (a.size() < 2) continue;
    ModPoly b = F.powmod(a, e, g);
    b = F.sub(b, ModPoly{1});
    ModPoly h = F.gcd(b, g);
    if (h.size() > 1 && h.size() < g.size()) {
      edf(F, h, d, rng, out);
      edf(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

// ---- integer polynomials ----

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

// symmetric residue mod m
mpz_class smod(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

ZPoly zmod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) c = smod(c, m);
  ztrim(a);
  return a;
}

ModPoly to_mod(const ZPoly& a, const Fp& F) {
  ModPoly r;
  for (const auto& c : a) {
    mpz_class v = c % F.p;
    r.push_back(F.norm(v.get_si()));
  }
  Fp::trim(r);
  return r;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<long>(c));
  return r;
}

UniPoly to_unipoly(const ZPoly& a) {
  std::vector<Rational> cs;
  for (const auto& c : a) cs.emplace_back(c);
  return UniPoly(cs);
}

// Primitive integer polynomial proportional to a rational one, positive lead.
ZPoly primitive_integer(const UniPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) l = lcm(l, c.denominator());
  ZPoly r;
  for (const auto& c : p.coefficients()) r.push_back(c.numerator() * (l / c.denominator()));
  mpz_class g = 0;
  for (const auto& c : r) g = gcd(g, c);
  if (r.back() < 0) g = -g;
  for (auto& c : r) c /= g;
  return r;
}

ZPoly primitive_part(ZPoly a) {
  mpz_class g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact division over Z; returns false if b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  ZPoly r = a;
  if (r.size() < b.size()) return false;
  q.assign(r.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class c = r[k + b.size() - 1];
    if (c % b.back() != 0) return false;
    c /= b.back();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  ztrim(r);
  ztrim(q);
  return r.empty();
}

// One two-factor linear Hensel lift of f = g h from mod p to mod p^k.
// g monic; s g + t h = 1 mod p.
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, const Fp& F, int k) {
  ModPoly gm = to_mod(g, F), hm = to_mod(h, F), gg, s, t;
  F.xgcd(gm, hm, gg, s, t);
  mpz_class m = F.p;
  for (int step = 1; step < k; ++step) {
    ZPoly diff = f;
    ZPoly gh = zmul(g, h);
    diff.resize(std::max(diff.size(), gh.size()), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    ztrim(diff);
    for (auto& c : diff) c /= m;  // exact
    ModPoly e = to_mod(diff, F);
    auto [q, r] = F.divmod(F.mul(t, e), gm);
    // h correction s e + q h
    ModPoly tmp = F.mul(s, e);
    ModPoly qh = F.mul(q, hm);
    tmp.resize(std::max(tmp.size(), qh.size()), 0);
    for (std::size_t i = 0; i < qh.size(); ++i) tmp[i] = (tmp[i] + qh[i]) % F.p;
    Fp::trim(tmp);
    ZPoly rz = from_mod(r), hz = from_mod(tmp);
    g.resize(std::max(g.size(), rz.size()), 0);
    for (std::size_t i = 0; i < rz.size(); ++i) g[i] += m * rz[i];
    h.resize(std::max(h.size(), hz.size()), 0);
    for (std::size_t i = 0; i < hz.size(); ++i) h[i] += m * hz[i];
    m *= F.p;
    g = zmod(g, m);
    h = zmod(h, m);
  }
}

// Lifts f = lc * prod(factors) mod p to mod p^k; returns monic lifts.
void hensel_multi(const ZPoly& f, const std::vector<ModPoly>& factors, const Fp& F, int k, const mpz_class& pk,
                  std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    mpz_class inv;
    mpz_class lc = f.back();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    ZPoly g = f;
    for (auto& c : g) c = smod(c * inv, pk);
    out.push_back(g);
    return;
  }
  std::size_t half = factors.size() / 2;
  ModPoly gm{1}, hm{F.norm(mpz_class(f.back() % F.p).get_si())};
  for (std::size_t i = 0; i < half; ++i) gm = F.mul(gm, factors[i]);
  for (std::size_t i = half; i < factors.size(); ++i) hm = F.mul(hm, factors[i]);
  ZPoly g = from_mod(gm), h = from_mod(hm);
  hensel_pair(f, g, h, F, k);
  std::vector<ModPoly> left(factors.begin(), factors.begin() + std::ptrdiff_t(half));
  std::vector<ModPoly> right(factors.begin() + std::ptrdiff_t(half), factors.end());
  hensel_multi(g, left, F, k, pk, out);
  hensel_multi(h, right, F, k, pk, out);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Factors a primitive squarefree integer polynomial of degree >= 1.
std::vector<ZPoly> factor_squarefree_integer(ZPoly f) {
  int n = int(f.size()) - 1;
  if (n <= 1) return {f};
  // Choose among several good primes the one with fewest modular factors.
  std::int64_t best_p = 0;
  std::size_t best_count = SIZE_MAX;
  int tried = 0;
  for (std::int64_t p = 3; tried < 6 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    if (f.back() % p == 0) continue;
    Fp F{p};
    ModPoly fm = F.monic(to_mod(f, F));
    if (F.gcd(fm, F.derivative(fm)).size() != 1) continue;
    ++tried;
    std::size_t count = 0;
    for (const auto& [g, d] : ddf(F, fm)) count += (g.size() - 1) / std::size_t(d);
    if (count < best_count) {
      best_count = count;
      best_p = p;
    }
    if (count == 1) return {f};
  }
  Fp F{best_p};
  ModPoly fm = F.monic(to_mod(f, F));
  std::mt19937_64 rng(0x5eed);
  std::vector<ModPoly> modular;
  for (const auto& [g, d] : ddf(F, fm)) edf(F, g, d, rng, modular);
  std::sort(modular.begin(), modular.end());

  // Coefficient bound for factors (times the leading coefficient).
  mpz_class maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, mpz_class(abs(c)));
  mpz_class bound = mpz_class(abs(f.back())) * maxc * (n + 1);
  bound <<= n;
  bound *= 2;
  int k = 1;
  mpz_class pk = best_p;
  while (pk <= bound) {
    pk *= best_p;
    ++k;
  }
  std::vector<ZPoly> lifted;
  hensel_multi(f, modular, F, k, pk, lifted);

  std::vector<ZPoly> result;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly g{f.back()};
      for (auto i : idx) g = zmod(zmul(g, lifted[i]), pk);
      g = primitive_part(g);
      ZPoly q;
      if (zdivides(f, g, q)) {
        result.push_back(g);
        f = q;
        for (std::size_t j = s; j-- > 0;) lifted.erase(lifted.begin() + std::ptrdiff_t(idx[j]));
        found = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (f.size() > 1) result.push_back(primitive_part(f));
  return result;
}

bool factor_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto ca = a.coeff(std::size_t(i)), cb = b.coeff(std::size_t(i));
    if (!(ca == cb)) return ca < cb;
  }
  return false;
}

}  // namespace

UniPoly IrreducibleFactorization::expand() const {
  UniPoly r(constant);
  for (const auto& [f, m] : factors) r = r * pow(f, m);
  return r;
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  if (p.degree() <= 0) return out;
  UniPoly f = p.monic();
  UniPoly fp = f.derivative();
  UniPoly b = gcd(f, fp);
  UniPoly c = f / b;
  UniPoly d = fp / b - c.derivative();
  unsigned i = 1;
  while (c.degree() > 0) {
    UniPoly a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    c = c / a;
    d = d / a - c.derivative();
    ++i;
  }
  return out;
}

IrreducibleFactorization factor_poly_rational(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "cannot factor the zero polynomial");
  if (p.degree() > kMaxDegree)
    throw Error(ErrorCode::OutOfRange, "degree " + std::to_string(p.degree()) + " exceeds factorization cap");
  IrreducibleFactorization out;
  out.constant = p.leading();
  for (const auto& [a, mult] : squarefree_decomposition(p)) {
    for (const auto& g : factor_squarefree_integer(primitive_integer(a)))
      out.factors.emplace_back(to_unipoly(g).monic(), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return factor_less(x.first, y.first); });
  return out;
}

}  // namespace cadef
