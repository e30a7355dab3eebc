#include <doctest.h>

#include <random>

#include "cadef/exactnum/matrix.hpp"
#include "cadef/exactnum/ratfunc.hpp"
#include "cadef/exactnum/unipoly.hpp"

using namespace cadef;

namespace {

UniPoly poly(std::initializer_list<std::int64_t> c) {
  std::vector<Rational> v;
  for (auto x : c) v.emplace_back(x);
  return UniPoly(v);
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical across the int64 boundary") {
  Rational big = Rational(std::int64_t(1) << 62);
  Rational sq = big * big;
  CHECK(!sq.is_small());
  CHECK(sq / big == big);
  CHECK((sq / big).is_small());
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational::parse(" -3/6 ") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational field axioms on random values") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> d(-1'000'000'007, 1'000'000'007);
  for (int i = 0; i < 200; ++i) {
    Rational a(d(rng), 1 + (d(rng) & 0xffff)), b(d(rng), 1 + (d(rng) & 0xffff)), c(d(rng), 7);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("gcd with Bezout cofactors") {
  auto g = gcd(poly({-1, 0, 1}), poly({-1, 1}));
  CHECK(g == poly({-1, 1}));
  CHECK(gcd(poly({1, 0, 1}), poly({-1, 0, 1})) == poly({1}));
  CHECK(gcd(poly({2, 4}), UniPoly()) == UniPoly(std::vector<Rational>{Rational(1, 2), Rational(1)}));
  CHECK_THROWS_AS(gcd(UniPoly(), UniPoly()), Error);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> d(-9, 9);
  for (int i = 0; i < 50; ++i) {
    UniPoly p = poly({d(rng), d(rng), d(rng), 1});
    UniPoly q = poly({d(rng), d(rng), 1});
    auto r = xgcd(p, q);
    CHECK(r.u * p + r.v * q == r.gcd);
    CHECK((p % r.gcd).is_zero());
    CHECK((q % r.gcd).is_zero());
  }
}

TEST_CASE("rational function evaluation") {
  CHECK(RatFunc(poly({-1, 0, 1})).eval(2) == Rational(3));
  CHECK_THROWS_AS(RatFunc(poly({1}), poly({0, 1})).eval(0), Error);
  RatFunc f(poly({-1, 0, 1}), poly({-1, 1}));
  CHECK(f.denominator() == poly({1}));
  CHECK(f.eval(1) == Rational(2));
}

TEST_CASE("rank plus nullity equals columns") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng) * (d(rng) != 0));
    auto ker = mat_kernel(m);
    CHECK(mat_rank(m) + ker.size() == c);
    for (const auto& v : ker) {
      for (std::size_t i = 0; i < r; ++i) {
        Rational s;
        for (std::size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("sparse rank agrees with dense rank") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 6, c = 5;
    QMatrix m(r, c);
    std::vector<SparseRow> rows(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        int v = d(rng) > 1 ? d(rng) : 0;
        m(i, j) = Rational(v);
        if (v) rows[i].emplace_back(std::uint32_t(j), Rational(v));
      }
    CHECK(sparse_rank(rows, c) == mat_rank(m));
  }
}

TEST_CASE("specialised rank never exceeds the generic rank") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<RatFunc> m(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = RatFunc(poly({d(rng), d(rng)}));
    std::size_t generic = mat_rank(m);
    std::size_t equal = 0;
    for (int at = 3; at < 10; ++at) {
      std::size_t r = mat_rank(evaluate(m, Rational(at)));
      CHECK(r <= generic);
      equal += r == generic;
    }
    CHECK(equal >= 5);
  }
}
