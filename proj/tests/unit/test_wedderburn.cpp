#include <doctest.h>

#include <random>

#include "cadef/families/family.hpp"
#include "cadef/families/presentation.hpp"
#include "cadef/wedderburn/factor.hpp"
#include "cadef/wedderburn/wedderburn.hpp"
#include "support.hpp"

using namespace cadef;
using namespace testsupport;

namespace {

UniPoly poly(std::initializer_list<std::int64_t> c) {
  std::vector<Rational> v;
  for (auto x : c) v.emplace_back(x);
  return UniPoly(v);
}

bool is_ideal_square_zero(const FDAlgebra& A, const std::vector<Element>& span) {
  for (const auto& a : span)
    for (const auto& b : span)
      if (A.multiply(a, b) != A.zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("factorization over the rationals") {
  auto f = factor_poly_rational(poly({4, 0, -5, 0, 1}));  // (t^2-1)(t^2-4)
  CHECK(f.factors.size() == 4);
  CHECK(f.expand() == poly({4, 0, -5, 0, 1}));

  auto g = factor_poly_rational(poly({-2, 0, 1}) * poly({-2, 0, 1}) * poly({1, 1}));
  CHECK(g.factors.size() == 2);
  CHECK(g.expand() == poly({-2, 0, 1}) * poly({-2, 0, 1}) * poly({1, 1}));

  // x^4 + 1 is irreducible over Q but splits modulo every prime.
  CHECK(factor_poly_rational(poly({1, 0, 0, 0, 1})).factors.size() == 1);
  CHECK_THROWS_AS(factor_poly_rational(UniPoly()), Error);

  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int i = 0; i < 25; ++i) {
    UniPoly p = poly({d(rng), d(rng), 1}) * poly({d(rng), 1}) * poly({d(rng), d(rng), d(rng), 2});
    if (p.is_zero()) continue;
    auto r = factor_poly_rational(p);
    CHECK(r.expand() == p);
    for (const auto& [q, m] : r.factors) CHECK(factor_poly_rational(q).factors.size() == 1);
  }
}

TEST_CASE("radical") {
  CHECK(radical(m2_presentation().algebra()).dim() == 0);
  FDAlgebra a2 = fiber(builtin_family("a2"), Rational(4));
  auto rad = radical(a2);
  CHECK(rad.dim() == 2);
  CHECK(is_ideal_square_zero(a2, rad.basis));
  std::vector<Element> yxy{basis_of(a2, "y"), basis_of(a2, "x*y")};
  CHECK(is_ideal_square_zero(a2, yxy));
  CHECK(semisimple_quotient(a2).dim() == 4);
  CHECK(radical(semisimple_quotient(a2)).dim() == 0);
}

TEST_CASE("central primitive idempotents") {
  CHECK(central_primitive_idempotents(m2_presentation().algebra()).size() == 1);
  FDAlgebra S = semisimple_quotient(fiber(builtin_family("a2"), Rational(4)));
  auto es = central_primitive_idempotents(S);
  CHECK(es.size() == 4);
  Element sum = S.zero();
  for (std::size_t i = 0; i < es.size(); ++i) {
    CHECK(S.multiply(es[i], es[i]) == es[i]);
    CHECK(is_central(S, es[i]));
    for (std::size_t j = 0; j < i; ++j) CHECK(S.multiply(es[i], es[j]) == S.zero());
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += es[i][k];
  }
  CHECK(sum == S.unit());
}

TEST_CASE("central splitting of a non-semisimple algebra") {
  FDAlgebra A = d_presentation(2, 2).algebra();
  CHECK(central_splitting(A).idempotents.size() == 1);
  FDAlgebra B = fiber(builtin_family("induction", {2, 2, 1}), Rational(2));
  auto cs = central_splitting(B);
  std::size_t total = 0;
  for (const auto& e : cs.idempotents) total += corner_algebra(B, e).algebra.dim();
  CHECK(total == B.dim());
}

TEST_CASE("geometric type") {
  CHECK(geometric_type(m2_presentation().algebra()) == GeometricType::parse("{2:1}"));
  CHECK(geometric_type(matrix_algebra()) == GeometricType::parse("{2:1}"));
  FDAlgebra dn1 = fiber(builtin_family("dn1", {2}), Rational(1));
  CHECK(radical(dn1).dim() == 0);
  CHECK(geometric_type(dn1) == GeometricType::parse("{2:1, 1:2}"));
  Presentation quat("H", {"x", "y"}, {"x*y + y*x", "y^2 - 1", "x^2 + 1"}, 8);
  CHECK(quat.algebra().dim() == 4);
  CHECK(centre(quat.algebra()).dim() == 1);
  CHECK(geometric_type(quat.algebra()) == GeometricType::parse("{2:1}"));
  // Q(i) as a commutative field: one block, degree 2, size 1.
  Presentation gauss("Q(i)", {"x"}, {"x^2 + 1"}, 6);
  CHECK(geometric_type(gauss.algebra()) == GeometricType::parse("{1:2}"));
  CHECK(GeometricType::parse("{2:1, 1:4}").dim() == 8);
  CHECK(GeometricType::parse("{2:1, 1:4}").to_string() == "{2:1, 1:4}");
}
