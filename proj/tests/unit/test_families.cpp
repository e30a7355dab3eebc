#include <doctest.h>

#include "cadef/families/evidence.hpp"
#include "cadef/ncgb/parse.hpp"
#include "support.hpp"

using namespace cadef;
using namespace testsupport;

namespace {

std::vector<std::size_t> block_dims(const FDAlgebra& A) {
  std::vector<std::size_t> out;
  for (const auto& b : fiber_blocks(A)) out.push_back(b.algebra.dim());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_zero(const Element& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.is_zero(); });
}

}  // namespace

TEST_CASE("families from relations") {
  PolyFamily P = builtin_family("parabola");
  CHECK(P.dim() == 2);
  std::size_t x = 1;
  CHECK(P.algebra.product(x, x) == PolyAlgebra::sparsify({UniPoly::t(), UniPoly()}));
  CHECK(builtin_family("a2").dim() == 6);
  PolyFamily I = builtin_family("induction", {2, 2, 1});
  CHECK(I.dim() == 8);
  for (const auto& name : builtin_family_names()) {
    FamilyParams p{3, 3, 1};
    PolyFamily F = builtin_family(name, p);
    CHECK_MESSAGE(verify_family(F), name);
  }
}

TEST_CASE("family mutation is detected") {
  PolyFamily F = builtin_family("a2");
  F.algebra = perturbed(F.algebra, 2, 3, 1, UniPoly::t());
  CHECK_FALSE(verify_family(F));
}

TEST_CASE("induction family at t = 0 has the D(2,2) standard basis") {
  PolyFamily I = builtin_family("induction", {2, 2, 1});
  REQUIRE(I.rules);
  auto at0 = I.rules->specialize(Rational(0));
  auto d22 = d_presentation(2, 2).completed();
  auto a = at0.leading_words(), b = d22.leading_words();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  for (const auto& r : at0.relations()) CHECK(ncgb::normal_form(r, d22).is_zero());
  for (const auto& r : d22.relations()) CHECK(ncgb::normal_form(r, at0).is_zero());
}

TEST_CASE("fibers") {
  PolyFamily P = builtin_family("parabola");
  FDAlgebra p1 = fiber(P, Rational(1));
  CHECK(radical(p1).dim() == 0);
  CHECK(geometric_type(p1) == GeometricType::parse("{1:2}"));
  CHECK(radical(fiber(P, Rational(0))).dim() == 1);

  FDAlgebra d1 = fiber(builtin_family("d1inf"), Rational(1));
  CHECK(d1.dim() == 3);
  CHECK(geometric_type(d1) == GeometricType::parse("{1:3}"));

  for (int n : {2, 3}) {
    PolyFamily F = builtin_family("dn1", {n});
    for (int at : {1, 2}) {
      FDAlgebra A = fiber(F, Rational(at));
      CHECK(radical(A).dim() == 0);
      GeometricType T;
      T.counts[2] = std::size_t(n - 1);
      T.counts[1] = 2;
      CHECK(geometric_type(A) == T);
    }
  }

  PolyFamily A2 = builtin_family("a2");
  CHECK(radical(fiber(A2, Rational(1))).dim() > 0);
  CHECK(fiber_from_rules(A2, Rational(4)).dim() == fiber(A2, Rational(4)).dim());
  CHECK(block_dims(fiber(builtin_family("induction", {2, 2, 1}), Rational(2))) ==
        std::vector<std::size_t>{1, 1, 6});
  CHECK(fiber(A2, Rational(4)).product(2, 3) == fiber_from_rules(A2, Rational(4)).product(2, 3));
}

TEST_CASE("dn1 special fiber is D(2,1)") {
  PolyFamily F = builtin_family("dn1", {2});
  FDAlgebra A0 = fiber(F, Rational(0));
  Presentation d21 = d_presentation(2, 1);
  GeneratorImageMap m{d21.completed(), {family_element(F, 0, "x"), family_element(F, 0, "y")}};
  CHECK(verify_algebra_map(m, A0).verdict == MapVerdict::Isomorphism);
}

TEST_CASE("shifted and product families") {
  PolyFamily P = builtin_family("parabola");
  PolyFamily S = shift_family(P, Rational(1));
  CHECK(verify_family(S));
  CHECK(radical(fiber(S, Rational(-1))).dim() == 1);
  PolyFamily Q = product_family(P, builtin_family("d1inf"));
  CHECK(Q.dim() == 5);
  CHECK(verify_family(Q));
  CHECK(centre(fiber(Q, Rational(2))).dim() == 5);
}

TEST_CASE("CRT idempotents and the binomial inverse square root") {
  FDAlgebra A = fiber(builtin_family("a2"), Rational(4));
  Element x = basis_of(A, "x");
  Element X = A.multiply(x, x);
  Element e = crt_idempotent(A, X, UniPoly(std::vector<Rational>{-1, 1}), UniPoly(std::vector<Rational>{-4, 1}));
  CHECK(A.multiply(e, e) == e);
  CHECK(is_central(A, e));
  CHECK(corner_algebra(A, e).algebra.dim() == 4);

  FDAlgebra D = d_presentation(2, 2).algebra();
  Element u = scale(basis_of(D, "x^2"), Rational(3));
  Element r = inverse_sqrt_one_minus(D, D.unit(), u);
  Element one_minus_u = sub(D.unit(), u);
  CHECK(A.dim() == 6);
  CHECK(D.multiply(D.multiply(r, r), one_minus_u) == D.unit());
  CHECK_THROWS_AS(inverse_sqrt_one_minus(D, D.unit(), D.unit()), Error);
}

TEST_CASE("evidence edges") {
  CertEdge dn1 = evaluate_edge(dn1_edge(2));
  CHECK(dn1.verified);
  CHECK(total_type(dn1.target) == GeometricType::parse("{2:1, 1:2}"));

  CertEdge a2 = evaluate_edge(a2_edge());
  CHECK(a2.verified);
  REQUIRE(a2.samples.size() == 2);
  CHECK(a2.samples[0].at == Rational(4));
  CHECK(a2.samples[1].at == Rational(9));
  for (const auto& s : a2.samples) {
    auto dims = s.block_dims;
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{2, 4});
  }
  CHECK(describe(a2.target).find("A'") != std::string::npos);

  EdgeSpec wrong = a2_edge();
  wrong.claims = [inner = wrong.claims](const FDAlgebra& A, const Rational& at) {
    if (at == Rational(1)) return inner(A, at);
    return FiberClaim{{BlockClaim::semisimple(GeometricType::parse("{2:1, 1:2}"))}};
  };
  try {
    certify_edge(wrong);
    FAIL("semisimple claim on a2 at 4 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvidenceFailed);
  }

  // At t = 1 the CRT split degenerates: one block, nonzero radical.
  FDAlgebra f1 = fiber(builtin_family("a2"), Rational(1));
  CHECK(fiber_blocks(f1).size() == 1);
}

TEST_CASE("certificate composition and products") {
  Certificate a2 = compose_certificates({certify_edge(a2_edge())});
  Certificate full = compose_certificates(a2, compose_certificates({certify_edge(aprime_edge())}));
  CHECK(full.complete());
  CHECK(full.verified());
  CHECK(full.target_type() == GeometricType::parse("{2:1, 1:2}"));
  CHECK_THROWS_AS(compose_certificates(compose_certificates({certify_edge(dn1_edge(2))}), a2), Error);

  Certificate d11 = compose_certificates({certify_edge(trivial_edge(d_presentation(1, 1), GeometricType::parse("{1:2}")))});
  Certificate prod = product_certificate(d11, full);
  CHECK(prod.verified());
  CHECK(prod.target_type() == GeometricType::parse("{2:1, 1:4}"));
  CHECK(prod.chain.size() == 2);
}

TEST_CASE("presentation elements") {
  Presentation p = d_presentation(2, 2);
  Element e = presentation_element(p, "y*x + x*y");
  CHECK(is_zero(e));
  CHECK(presentation_element(p, "x^2") == basis_of(p.algebra(), "x^2"));
}
