#include <doctest.h>

#include <random>

#include "cadef/families/family.hpp"
#include "cadef/families/presentation.hpp"
#include "support.hpp"

using namespace cadef;
using namespace testsupport;

TEST_CASE("structure equations hold and catch single-constant mutations") {
  FDAlgebra d22 = d_presentation(2, 2).algebra();
  CHECK(verify_structure(d22));
  CHECK(verify_structure(matrix_algebra()));
  std::size_t x = index_of(d22, "x"), y = index_of(d22, "y");
  CHECK_FALSE(verify_structure(perturbed(d22, x, y, 0, Rational(1))));
  CHECK_FALSE(verify_structure(perturbed(d22, x, x, index_of(d22, "x^2"), Rational(1))));
  CHECK_FALSE(verify_structure(perturbed(d22, 0, y, y, Rational(1))));

  PolyFamily F = builtin_family("a2");
  CHECK(verify_structure(F.algebra));
  CHECK_FALSE(verify_structure(perturbed(F.algebra, 1, 1, 0, UniPoly::t())));
}

TEST_CASE("centres") {
  CHECK(centre(d_presentation(2, 2).algebra()).dim() == 5);
  CHECK(centre(d_presentation(2, 3).algebra()).dim() == 6);
  CHECK(centre(m2_presentation().algebra()).dim() == 1);
  CHECK(centre(matrix_algebra()).dim() == 1);
  CHECK(commutator_subspace(m2_presentation().algebra()).dim() == 3);
}

TEST_CASE("centre is invariant under a unit-preserving change of basis") {
  FDAlgebra A = d_presentation(3, 2).algebra();
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-2, 2);
  QMatrix P = QMatrix::identity(A.dim());
  for (std::size_t i = 1; i < A.dim(); ++i)
    for (std::size_t j = i + 1; j < A.dim(); ++j) P(i, j) = Rational(d(rng));
  FDAlgebra B = change_basis(A, P);
  CHECK(verify_structure(B));
  CHECK(centre(B).dim() == centre(A).dim());
}

TEST_CASE("word evaluation") {
  FDAlgebra A = d_presentation(2, 2).algebra();
  std::vector<Element> gens{basis_of(A, "x"), basis_of(A, "y")};
  ncgb::Alphabet xy({"x", "y"});
  CHECK(evaluate_word(A, xy.parse_word("x*y"), gens) == basis_of(A, "x*y"));
  CHECK(evaluate_word(A, xy.parse_word("x^5"), gens) == A.zero());
  CHECK(evaluate_word(A, {}, gens) == A.unit());

  std::vector<ncgb::Word> words;
  for (std::size_t i = 0; i < 8; ++i) {
    words.push_back(ncgb::power(0, i));
    words.push_back(ncgb::concat(ncgb::power(0, i), {1}));
  }
  CHECK(evaluate_spans(A, words, gens) == 8);
}

TEST_CASE("nilpotency index") {
  CHECK(nilpotency_index(d_presentation(2, 2).algebra(), basis_of(d_presentation(2, 2).algebra(), "x")) == 5);
  CHECK(nilpotency_index(d_presentation(2, 3).algebra(), basis_of(d_presentation(2, 3).algebra(), "x")) == 6);
  CHECK_THROWS_AS(nilpotency_index(m2_presentation().algebra(), m2_presentation().algebra().unit()), Error);
}

TEST_CASE("direct products") {
  FDAlgebra kk = fiber(builtin_family("parabola"), Rational(1));
  FDAlgebra P = direct_product(m2_presentation().algebra(), kk);
  CHECK(P.dim() == 6);
  CHECK(centre(P).dim() == 3);
  CHECK(verify_structure(P));
}

TEST_CASE("generator-image maps") {
  FDAlgebra M = matrix_algebra();
  GeneratorImageMap m{m2_presentation().completed(),
                      {coords(Mat2{0, 1, 1, 0}), coords(Mat2{1, 0, 0, -1})}};
  CHECK(verify_algebra_map(m, M).verdict == MapVerdict::Isomorphism);

  GeneratorImageMap bad{m2_presentation().completed(), {coords(Mat2{0, 1, 0, 0}), coords(Mat2{1, 0, 0, -1})}};
  auto r = verify_algebra_map(bad, M);
  CHECK(r.verdict == MapVerdict::NotAMap);
  CHECK(r.failing_relation.has_value());

  // k[y]/(y^3) onto k[y]/(y^2): a map, not injective.
  GeneratorImageMap onto{truncated_cubic_presentation().completed(), {basis_of(a_presentation(3).algebra(), "y")}};
  CHECK(verify_algebra_map(onto, a_presentation(3).algebra()).verdict == MapVerdict::Map);
}

TEST_CASE("matrix oracle round trip") {
  FDAlgebra M = matrix_algebra();
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int i = 0; i < 50; ++i) {
    Mat2 a{d(rng), d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng), d(rng)};
    CHECK(matrix(M.multiply(coords(a), coords(b))) == mul(a, b));
  }
}
