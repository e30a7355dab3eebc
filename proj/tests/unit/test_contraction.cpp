#include <doctest.h>

#include "cadef/contraction/contraction.hpp"
#include "support.hpp"

using namespace cadef;
using namespace testsupport;

namespace {

// Direct enumeration of 4k + l = d, k + l <= z, 2k + l >= p.
std::vector<std::pair<std::size_t, std::size_t>> brute_obstruction(std::size_t d, std::size_t z, std::size_t p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k <= d; ++k)
    for (std::size_t l = 0; l <= d; ++l)
      if (4 * k + l == d && k + l <= z && 2 * k + l >= p) out.emplace_back(k, l);
  return out;
}

GeometricType type(std::size_t k, std::size_t l) {
  GeometricType t;
  if (k) t.counts[2] = k;
  if (l) t.counts[1] = l;
  return t;
}

}  // namespace

TEST_CASE("dimensions and centres of the contraction algebras") {
  CHECK(build_contraction(ContractionSpec::d(2, 2)).algebra.dim() == 8);
  CHECK(build_contraction(ContractionSpec::d(2, std::nullopt)).algebra.dim() == 9);
  auto d1 = build_contraction(ContractionSpec::d(1, std::nullopt));
  CHECK(d1.algebra.dim() == 3);
  CHECK(geometric_type(semisimple_quotient(d1.algebra)) == GeometricType::parse("{1:1}"));
  auto d32 = computed_invariants(build_contraction(ContractionSpec::d(3, 2)));
  CHECK(d32.dim == 12);
  CHECK(d32.centre_dim == 6);
  auto d23 = computed_invariants(build_contraction(ContractionSpec::d(2, 3)));
  CHECK(d23.dim == 9);
  CHECK(d23.centre_dim == 6);
  auto d22 = computed_invariants(build_contraction(ContractionSpec::d(2, 2)));
  CHECK(d22.nilpotency_index == 5);
  CHECK(d22.witness == "x");
  CHECK(d22.gb_added == std::vector<std::string>{"x^3*y"});
}

TEST_CASE("computed invariants reproduce the table") {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 2; m <= 4; ++m) {
      auto s = ContractionSpec::d(n, m);
      auto b = build_contraction(s);
      CHECK(b.confluent);
      CHECK_MESSAGE(*expected_invariants(s) == computed_invariants(b), s.name());
    }
    auto s = ContractionSpec::d(n, std::nullopt);
    CHECK_MESSAGE(*expected_invariants(s) == computed_invariants(build_contraction(s)), s.name());
  }
  auto a = computed_invariants(build_contraction(ContractionSpec::a(5)));
  CHECK(a.dim == 4);
  CHECK(a.centre_dim == 4);
  CHECK(a.witness == "y");
  CHECK(a.nilpotency_index == 4);
  CHECK(*expected_invariants(ContractionSpec::a(5)) == a);
  CHECK_FALSE(expected_invariants(ContractionSpec::d(1, 2)).has_value());
}

TEST_CASE("semisimple targets") {
  CHECK(semisimple_target(ContractionSpec::d(2, 2)) == GeometricType::parse("{2:1, 1:4}"));
  CHECK(semisimple_target(ContractionSpec::d(3, 5)) == GeometricType::parse("{2:2, 1:7}"));
  CHECK(semisimple_target(ContractionSpec::d(4, std::nullopt)) == GeometricType::parse("{2:3, 1:9}"));
  CHECK(semisimple_target(ContractionSpec::a(4)) == GeometricType::parse("{1:3}"));
}

TEST_CASE("obstruction solver against enumeration") {
  CHECK(obstruction_solver(9, 6, 6) == std::vector<std::pair<std::size_t, std::size_t>>{{1, 5}});
  CHECK(obstruction_solver(8, 5, 5) == std::vector<std::pair<std::size_t, std::size_t>>{{1, 4}});
  for (std::size_t d = 0; d <= 30; ++d)
    for (std::size_t z = 0; z <= d; z += 3)
      for (std::size_t p = 0; p <= d; p += 2) CHECK(obstruction_solver(d, z, p) == brute_obstruction(d, z, p));
  for (int n = 2; n <= 6; ++n)
    for (int m = 2; m <= 6; ++m) {
      auto inv = *expected_invariants(ContractionSpec::d(n, m));
      auto sols = obstruction_solver(inv.dim, inv.centre_dim, inv.nilpotency_index);
      REQUIRE(sols.size() == 1);
      CHECK(type(sols[0].first, sols[0].second) == semisimple_target(ContractionSpec::d(n, m)));
    }
}

TEST_CASE("matrix block bound") {
  const FDAlgebra& d22 = build_contraction(ContractionSpec::d(2, 2)).algebra;
  CHECK(matrix_block_bound(d22, basis_of(d22, "x"), basis_of(d22, "y")) == BlockBound::BoundTwo);
  const FDAlgebra& d43 = build_contraction(ContractionSpec::d(4, 3)).algebra;
  CHECK(matrix_block_bound(d43, basis_of(d43, "x"), basis_of(d43, "y")) == BlockBound::BoundTwo);
  FDAlgebra M = matrix_algebra();
  Element e11 = basis_of(M, "E11");
  CHECK(matrix_block_bound(M, e11, e11) == BlockBound::NoBound);
}

TEST_CASE("D(n,m) agrees with D(n,inf) once m >= 2n") {
  CHECK(dinfty_coincidence(2, 4));
  CHECK(dinfty_coincidence(2, 5));
  CHECK(dinfty_coincidence(3, 6));
  CHECK_THROWS_AS(dinfty_coincidence(2, 2), Error);
}

TEST_CASE("reproduction") {
  Reproduction r = reproduce(ContractionSpec::d(2, 2));
  CHECK(r.ok());
  CHECK(r.unique);
  CHECK(r.match);
  REQUIRE(r.certificate);
  CHECK(r.certificate->chain.size() == 2);
  CHECK(r.certified_target == GeometricType::parse("{2:1, 1:4}"));

  CHECK(reproduce(ContractionSpec::d(3, 2)).certified_target == GeometricType::parse("{2:2, 1:4}"));
  Reproduction d23 = reproduce(ContractionSpec::d(2, 3));
  CHECK(d23.certified_target == GeometricType::parse("{2:1, 1:5}"));
  CHECK(d23.certificate->source().front().name == "D(2,3)");

  Reproduction a = reproduce(ContractionSpec::a(4));
  CHECK(a.ok());
  CHECK(a.certified_target == GeometricType::parse("{1:3}"));
}

TEST_CASE("discrepancy notes") {
  auto a = discrepancy_notes(ContractionSpec::a(3));
  REQUIRE(a.size() == 1);
  CHECK(a[0].find("n-1") != std::string::npos);
  auto d = discrepancy_notes(ContractionSpec::d(2, 2));
  REQUIRE(d.size() == 1);
  CHECK(d[0].find("2m-1") != std::string::npos);
  CHECK(d[0].find("2m-2") != std::string::npos);
  CHECK(reproduce(ContractionSpec::a(3)).notes == a);
}

TEST_CASE("range checks") {
  CHECK_THROWS_AS(contraction_presentation(ContractionSpec::d(0, 2)), Error);
  CHECK_THROWS_AS(contraction_presentation(ContractionSpec::a(1)), Error);
  CHECK_THROWS_AS(contraction_presentation(ContractionSpec::d(2, 0)), Error);
}
