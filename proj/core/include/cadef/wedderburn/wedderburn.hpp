#pragma once

#include <map>
#include <string>
#include <vector>

#include "cadef/algstruct/ops.hpp"
#include "cadef/wedderburn/factor.hpp"

namespace cadef {

/// Multiset of matrix sizes over the algebraic closure: counts[s] copies of
/// M_s. Size 1 entries are copies of the ground field.
struct GeometricType {
  std::map<std::size_t, std::size_t> counts;

  std::size_t dim() const;
  std::size_t centre_dim() const;
  bool empty() const { return counts.empty(); }
  /// "{2:1, 1:4}", largest size first.
  std::string to_string() const;
  static GeometricType parse(const std::string& text);
  GeometricType& operator+=(const GeometricType& o);
  friend GeometricType operator+(GeometricType a, const GeometricType& b) { return a += b; }
  friend bool operator==(const GeometricType&, const GeometricType&) = default;
};

/// Jacobson radical by the trace-form criterion (characteristic zero).
QSubspace radical(const FDAlgebra& A);

struct SemisimpleQuotient {
  FDAlgebra algebra;
  std::vector<std::size_t> complement;  // basis indices of A kept in the quotient
};
SemisimpleQuotient semisimple_quotient_with_basis(const FDAlgebra& A);
FDAlgebra semisimple_quotient(const FDAlgebra& A);

/// Monic minimal polynomial of a (over Q).
UniPoly minimal_polynomial(const FDAlgebra& A, const Element& a);
/// p(a) by Horner's rule.
Element evaluate_polynomial(const FDAlgebra& A, const UniPoly& p, const Element& a);

/// Largest c tried by the primitive-element sweep.
inline constexpr int kPrimitiveSweepLimit = 1000;

/// Central primitive idempotents of any finite-dimensional algebra: a
/// primitive element of the centre modulo its radical, its minimal polynomial
/// in A split into coprime prime-power factors, and CRT idempotents. The
/// result is orthogonal, central, sums to 1, and is ordered by the factor
/// order of the minimal polynomial.
struct CentralSplitting {
  std::vector<Element> idempotents;
  std::vector<UniPoly> residue_fields;  // irreducible factor for each block
  Element primitive;                    // lifted primitive element
  UniPoly minimal;                      // its minimal polynomial in A
  int sweep_c = 0;
};
CentralSplitting central_splitting(const FDAlgebra& A);

/// As central_splitting for a semisimple algebra (radical must be zero).
std::vector<Element> central_primitive_idempotents(const FDAlgebra& S);

/// Per block e_i S: centre field degree f_i and size s_i = sqrt(dim / f_i).
GeometricType geometric_type(const FDAlgebra& S);

}  // namespace cadef
