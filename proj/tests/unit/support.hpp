#pragma once

#include <array>
#include <string>

#include "cadef/algstruct/ops.hpp"

namespace testsupport {

using cadef::Element;
using cadef::FDAlgebra;
using cadef::Rational;

inline std::size_t index_of(const FDAlgebra& A, const std::string& label) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.label(i) == label) return i;
  throw std::out_of_range("no basis label " + label);
}

inline Element basis_of(const FDAlgebra& A, const std::string& label) { return A.basis(index_of(A, label)); }

// 2x2 matrices on the basis I, E11, E12, E21, multiplied by hand.
using Mat2 = std::array<Rational, 4>;  // m11 m12 m21 m22

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

inline Element coords(const Mat2& m) { return {m[3], m[0] - m[3], m[1], m[2]}; }

inline Mat2 matrix(const Element& c) { return {c[0] + c[1], c[2], c[3], c[0]}; }

inline FDAlgebra matrix_algebra() {
  const std::array<Mat2, 4> basis{Mat2{1, 0, 0, 1}, Mat2{1, 0, 0, 0}, Mat2{0, 1, 0, 0}, Mat2{0, 0, 1, 0}};
  return FDAlgebra::from_products(
      4, [&](std::size_t i, std::size_t j) { return coords(mul(basis[i], basis[j])); },
      {"I", "E11", "E12", "E21"});
}

// Copy of A with one structure constant shifted by delta.
template <typename C>
cadef::StructAlgebra<C> perturbed(const cadef::StructAlgebra<C>& A, std::size_t i, std::size_t j, std::size_t k,
                                  const C& delta) {
  return cadef::StructAlgebra<C>::from_products(
      A.dim(),
      [&](std::size_t a, std::size_t b) {
        auto v = A.multiply(A.basis(a), A.basis(b));
        if (a == i && b == j) v[k] += delta;
        return v;
      },
      A.labels());
}

}  // namespace testsupport
