#pragma once

#include <utility>
#include <vector>

#include "cadef/exactnum/unipoly.hpp"

namespace cadef {

/// p = constant * prod f_i^{m_i}, f_i monic irreducible over Q, pairwise
/// distinct, sorted by (degree, coefficients).
struct IrreducibleFactorization {
  Rational constant;
  std::vector<std::pair<UniPoly, unsigned>> factors;
  UniPoly expand() const;
};

/// Complete factorization over the rationals (squarefree decomposition, then
/// modular factorization with Hensel lifting and recombination). Degrees above
/// 64 are refused with OutOfRange; zero input raises ZeroInput.
IrreducibleFactorization factor_poly_rational(const UniPoly& p);

/// Yun's squarefree decomposition of a monic polynomial: (a_i, i) with
/// p = prod a_i^i, each a_i squarefree and monic; trivial a_i are omitted.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p);

}  // namespace cadef
