#pragma once

#include <optional>

#include "cadef/families/certificate.hpp"

namespace cadef {

/// Ready-made deformation edges over the built-in families. Each returns an
/// unevaluated EdgeSpec; pass it to evaluate_edge or certify_edge.

/// D^s(n, m) -> D^{-s}(n-1, m-1) x Q2 (m absent: infinity). The second
/// factor becomes D^{-s}(n-1, inf) when m is absent. Needs n >= 2, m >= 2.
/// Aux checks record the uncorrected generator maps.
EdgeSpec induction_edge(int n, std::optional<int> m, int sign = 1);
/// D^s(n, 1) -> {2: n-1, 1: 2}.
EdgeSpec dn1_edge(int n, int sign = 1);
/// D^s(1, m) (m >= 2 or infinity), identified with k[y]/(y^3) by
/// x -> -s y^2, deforms to {1: 3}.
EdgeSpec d1inf_edge(std::optional<int> m, int sign = 1);
/// Q2 -> {2: 1, 1: 2}.
EdgeSpec quiver_edge();
/// A2 -> A' x {1: 2}.
EdgeSpec a2_edge();
/// A' -> {2: 1}.
EdgeSpec aprime_edge();
/// k[x]/(x^2), presented as A(3), -> {1: 2}.
EdgeSpec parabola_edge();
/// A(n) -> {1: n-1}.
EdgeSpec an_edge(int n);
/// Constant edge that only re-identifies a presentation as a semisimple
/// algebra of the given type.
EdgeSpec trivial_edge(const Presentation& p, const GeometricType& type);

/// The idempotent of A cut out by the factor `p` of a polynomial annihilating
/// a: e = (v q)(a) where u p + v q = 1. With a central, e is central.
Element crt_idempotent(const FDAlgebra& A, const Element& a, const UniPoly& p, const UniPoly& q);

/// (e - u)^{-1/2} for u nilpotent in the corner e A, by the binomial series.
Element inverse_sqrt_one_minus(const FDAlgebra& A, const Element& e, const Element& u);

}  // namespace cadef
