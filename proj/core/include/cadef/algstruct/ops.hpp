#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cadef/algstruct/fdalgebra.hpp"
#include "cadef/ncgb/rewriting.hpp"

namespace cadef {

/// A linear subspace of k^ambient given by independent basis vectors.
template <typename T>
struct Subspace {
  std::size_t ambient = 0;
  std::vector<std::vector<T>> basis;
  std::size_t dim() const { return basis.size(); }
};

using QSubspace = Subspace<Rational>;

/// Associativity and unit equations, checked exactly in the coefficient ring.
/// With UniPoly constants they are checked as polynomial identities in t.
template <typename C>
bool verify_structure(const StructAlgebra<C>& a) {
  const std::size_t d = a.dim();
  if (d == 0) return false;
  for (std::size_t j = 0; j < d; ++j) {
    auto e = StructAlgebra<C>::sparsify(a.basis(j));
    if (a.product(0, j) != e || a.product(j, 0) != e) return false;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& ij = a.product(i, j);
      for (std::size_t l = 0; l < d; ++l) {
        std::vector<C> left(d), right(d);
        for (const auto& [k, c] : ij)
          for (const auto& [m, c2] : a.product(k, l)) left[m] += c * c2;
        for (const auto& [k, c] : a.product(j, l))
          for (const auto& [m, c2] : a.product(i, k)) right[m] += c * c2;
        if (left != right) return false;
      }
    }
  return true;
}

/// Matrix of b -> a b (column j is a e_j).
template <typename C>
Matrix<C> left_mult(const StructAlgebra<C>& A, const std::vector<C>& a) {
  std::size_t d = A.dim();
  std::vector<std::vector<C>> cols;
  cols.reserve(d);
  for (std::size_t j = 0; j < d; ++j) cols.push_back(A.multiply(a, A.basis(j)));
  return Matrix<C>::from_columns(cols, d);
}

template <typename C>
Matrix<C> right_mult(const StructAlgebra<C>& A, const std::vector<C>& a) {
  std::size_t d = A.dim();
  std::vector<std::vector<C>> cols;
  cols.reserve(d);
  for (std::size_t j = 0; j < d; ++j) cols.push_back(A.multiply(A.basis(j), a));
  return Matrix<C>::from_columns(cols, d);
}

/// Centre over a field of coefficients (Rational or RatFunc).
template <typename C>
Subspace<C> centre(const StructAlgebra<C>& A) {
  std::size_t d = A.dim();
  Matrix<C> m(d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      // coefficient of z_j in [z, e_i], row block i
      for (const auto& [k, c] : A.product(j, i)) m(i * d + k, j) += c;
      for (const auto& [k, c] : A.product(i, j)) m(i * d + k, j) -= c;
    }
  return Subspace<C>{d, mat_kernel(m)};
}

template <typename C>
bool is_central(const StructAlgebra<C>& A, const std::vector<C>& z) {
  for (std::size_t i = 0; i < A.dim(); ++i) {
    auto e = A.basis(i);
    if (A.multiply(z, e) != A.multiply(e, z)) return false;
  }
  return true;
}

template <typename C>
Subspace<C> commutator_subspace(const StructAlgebra<C>& A) {
  std::size_t d = A.dim();
  std::vector<std::vector<C>> vs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<C> v(d);
      for (const auto& [k, c] : A.product(i, j)) v[k] += c;
      for (const auto& [k, c] : A.product(j, i)) v[k] -= c;
      if (!is_zero_vector<C>(v)) vs.push_back(std::move(v));
    }
  Subspace<C> s{d, {}};
  for (auto idx : independent_subset(vs, d)) s.basis.push_back(vs[idx]);
  return s;
}

/// Centre of a family computed over the rational-function field Q(t).
Subspace<RatFunc> centre(const PolyAlgebra& A);
RatFuncAlgebra to_ratfunc(const PolyAlgebra& A);
FDAlgebra specialize(const PolyAlgebra& A, const Rational& at);
PolyAlgebra constant_family(const FDAlgebra& A);

/// Product of assigned elements in word order; the empty word gives the unit.
Element evaluate_word(const FDAlgebra& A, const ncgb::Word& w, const std::vector<Element>& assignment);
std::size_t evaluate_spans(const FDAlgebra& A, const std::vector<ncgb::Word>& words,
                           const std::vector<Element>& assignment);

/// Evaluates a polynomial with constant coefficients at the given images.
Element evaluate_poly(const FDAlgebra& A, const ncgb::NCPoly& p, const std::vector<Element>& images);

/// Smallest p with a^p = 0; throws NotNilpotent.
std::size_t nilpotency_index(const FDAlgebra& A, const Element& a);

/// Two-sided inverse; throws NotInvertible.
Element inverse(const FDAlgebra& A, const Element& a);

template <typename C>
StructAlgebra<C> direct_product(const StructAlgebra<C>& A, const StructAlgebra<C>& B,
                                const std::string& left_prefix = "L", const std::string& right_prefix = "R") {
  // Basis: unit (1,1), then (a_i, 0) for i > 0, (1,0) - ..., realized as
  // [ (e0,0)+(0,f0), (e1,0),...,(e_{p-1},0), (0,f0), (0,f1),... ] with
  // (e0,0) = unit - (0,f0).
  std::size_t p = A.dim(), q = B.dim(), d = p + q;
  // Internal block coordinates: index i < p is (e_i,0), p + j is (0,f_j).
  auto block = [&](std::size_t i, std::size_t j) {
    std::vector<C> v(d);
    if (i < p && j < p) {
      for (const auto& [k, c] : A.product(i, j)) v[k] += c;
    } else if (i >= p && j >= p) {
      for (const auto& [k, c] : B.product(i - p, j - p)) v[p + k] += c;
    }
    return v;
  };
  // Change of basis: new b_0 = (e0,0)+(0,f0); new b_i = old i for i >= 1.
  // old 0 = b_0 - b_p.
  auto to_new = [&](std::vector<C> v) {
    if (!v[0].is_zero()) {
      C c = v[0];
      v[p] -= c;
    }
    return v;
  };
  auto from_new = [&](std::size_t i) -> std::vector<std::pair<std::size_t, C>> {
    if (i == 0) return {{0, C(1)}, {p, C(1)}};
    return {{i, C(1)}};
  };
  std::vector<std::string> labels;
  labels.push_back("1");
  for (std::size_t i = 1; i < p; ++i) labels.push_back(left_prefix + ":" + A.label(i));
  labels.push_back(right_prefix + ":1");
  for (std::size_t j = 1; j < q; ++j) labels.push_back(right_prefix + ":" + B.label(j));
  return StructAlgebra<C>::from_products(
      d,
      [&](std::size_t i, std::size_t j) {
        std::vector<C> acc(d);
        for (const auto& [a, ca] : from_new(i))
          for (const auto& [b, cb] : from_new(j)) {
            auto v = block(a, b);
            for (std::size_t k = 0; k < d; ++k)
              if (!v[k].is_zero()) acc[k] += ca * cb * v[k];
          }
        return to_new(std::move(acc));
      },
      labels);
}

/// Embeddings of the factors of direct_product(A, B) as non-unital maps.
Element embed_left(const FDAlgebra& A, const FDAlgebra& B, const Element& a);
Element embed_right(const FDAlgebra& A, const FDAlgebra& B, const Element& b);

enum class MapVerdict { NotAMap, Map, Isomorphism };
std::string_view to_string(MapVerdict v);

/// Images of the generators of a presentation in a target algebra.
struct GeneratorImageMap {
  ncgb::RewritingSystem source;  // completed presentation of the source
  std::vector<Element> images;   // one per source generator
};

struct MapCheck {
  MapVerdict verdict = MapVerdict::NotAMap;
  std::optional<std::size_t> failing_relation;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
};

/// Checks that every source relation vanishes at the images, then compares
/// the rank of the evaluated normal basis with both dimensions.
MapCheck verify_algebra_map(const GeneratorImageMap& m, const FDAlgebra& target);

/// Corner e A for a central idempotent e, as an algebra with unit e, together
/// with coordinates of its basis inside A.
struct Corner {
  FDAlgebra algebra;
  CoordinateSystem<Rational> coords;  // basis of eA in A coordinates, basis[0] = e
};
Corner corner_algebra(const FDAlgebra& A, const Element& e);

/// Basis change by an invertible matrix P (columns: new basis in old
/// coordinates). The new first basis vector must be the unit.
FDAlgebra change_basis(const FDAlgebra& A, const QMatrix& P);

}  // namespace cadef
