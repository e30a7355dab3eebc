#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cadef/error.hpp"
#include "cadef/exactnum/matrix.hpp"
#include "cadef/exactnum/ratfunc.hpp"
#include "cadef/exactnum/unipoly.hpp"

namespace cadef {

/// Finite-dimensional unital associative algebra given by structure
/// constants e_i e_j = sum_k c_{ij}^k e_k over a coefficient ring C
/// (Rational for plain algebras, UniPoly for one-parameter families,
/// RatFunc for generic fibers). Basis element 0 is the unit.
///
/// The table is stored sparsely: products(i, j) lists the nonzero (k, c)
/// pairs in increasing k.
template <typename C>
class StructAlgebra {
 public:
  using Element = std::vector<C>;
  using Sparse = std::vector<std::pair<std::uint32_t, C>>;

  StructAlgebra() = default;
  StructAlgebra(std::size_t dim, std::vector<Sparse> table, std::vector<std::string> labels)
      : dim_(dim), table_(std::move(table)), labels_(std::move(labels)) {
    if (table_.size() != dim_ * dim_) throw Error(ErrorCode::DimensionMismatch, "structure table size");
    if (labels_.empty()) {
      for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
    }
    if (labels_.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "basis label count");
  }

  /// Builds the table from a product callback returning dense vectors.
  template <typename F>
  static StructAlgebra from_products(std::size_t dim, F&& product, std::vector<std::string> labels = {}) {
    std::vector<Sparse> table(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) table[i * dim + j] = sparsify(product(i, j));
    return StructAlgebra(dim, std::move(table), std::move(labels));
  }

  static Sparse sparsify(const Element& v) {
    Sparse s;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) s.emplace_back(std::uint32_t(k), v[k]);
    return s;
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  void set_labels(std::vector<std::string> labels) {
    if (labels.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "basis label count");
    labels_ = std::move(labels);
  }
  const Sparse& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const std::vector<Sparse>& table() const { return table_; }

  C constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& [idx, c] : product(i, j))
      if (idx == k) return c;
    return C{};
  }

  Element zero() const { return Element(dim_); }
  Element basis(std::size_t i) const {
    Element e(dim_);
    e.at(i) = C(1);
    return e;
  }
  Element unit() const { return basis(0); }

  Element multiply(const Element& a, const Element& b) const {
    Element out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j].is_zero()) continue;
        C ab = a[i] * b[j];
        for (const auto& [k, c] : product(i, j)) out[k] += ab * c;
      }
    }
    return out;
  }

  Element power(const Element& a, std::size_t e) const {
    Element r = unit();
    for (std::size_t i = 0; i < e; ++i) r = multiply(r, a);
    return r;
  }

  template <typename D, typename F>
  StructAlgebra<D> map_coefficients(F&& f) const {
    std::vector<typename StructAlgebra<D>::Sparse> t(table_.size());
    for (std::size_t p = 0; p < table_.size(); ++p)
      for (const auto& [k, c] : table_[p]) {
        D v = f(c);
        if (!v.is_zero()) t[p].emplace_back(k, std::move(v));
      }
    return StructAlgebra<D>(dim_, std::move(t), labels_);
  }

  friend bool operator==(const StructAlgebra& a, const StructAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Sparse> table_;
  std::vector<std::string> labels_;
};

using FDAlgebra = StructAlgebra<Rational>;
using PolyAlgebra = StructAlgebra<UniPoly>;
using RatFuncAlgebra = StructAlgebra<RatFunc>;
using Element = FDAlgebra::Element;

/// Element-wise helpers for coordinate vectors.
template <typename C>
std::vector<C> add(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<C> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <typename C>
std::vector<C> sub(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<C> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <typename C>
std::vector<C> scale(const std::vector<C>& a, const C& s) {
  std::vector<C> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r[i] = a[i] * s;
  return r;
}

}  // namespace cadef
