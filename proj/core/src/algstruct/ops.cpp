#include "cadef/algstruct/ops.hpp"

namespace cadef {

RatFuncAlgebra to_ratfunc(const PolyAlgebra& A) {
  return A.map_coefficients<RatFunc>([](const UniPoly& c) { return RatFunc(c); });
}

Subspace<RatFunc> centre(const PolyAlgebra& A) { return centre(to_ratfunc(A)); }

FDAlgebra specialize(const PolyAlgebra& A, const Rational& at) {
  return A.map_coefficients<Rational>([&](const UniPoly& c) { return c.eval(at); });
}

PolyAlgebra constant_family(const FDAlgebra& A) {
  return A.map_coefficients<UniPoly>([](const Rational& c) { return UniPoly(c); });
}

Element evaluate_word(const FDAlgebra& A, const ncgb::Word& w, const std::vector<Element>& assignment) {
  Element r = A.unit();
  for (auto g : w) r = A.multiply(r, assignment.at(g));
  return r;
}

std::size_t evaluate_spans(const FDAlgebra& A, const std::vector<ncgb::Word>& words,
                           const std::vector<Element>& assignment) {
  std::vector<Element> vs;
  vs.reserve(words.size());
  for (const auto& w : words) vs.push_back(evaluate_word(A, w, assignment));
  return span_dimension(vs, A.dim());
}

Element evaluate_poly(const FDAlgebra& A, const ncgb::NCPoly& p, const std::vector<Element>& images) {
  Element out = A.zero();
  for (const auto& [w, c] : p.terms()) {
    if (!c.is_constant())
      throw Error(ErrorCode::InvalidInput, "coefficient " + c.to_string() + " depends on the parameter");
    Element v = evaluate_word(A, w, images);
    Rational k = c.constant_term();
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!v[i].is_zero()) out[i] += k * v[i];
  }
  return out;
}

std::size_t nilpotency_index(const FDAlgebra& A, const Element& a) {
  Element p = A.unit();
  for (std::size_t k = 1; k <= A.dim(); ++k) {
    p = A.multiply(p, a);
    if (is_zero_vector<Rational>(p)) return k;
  }
  throw Error(ErrorCode::NotNilpotent, "element is not nilpotent");
}

Element inverse(const FDAlgebra& A, const Element& a) {
  auto x = mat_solve<Rational>(left_mult(A, a), A.unit());
  if (!x) throw Error(ErrorCode::NotInvertible, "element has no inverse");
  // In a finite-dimensional algebra a left-invertible element is invertible.
  if (A.multiply(*x, a) != A.unit()) throw Error(ErrorCode::NotInvertible, "element has no two-sided inverse");
  return *x;
}

Element embed_left(const FDAlgebra& A, const FDAlgebra& B, const Element& a) {
  std::size_t p = A.dim();
  Element v(p + B.dim());
  for (std::size_t i = 0; i < p; ++i) v[i] = a[i];
  v[p] -= v[0];
  return v;
}

Element embed_right(const FDAlgebra& A, const FDAlgebra& B, const Element& b) {
  std::size_t p = A.dim();
  Element v(p + B.dim());
  for (std::size_t j = 0; j < B.dim(); ++j) v[p + j] = b[j];
  return v;
}

std::string_view to_string(MapVerdict v) {
  switch (v) {
    case MapVerdict::NotAMap: return "NotAMap";
    case MapVerdict::Map: return "Map";
    case MapVerdict::Isomorphism: return "Isomorphism";
  }
  return "?";
}

MapCheck verify_algebra_map(const GeneratorImageMap& m, const FDAlgebra& target) {
  MapCheck out;
  out.target_dim = target.dim();
  if (m.images.size() != m.source.alphabet().size())
    throw Error(ErrorCode::DimensionMismatch, "one image per generator is required");
  auto relations = m.source.relations();
  for (std::size_t r = 0; r < relations.size(); ++r) {
    if (!is_zero_vector<Rational>(evaluate_poly(target, relations[r], m.images))) {
      out.failing_relation = r;
      return out;
    }
  }
  auto basis = ncgb::normal_monomials(m.source);
  out.source_dim = basis.size();
  std::vector<Element> vs;
  for (const auto& w : basis) vs.push_back(evaluate_word(target, w, m.images));
  out.rank = span_dimension(vs, target.dim());
  out.verdict = (out.rank == out.source_dim && out.rank == out.target_dim) ? MapVerdict::Isomorphism : MapVerdict::Map;
  return out;
}

Corner corner_algebra(const FDAlgebra& A, const Element& e) {
  std::size_t d = A.dim();
  std::vector<Element> vs{e};
  for (std::size_t i = 0; i < d; ++i) vs.push_back(A.multiply(e, A.basis(i)));
  std::vector<Element> basis;
  for (auto idx : independent_subset(vs, d)) basis.push_back(vs[idx]);
  CoordinateSystem<Rational> cs(basis, d);
  std::size_t r = basis.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("c" + std::to_string(i));
  FDAlgebra alg = FDAlgebra::from_products(
      r, [&](std::size_t i, std::size_t j) { return cs.coords(A.multiply(basis[i], basis[j])); }, labels);
  return Corner{std::move(alg), std::move(cs)};
}

FDAlgebra change_basis(const FDAlgebra& A, const QMatrix& P) {
  std::size_t d = A.dim();
  std::vector<Element> cols;
  for (std::size_t j = 0; j < d; ++j) cols.push_back(P.column(j));
  CoordinateSystem<Rational> cs(cols, d);
  if (cols[0] != A.unit()) throw Error(ErrorCode::InvalidInput, "first new basis vector must be the unit");
  return FDAlgebra::from_products(d, [&](std::size_t i, std::size_t j) {
    return cs.coords(A.multiply(cols[i], cols[j]));
  });
}

}  // namespace cadef
