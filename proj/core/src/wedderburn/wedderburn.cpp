#include "cadef/wedderburn/wedderburn.hpp"

#include <cctype>
#include <sstream>

namespace cadef {

std::size_t GeometricType::dim() const {
  std::size_t d = 0;
  for (const auto& [s, n] : counts) d += s * s * n;
  return d;
}

std::size_t GeometricType::centre_dim() const {
  std::size_t z = 0;
  for (const auto& [s, n] : counts) z += n;
  return z;
}

std::string GeometricType::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (it->second == 0) continue;
    if (!first) os << ", ";
    first = false;
    os << it->first << ':' << it->second;
  }
  os << '}';
  return os.str();
}

GeometricType GeometricType::parse(const std::string& text) {
  GeometricType g;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto number = [&]() -> std::size_t {
    skip();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw SyntaxError(ErrorCode::SyntaxError, start, "expected a number in geometric type");
    return std::stoul(text.substr(start, i - start));
  };
  skip();
  if (i < text.size() && text[i] == '{') ++i;
  while (true) {
    skip();
    if (i >= text.size() || text[i] == '}') break;
    std::size_t s = number();
    skip();
    if (i >= text.size() || text[i] != ':') throw SyntaxError(ErrorCode::SyntaxError, i, "expected ':'");
    ++i;
    std::size_t n = number();
    if (s == 0) throw SyntaxError(ErrorCode::SyntaxError, i, "matrix size must be positive");
    if (n > 0) g.counts[s] += n;
  }
  return g;
}

GeometricType& GeometricType::operator+=(const GeometricType& o) {
  for (const auto& [s, n] : o.counts) counts[s] += n;
  return *this;
}

QSubspace radical(const FDAlgebra& A) {
  std::size_t d = A.dim();
  std::vector<Rational> tau(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) tau[k] += A.constant(k, l, l);
  QMatrix G(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : A.product(i, j))
        if (!tau[k].is_zero()) G(i, j) += c * tau[k];
  return QSubspace{d, mat_kernel(G)};
}

SemisimpleQuotient semisimple_quotient_with_basis(const FDAlgebra& A) {
  std::size_t d = A.dim();
  QSubspace rad = radical(A);
  std::vector<Element> vs = rad.basis;
  for (std::size_t i = 0; i < d; ++i) vs.push_back(A.basis(i));
  auto chosen = independent_subset(vs, d);
  std::size_t r = rad.dim();
  std::vector<Element> full;
  std::vector<std::size_t> complement;
  for (auto idx : chosen) {
    full.push_back(vs[idx]);
    if (idx >= r) complement.push_back(idx - r);
  }
  CoordinateSystem<Rational> cs(full, d);
  std::size_t q = complement.size();
  std::vector<std::string> labels;
  for (auto c : complement) labels.push_back(A.label(c));
  FDAlgebra S = FDAlgebra::from_products(
      q,
      [&](std::size_t i, std::size_t j) {
        Element prod = A.multiply(A.basis(complement[i]), A.basis(complement[j]));
        Element c = cs.coords(prod);
        return Element(c.begin() + std::ptrdiff_t(r), c.end());
      },
      labels);
  return SemisimpleQuotient{std::move(S), std::move(complement)};
}

FDAlgebra semisimple_quotient(const FDAlgebra& A) { return semisimple_quotient_with_basis(A).algebra; }

UniPoly minimal_polynomial(const FDAlgebra& A, const Element& a) {
  std::size_t d = A.dim();
  std::vector<Element> powers{A.unit()};
  while (true) {
    Element next = A.multiply(powers.back(), a);
    QMatrix M = QMatrix::from_columns(powers, d);
    if (auto sol = mat_solve<Rational>(M, next)) {
      std::vector<Rational> cs(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) cs[i] = -(*sol)[i];
      cs.back() = Rational(1);
      return UniPoly(cs);
    }
    powers.push_back(std::move(next));
    if (powers.size() > d + 1) throw Error(ErrorCode::InvalidInput, "minimal polynomial search overran");
  }
}

Element evaluate_polynomial(const FDAlgebra& A, const UniPoly& p, const Element& a) {
  Element r = A.zero();
  for (int i = p.degree(); i >= 0; --i) {
    r = A.multiply(r, a);
    Rational c = p.coeff(std::size_t(i));
    if (!c.is_zero()) r[0] += c;
  }
  return r;
}

CentralSplitting central_splitting(const FDAlgebra& A) {
  std::size_t d = A.dim();
  auto Z = centre(A);
  std::vector<Element> vs{A.unit()};
  for (auto& v : Z.basis) vs.push_back(v);
  std::vector<Element> zb;
  for (auto idx : independent_subset(vs, d)) zb.push_back(vs[idx]);
  CoordinateSystem<Rational> zcs(zb, d);
  FDAlgebra ZA = FDAlgebra::from_products(
      zb.size(), [&](std::size_t i, std::size_t j) { return zcs.coords(A.multiply(zb[i], zb[j])); });
  SemisimpleQuotient E = semisimple_quotient_with_basis(ZA);
  std::size_t m = E.algebra.dim();

  CentralSplitting out;
  Element zbar;
  bool found = false;
  for (int c = 0; c <= kPrimitiveSweepLimit && !found; ++c) {
    zbar = E.algebra.zero();
    Rational ck(1);
    for (std::size_t k = 0; k < m; ++k) {
      zbar[k] = ck;
      ck = ck * Rational(c);
    }
    if (std::size_t(minimal_polynomial(E.algebra, zbar).degree()) == m) {
      found = true;
      out.sweep_c = c;
    }
  }
  if (!found)
    throw Error(ErrorCode::PrimitiveElementSearchExhausted,
                "no primitive element of the centre found for c <= " + std::to_string(kPrimitiveSweepLimit));
  Element z = A.zero();
  for (std::size_t k = 0; k < m; ++k) {
    if (zbar[k].is_zero()) continue;
    const Element& b = zb[E.complement[k]];
    for (std::size_t i = 0; i < d; ++i)
      if (!b[i].is_zero()) z[i] += zbar[k] * b[i];
  }
  out.primitive = z;
  out.minimal = minimal_polynomial(A, z);
  auto fac = factor_poly_rational(out.minimal);
  for (const auto& [f, mult] : fac.factors) {
    UniPoly q = pow(f, mult);
    UniPoly g = out.minimal / q;
    BezoutResult br = xgcd(g, q);
    UniPoly e = (br.u * g) % out.minimal;
    out.idempotents.push_back(evaluate_polynomial(A, e, z));
    out.residue_fields.push_back(f);
  }
  return out;
}

std::vector<Element> central_primitive_idempotents(const FDAlgebra& S) { return central_splitting(S).idempotents; }

GeometricType geometric_type(const FDAlgebra& S) {
  if (radical(S).dim() != 0) throw Error(ErrorCode::InvalidInput, "geometric type needs a semisimple algebra");
  CentralSplitting sp = central_splitting(S);
  GeometricType g;
  for (std::size_t i = 0; i < sp.idempotents.size(); ++i) {
    Corner block = corner_algebra(S, sp.idempotents[i]);
    std::size_t dim = block.algebra.dim();
    std::size_t f = std::size_t(sp.residue_fields[i].degree());
    std::size_t s = 0;
    while ((s + 1) * (s + 1) * f <= dim) ++s;
    if (dim % f != 0 || s * s * f != dim)
      throw Error(ErrorCode::NonSquareBlockDimension,
                  "block of dimension " + std::to_string(dim) + " over a degree " + std::to_string(f) + " centre");
    g.counts[s] += f;
  }
  return g;
}

}  // namespace cadef
