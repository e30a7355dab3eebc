#include "cadef/families/evidence.hpp"

#include <algorithm>
#include <memory>

namespace cadef {

Element crt_idempotent(const FDAlgebra& A, const Element& a, const UniPoly& p, const UniPoly& q) {
  BezoutResult b = xgcd(p, q);
  if (!b.gcd.is_one()) throw Error(ErrorCode::InvalidInput, "CRT factors are not coprime");
  return evaluate_polynomial(A, b.v * q, a);
}

Element inverse_sqrt_one_minus(const FDAlgebra& A, const Element& e, const Element& u) {
  // (1 - u)^{-1/2} = sum_k binom(2k, k) (u / 4)^k
  Element acc = e;
  Element term = e;
  Rational coeff(1);
  for (std::size_t k = 1; k <= A.dim(); ++k) {
    term = A.multiply(term, u);
    if (std::all_of(term.begin(), term.end(), [](const Rational& c) { return c.is_zero(); })) return acc;
    coeff = coeff * Rational(std::int64_t(2 * (2 * k - 1)), std::int64_t(4 * k));
    acc = add(acc, scale(term, coeff));
  }
  throw Error(ErrorCode::NotNilpotent, "binomial series does not terminate");
}

namespace {

UniPoly poly(std::vector<Rational> cs) { return UniPoly(std::move(cs)); }

// X - c as a polynomial.
UniPoly linear(const Rational& c) { return poly({-c, Rational(1)}); }

EdgeSpec make_spec(PolyFamily F, std::vector<Factor> sources, const Presentation& source) {
  EdgeSpec s;
  s.source = source.algebra();
  s.sources = std::move(sources);
  s.family = std::move(F);
  return s;
}

Factor named(const Presentation& p) { return Factor{true, p.name(), {}}; }

// Identity-on-generators claim for the special fiber.
FiberClaim source_claim(const PolyFamily& F, const Presentation& p, const std::vector<std::string>& images,
                        const Rational& at = Rational(0)) {
  FiberClaim c;
  std::vector<Element> ims;
  for (const auto& t : images) ims.push_back(family_element(F, at, t));
  std::string map;
  for (std::size_t i = 0; i < images.size(); ++i)
    map += (i ? ", " : "") + p.alphabet().name(ncgb::Letter(i)) + " -> " + images[i];
  c.blocks.push_back(BlockClaim::named(p, std::move(ims), map));
  return c;
}

AuxCheck aux_map(const FDAlgebra& A, const Element& e, const Presentation& p, const std::vector<Element>& images,
                 std::string description) {
  AuxCheck out{std::move(description), p.name(), {}};
  Corner corner = corner_algebra(A, e);
  std::vector<Element> local;
  for (const auto& im : images) {
    auto c = corner.coords.try_coords(im);
    if (!c) return out;
    local.push_back(std::move(*c));
  }
  out.map = verify_algebra_map(GeneratorImageMap{p.completed(), local}, corner.algebra);
  return out;
}

}  // namespace

EdgeSpec induction_edge(int n, std::optional<int> m, int sign) {
  auto F = std::make_shared<const PolyFamily>(builtin_family("induction", FamilyParams{n, m, sign}));
  Presentation src = d_presentation(n, m, sign);
  std::optional<int> m1 = m ? std::optional<int>(*m - 1) : std::nullopt;
  Presentation low = d_presentation(n - 1, m1, -sign);
  Presentation literal = d_presentation(n - 1, m1, sign);
  Presentation quiver = quiver_presentation();
  Presentation a2 = a2_presentation();
  int n1 = n - 1;
  int nilp = (m && *m <= n) ? 2 * n1 + 2 * *m1 - 3 : 4 * n1 - 2;

  EdgeSpec s = make_spec(*F, {named(src)}, src);
  // x^2 is central; split by x^nilp (x^2 - t^2)^2 = 0 in X = x^2.
  auto split = [F, nilp](const FDAlgebra& A, const Rational& at) {
    Element x = family_element(*F, at, "x");
    Element X = A.multiply(x, x);
    UniPoly p = UniPoly::monomial(Rational(1), std::size_t((nilp + 1) / 2));
    UniPoly q = pow(linear(at * at), 2);
    Element e1 = crt_idempotent(A, X, p, q);
    return std::pair{e1, sub(A.unit(), e1)};
  };
  s.claims = [F, src, low, quiver, split](const FDAlgebra& A, const Rational& at) {
    if (at.is_zero()) return source_claim(*F, src, {"x", "y"});
    auto [e1, e2] = split(A, at);
    Element x = family_element(*F, at, "x");
    Element y = family_element(*F, at, "y");
    Element u = scale(A.multiply(A.multiply(x, x), e1), (at * at).inverse());
    Element y1 = scale(A.multiply(A.multiply(y, inverse_sqrt_one_minus(A, e1, u)), e1), at.inverse());
    FiberClaim c;
    c.blocks.push_back(BlockClaim::named(low, {A.multiply(x, e1), y1},
                                         "x -> x e1, y -> t^-1 y (1 - x^2/t^2)^(-1/2) e1", e1, "e1"));
    UniPoly xm = pow(linear(at), 2);
    UniPoly xp = pow(linear(-at), 2);
    Element ep = A.multiply(e2, crt_idempotent(A, x, xm, xp));
    Element em = sub(e2, ep);
    c.blocks.push_back(BlockClaim::named(quiver, {ep, A.multiply(A.multiply(ep, y), em), A.multiply(A.multiply(em, y), ep)},
                                         "e -> e+, a -> e+ y e-, b -> e- y e+", e2, "e2"));
    return c;
  };
  s.aux = [F, literal, a2, split](const FDAlgebra& A, const Rational& at) {
    auto [e1, e2] = split(A, at);
    Element x = family_element(*F, at, "x");
    Element y = family_element(*F, at, "y");
    Element d = sub(A.multiply(x, x), scale(A.unit(), at * at));
    Element dinv = A.multiply(inverse(A, add(A.multiply(d, e1), e2)), e1);
    std::vector<AuxCheck> out;
    out.push_back(aux_map(A, e1, literal, {A.multiply(x, e1), A.multiply(A.multiply(y, dinv), e1)},
                          "x -> x e1, y -> y (x^2 - t^2)^-1 e1"));
    out.push_back(aux_map(A, e2, a2, {scale(A.multiply(x, e2), at.inverse()), A.multiply(y, e2)},
                          "x -> x e2 / t, y -> y e2"));
    return out;
  };
  return s;
}

EdgeSpec dn1_edge(int n, int sign) {
  auto F = std::make_shared<const PolyFamily>(builtin_family("dn1", FamilyParams{n, 1, sign}));
  Presentation src = d_presentation(n, 1, sign);
  EdgeSpec s = make_spec(*F, {named(src)}, src);
  GeometricType T;
  T.counts[2] = std::size_t(n - 1);
  T.counts[1] = 2;
  s.claims = [F, src, T](const FDAlgebra&, const Rational& at) {
    if (at.is_zero()) return source_claim(*F, src, {"x", "y"});
    return FiberClaim{{BlockClaim::semisimple(T)}};
  };
  return s;
}

EdgeSpec d1inf_edge(std::optional<int> m, int sign) {
  auto F = std::make_shared<const PolyFamily>(builtin_family("d1inf"));
  Presentation src = d_presentation(1, m, sign);
  EdgeSpec s = make_spec(*F, {named(src)}, src);
  std::string xim = sign > 0 ? "-y^2" : "y^2";
  s.claims = [F, src, xim](const FDAlgebra&, const Rational& at) {
    if (at.is_zero()) return source_claim(*F, src, {xim, "y"});
    return FiberClaim{{BlockClaim::semisimple(GeometricType::parse("{1:3}"))}};
  };
  return s;
}

namespace {

EdgeSpec semisimple_edge(PolyFamily family, const Presentation& src, std::vector<std::string> images,
                         const GeometricType& T) {
  auto F = std::make_shared<const PolyFamily>(std::move(family));
  EdgeSpec s = make_spec(*F, {named(src)}, src);
  s.claims = [F, src, images, T](const FDAlgebra&, const Rational& at) {
    if (at.is_zero()) return source_claim(*F, src, images);
    return FiberClaim{{BlockClaim::semisimple(T)}};
  };
  return s;
}

}  // namespace

EdgeSpec quiver_edge() {
  return semisimple_edge(builtin_family("quiver"), quiver_presentation(), {"e", "a", "b"},
                         GeometricType::parse("{2:1, 1:2}"));
}

EdgeSpec aprime_edge() {
  return semisimple_edge(builtin_family("aprime"), aprime_presentation(), {"x", "y"}, GeometricType::parse("{2:1}"));
}

EdgeSpec parabola_edge() {
  return semisimple_edge(builtin_family("parabola"), a_presentation(3), {"0", "x"}, GeometricType::parse("{1:2}"));
}

EdgeSpec an_edge(int n) {
  GeometricType T;
  T.counts[1] = std::size_t(n - 1);
  return semisimple_edge(builtin_family("an", FamilyParams{n, {}, 1}), a_presentation(n), {"x", "y"}, T);
}

EdgeSpec a2_edge() {
  auto F = std::make_shared<const PolyFamily>(builtin_family("a2"));
  Presentation src = a2_presentation();
  Presentation ap = aprime_presentation();
  EdgeSpec s = make_spec(*F, {named(src)}, src);
  s.special_at = Rational(1);
  s.claims = [F, src, ap](const FDAlgebra& A, const Rational& at) {
    if (at == Rational(1)) return source_claim(*F, src, {"x", "y"}, at);
    Element x = family_element(*F, at, "x");
    Element y = family_element(*F, at, "y");
    Element X = A.multiply(x, x);
    Element e = scale(sub(X, scale(A.unit(), at)), (Rational(1) - at).inverse());
    FiberClaim c;
    c.blocks.push_back(BlockClaim::named(ap, {A.multiply(x, e), A.multiply(y, e)}, "x -> x e, y -> y e", e,
                                         "(x^2 - t)/(1 - t)"));
    c.blocks.push_back(BlockClaim::semisimple(GeometricType::parse("{1:2}"), sub(A.unit(), e), "1 - e"));
    return c;
  };
  return s;
}

EdgeSpec trivial_edge(const Presentation& p, const GeometricType& type) {
  PolyFamily F = constant_family(p.name(), p.algebra());
  EdgeSpec s;
  s.source = p.algebra();
  s.sources = {named(p)};
  s.family = F;
  std::vector<Element> ims;
  for (const auto& g : p.alphabet().names()) ims.push_back(presentation_element(p, g));
  s.claims = [p, type, ims](const FDAlgebra&, const Rational& at) {
    if (at.is_zero()) return FiberClaim{{BlockClaim::named(p, ims, "identity")}};
    return FiberClaim{{BlockClaim::semisimple(type)}};
  };
  return s;
}

}  // namespace cadef
