#include "cadef/families/family.hpp"

#include <algorithm>

#include "cadef/ncgb/parse.hpp"
#include "cadef/wedderburn/wedderburn.hpp"

namespace cadef {

bool PolyFamily::is_excluded(const Rational& at) const {
  return std::find(excluded.begin(), excluded.end(), at) != excluded.end();
}

PolyFamily family_from_relations(const std::string& name, const ncgb::Alphabet& alphabet,
                                 const std::vector<ncgb::NCPoly>& relations, std::size_t degree_bound) {
  auto order = ncgb::WeightedDeglexOrder::heavy_last(alphabet.size(), degree_bound + 1);
  auto system = ncgb::complete(ncgb::RewritingSystem::from_relations(alphabet, order, degree_bound, relations));
  auto q = ncgb::quotient_structure_constants(system);
  PolyFamily F;
  F.name = name;
  F.algebra = std::move(q.algebra);
  F.basis = std::move(q.basis);
  F.rules = std::move(system);
  F.excluded = {Rational(0)};
  F.samples = {Rational(1), Rational(2)};
  return F;
}

PolyFamily family_from_texts(const std::string& name, const std::vector<std::string>& generators,
                             const std::string& parameter, const std::vector<std::string>& relations,
                             std::size_t degree_bound) {
  ncgb::Alphabet al(generators);
  std::vector<ncgb::NCPoly> ps;
  for (const auto& r : relations) ps.push_back(ncgb::parse_ncpoly(r, al, parameter));
  return family_from_relations(name, al, ps, degree_bound);
}

bool verify_family(const PolyFamily& F) { return verify_structure(F.algebra); }

Element family_element(const PolyFamily& F, const Rational& at, const ncgb::NCPoly& p) {
  if (!F.rules) throw Error(ErrorCode::InvalidInput, "family " + F.name + " has no rewriting rules");
  ncgb::RewritingSystem sys = F.rules->specialize(at);
  ncgb::Reducer red(sys);
  ncgb::Quotient q;
  q.basis = F.basis;
  Element out;
  for (const auto& c : q.coordinates(p.specialize(at), red)) out.push_back(c.constant_term());
  return out;
}

Element family_element(const PolyFamily& F, const Rational& at, const std::string& text) {
  if (!F.rules) throw Error(ErrorCode::InvalidInput, "family " + F.name + " has no rewriting rules");
  return family_element(F, at, ncgb::parse_ncpoly(text, F.rules->alphabet(), std::string("t")));
}

FDAlgebra fiber(const PolyFamily& F, const Rational& at) { return specialize(F.algebra, at); }

FDAlgebra fiber_from_rules(const PolyFamily& F, const Rational& at) {
  if (!F.rules) throw Error(ErrorCode::InvalidInput, "family " + F.name + " has no rewriting rules");
  auto q = ncgb::quotient_structure_constants(F.rules->specialize(at));
  return specialize(q.algebra, Rational(0));
}

PolyFamily product_family(const PolyFamily& a, const PolyFamily& b) {
  PolyFamily F;
  F.name = a.name + " x " + b.name;
  F.algebra = direct_product(a.algebra, b.algebra, a.name, b.name);
  F.excluded = a.excluded;
  for (const auto& x : b.excluded)
    if (!F.is_excluded(x)) F.excluded.push_back(x);
  for (const auto* side : {&a.samples, &b.samples})
    for (const auto& x : *side)
      if (!F.is_excluded(x) && std::find(F.samples.begin(), F.samples.end(), x) == F.samples.end())
        F.samples.push_back(x);
  return F;
}

PolyFamily shift_family(const PolyFamily& F, const Rational& c) {
  if (c.is_zero()) return F;
  UniPoly tc({c, Rational(1)});
  PolyFamily G;
  G.name = F.name + "(t" + (c.sign() > 0 ? "+" : "-") + (c.sign() > 0 ? c : -c).to_string() + ")";
  G.algebra = F.algebra.map_coefficients<UniPoly>([&](const UniPoly& p) {
    UniPoly r;
    for (std::size_t i = p.coefficients().size(); i-- > 0;) r = r * tc + UniPoly(p.coeff(i));
    return r;
  });
  G.basis = F.basis;
  for (const auto& x : F.excluded) G.excluded.push_back(x - c);
  for (const auto& x : F.samples) G.samples.push_back(x - c);
  return G;
}

PolyFamily constant_family(const std::string& name, const FDAlgebra& A) {
  PolyFamily F;
  F.name = name;
  F.algebra = constant_family(A);
  F.samples = {Rational(1), Rational(2)};
  return F;
}

namespace {

std::string xp(int e) {
  if (e == 0) return "1";
  if (e == 1) return "x";
  return "x^" + std::to_string(e);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::OutOfRange, what);
}

}  // namespace

std::vector<std::string> builtin_family_names() {
  return {"parabola", "a2", "aprime", "dn1", "d1inf", "an", "induction", "quiver"};
}

PolyFamily builtin_family(const std::string& name, const FamilyParams& p) {
  PolyFamily F;
  if (name == "parabola") {
    F = family_from_texts(name, {"x"}, "t", {"x^2 - t"}, 6);
  } else if (name == "a2") {
    F = family_from_texts(name, {"x", "y"}, "t", {"x*y + y*x", "y^2", "(x^2 - 1)*y", "(x^2 - 1)*(x^2 - t)"}, 16);
    F.excluded = {Rational(0), Rational(1)};
    F.samples = {Rational(4), Rational(9)};
  } else if (name == "aprime") {
    F = family_from_texts(name, {"x", "y"}, "t", {"x*y + y*x", "y^2 - t", "x^2 - 1"}, 12);
  } else if (name == "dn1") {
    require(p.n >= 2, "dn1 needs n >= 2");
    std::string y2 = p.sign > 0 ? "y^2 + 1" : "y^2 - 1";
    F = family_from_texts(name + "(" + std::to_string(p.n) + (p.sign > 0 ? ",+" : "") + ")", {"x", "y"}, "t",
                          {"x*y + y*x", y2, "x*(" + xp(2 * p.n - 2) + " - t^" + std::to_string(2 * p.n - 2) + ")"},
                          std::size_t(8 * p.n + 4));
  } else if (name == "d1inf") {
    F = family_from_texts(name, {"y"}, "t", {"y*(y - t)*(y + t)"}, 8);
  } else if (name == "an") {
    require(p.n >= 2, "an needs n >= 2");
    std::string prod = "y";
    for (int i = 1; i <= p.n - 2; ++i) prod += "*(y - " + std::to_string(i) + "*t)";
    F = family_from_texts(name + "(" + std::to_string(p.n) + ")", {"x", "y"}, "t", {"x", prod},
                          std::size_t(2 * p.n + 4));
  } else if (name == "induction") {
    require(p.n >= 2 && (!p.m || *p.m >= 2), "induction needs n, m >= 2");
    int n1 = p.n - 1;
    std::string sg = p.sign > 0 ? " + " : " - ";
    std::string nilp;
    std::string y2;
    if (p.m) {
      int m1 = *p.m - 1;
      nilp = *p.m <= p.n ? xp(2 * n1 + 2 * m1 - 3) : xp(4 * n1 - 2);
      y2 = "y^2" + sg + "(" + xp(2 * n1 - 1) + "*(x^2 - t^2) + " + xp(2 * m1 - 2) + "*(x^2 - t^2))";
    } else {
      nilp = xp(4 * n1 - 2);
      y2 = "y^2" + sg + xp(2 * n1 - 1) + "*(x^2 - t^2)";
    }
    std::string label = "induction(" + std::to_string(p.n) + "," + (p.m ? std::to_string(*p.m) : "inf") +
                        (p.sign > 0 ? "" : ",-") + ")";
    int mm = p.m ? *p.m : 2 * p.n;
    F = family_from_texts(label, {"x", "y"}, "t",
                          {"x*y + y*x", nilp + "*(x^2 - t^2)^2", xp(2 * n1 - 1) + "*(x^2 - t^2)*y", y2},
                          std::size_t(4 * (p.n + mm) + 4));
    F.excluded = {Rational(0), Rational(1), Rational(-1)};
    F.samples = {Rational(2), Rational(3)};
    return F;
  } else if (name == "quiver") {
    F = family_from_texts(name, {"e", "a", "b"}, "t",
                          {"e^2 - e", "e*a - a", "a*e", "b*e - b", "e*b", "a*b*a - t*a", "b*a*b - t*b"}, 12);
  } else {
    throw Error(ErrorCode::OutOfRange, "unknown family '" + name + "'");
  }
  F.samples.erase(std::remove_if(F.samples.begin(), F.samples.end(), [&](const Rational& x) { return F.is_excluded(x); }),
                  F.samples.end());
  return F;
}

std::vector<FiberBlock> fiber_blocks(const FDAlgebra& A) {
  CentralSplitting sp = central_splitting(A);
  std::vector<FiberBlock> out;
  for (std::size_t i = 0; i < sp.idempotents.size(); ++i) {
    Corner c = corner_algebra(A, sp.idempotents[i]);
    out.push_back(FiberBlock{sp.idempotents[i], std::move(c.algebra), sp.residue_fields[i]});
  }
  return out;
}

}  // namespace cadef
