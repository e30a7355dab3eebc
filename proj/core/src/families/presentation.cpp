#include "cadef/families/presentation.hpp"

#include "cadef/ncgb/parse.hpp"

namespace cadef {

Presentation::Presentation(std::string name, std::vector<std::string> generators, std::vector<std::string> relations,
                           std::size_t degree_bound)
    : name_(std::move(name)),
      alphabet_(std::move(generators)),
      texts_(std::move(relations)),
      bound_(degree_bound),
      cache_(std::make_shared<Cache>()) {
  for (const auto& r : texts_) relations_.push_back(ncgb::parse_ncpoly(r, alphabet_));
}

ncgb::WeightedDeglexOrder Presentation::order() const {
  return ncgb::WeightedDeglexOrder::heavy_last(alphabet_.size(), bound_ + 1);
}

const ncgb::RewritingSystem& Presentation::completed() const& {
  if (!cache_->completed)
    cache_->completed = ncgb::complete(ncgb::RewritingSystem::from_relations(alphabet_, order(), bound_, relations_));
  return *cache_->completed;
}

const FDAlgebra& Presentation::algebra() const& {
  if (!cache_->algebra) cache_->algebra = ncgb::quotient_algebra(completed());
  return *cache_->algebra;
}

Element presentation_element(const Presentation& p, const ncgb::NCPoly& poly) {
  ncgb::Reducer red(p.completed());
  ncgb::Quotient q;
  q.basis = ncgb::normal_monomials(p.completed());
  Element out;
  for (const auto& c : q.coordinates(poly, red)) {
    if (!c.is_constant()) throw Error(ErrorCode::InvalidInput, "element depends on the parameter");
    out.push_back(c.constant_term());
  }
  return out;
}

Element presentation_element(const Presentation& p, const std::string& text) {
  return presentation_element(p, ncgb::parse_ncpoly(text, p.alphabet()));
}

namespace {

std::string xpow(int e) {
  if (e == 0) return "1";
  if (e == 1) return "x";
  return "x^" + std::to_string(e);
}

}  // namespace

std::string d_name(int n, std::optional<int> m, int sign) {
  std::string s = sign > 0 ? "D" : "D-";
  return s + "(" + std::to_string(n) + "," + (m ? std::to_string(*m) : std::string("inf")) + ")";
}

std::size_t d_default_bound(int n, std::optional<int> m) {
  int mm = m ? *m : 2 * n;
  return std::size_t(2 * (2 * n + 2 * mm));
}

Presentation d_presentation(int n, std::optional<int> m, int sign, std::optional<std::size_t> bound) {
  std::string sg = sign > 0 ? " + " : " - ";
  std::vector<std::string> rels{"x*y + y*x"};
  if (m) {
    rels.push_back("y^2" + sg + "(" + xpow(2 * n - 1) + " + " + xpow(2 * *m - 2) + ")");
    rels.push_back(*m <= n ? xpow(2 * n + 2 * *m - 3) : xpow(4 * n - 2));
  } else {
    rels.push_back("y^2" + sg + xpow(2 * n - 1));
    rels.push_back(xpow(4 * n - 2));
  }
  return Presentation(d_name(n, m, sign), {"x", "y"}, rels, bound.value_or(d_default_bound(n, m)));
}

Presentation a_presentation(int n) {
  return Presentation("A(" + std::to_string(n) + ")", {"x", "y"}, {"x", "y^" + std::to_string(n - 1)},
                      std::size_t(2 * n + 4));
}

Presentation a2_presentation() {
  return Presentation("A2", {"x", "y"}, {"x*y + y*x", "y^2", "(x^2 - 1)*y", "(x^2 - 1)^2"}, 16);
}

Presentation aprime_presentation() {
  return Presentation("A'", {"x", "y"}, {"x*y + y*x", "y^2", "x^2 - 1"}, 12);
}

Presentation m2_presentation() {
  return Presentation("M2", {"x", "y"}, {"x*y + y*x", "x^2 - 1", "y^2 - 1"}, 12);
}

Presentation quiver_presentation() {
  return Presentation("Q2", {"e", "a", "b"}, {"e^2 - e", "e*a - a", "a*e", "b*e - b", "e*b", "a*b*a", "b*a*b"}, 12);
}

Presentation truncated_cubic_presentation() { return Presentation("k[y]/(y^3)", {"y"}, {"y^3"}, 8); }

}  // namespace cadef
