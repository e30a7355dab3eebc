#include <doctest.h>

#include <random>

#include "cadef/families/presentation.hpp"
#include "cadef/ncgb/parse.hpp"
#include "cadef/ncgb/rewriting.hpp"

using namespace cadef;
using namespace cadef::ncgb;

namespace {

const Alphabet xy({"x", "y"});

RewritingSystem system_of(const std::vector<std::string>& rels, std::size_t bound = 16) {
  std::vector<NCPoly> ps;
  for (const auto& r : rels) ps.push_back(parse_ncpoly(r, xy));
  return RewritingSystem::from_relations(xy, WeightedDeglexOrder::heavy_last(2, bound + 1), bound, ps);
}

Word w(const std::string& s) { return xy.parse_word(s); }

// Every word of length <= bound covered exactly by two overlapping leading
// words, the first starting at 0 and the second ending at the end.
std::size_t brute_overlaps(const std::vector<Word>& leads, std::size_t bound) {
  std::size_t count = 0;
  std::vector<Word> words{{}};
  for (std::size_t len = 1; len <= bound; ++len) {
    std::vector<Word> next;
    for (const auto& u : words)
      for (Letter a = 0; a < 2; ++a) {
        Word v = u;
        v.push_back(a);
        next.push_back(v);
      }
    words = next;
    for (const auto& v : words)
      for (const auto& l1 : leads)
        for (const auto& l2 : leads) {
          if (l1.size() >= len || l2.size() >= len || l1.size() + l2.size() <= len) continue;
          if (!std::equal(l1.begin(), l1.end(), v.begin())) continue;
          if (!std::equal(l2.begin(), l2.end(), v.end() - std::ptrdiff_t(l2.size()))) continue;
          ++count;
        }
  }
  return count;
}

}  // namespace

TEST_CASE("parsing relations") {
  CHECK(parse_ncpoly("x*y + y*x", xy).size() == 2);
  CHECK(parse_ncpoly("x^3 + x^2 + y^2", xy).size() == 3);
  NCPoly p = parse_ncpoly("x*(x^2 - t^2)^2", xy, "t");
  CHECK(p.size() == 3);
  CHECK(p.coeff(w("x^5")) == UniPoly(1));
  CHECK(p.coeff(w("x^3")) == UniPoly::monomial(-2, 2));
  CHECK(p.coeff(w("x")) == UniPoly::monomial(1, 4));
  CHECK(parse_ncpoly("xy", xy) == parse_ncpoly("x*y", xy));
  CHECK_THROWS_AS(parse_ncpoly("x*z", xy), Error);
  CHECK_THROWS_AS(parse_ncpoly("x*(y", xy), SyntaxError);
}

TEST_CASE("heavy-last order") {
  auto ord = WeightedDeglexOrder::heavy_last(2, 100);
  CHECK(ord.compare(w("y^2"), w("x^5")) > 0);
  CHECK(ord.compare(w("y*x"), w("x*y")) > 0);
  CHECK(ord.compare(w("x*y"), w("x*y")) == 0);
}

TEST_CASE("normal forms") {
  auto anti = system_of({"x*y + y*x"});
  CHECK(normal_form(NCPoly::monomial(w("y*x")), anti) == -NCPoly::monomial(w("x*y")));
  auto d22 = d_presentation(2, 2).completed();
  CHECK(normal_form(NCPoly::monomial(w("x^3*y")), d22).is_zero());

  std::mt19937 rng(4);
  std::uniform_int_distribution<int> len(0, 7), letter(0, 1), coeff(-3, 3);
  for (int i = 0; i < 100; ++i) {
    NCPoly p;
    for (int k = 0; k < 4; ++k) {
      Word u;
      for (int j = len(rng); j > 0; --j) u.push_back(Letter(letter(rng)));
      p.add_term(u, UniPoly(coeff(rng)));
    }
    NCPoly n = normal_form(p, d22);
    CHECK(normal_form(n, d22) == n);
    for (const auto& [u, c] : n.terms()) CHECK(!d22.reducible(u));
  }
}

TEST_CASE("critical pairs match brute-force overlap enumeration") {
  auto s = system_of({"y*x", "y^2"}, 6);
  auto pairs = critical_pairs(s);
  std::size_t at_yyx = 0;
  for (const auto& cp : pairs) at_yyx += cp.word == w("y^2*x");
  CHECK(at_yyx == 1);
  CHECK(pairs.size() == brute_overlaps(s.leading_words(), 6));

  auto p5 = system_of({"x^5"}, 12);
  auto self = critical_pairs(p5);
  CHECK(self.size() == 4);
  CHECK(self.size() == brute_overlaps(p5.leading_words(), 12));

  auto d = d_presentation(3, 2).completed();
  std::size_t overlaps = 0;
  for (const auto& cp : critical_pairs(d)) overlaps += !cp.inclusion;
  CHECK(overlaps == brute_overlaps(d.leading_words(), d.degree_bound()));
}

TEST_CASE("confluence checks") {
  CHECK(verify_confluent(system_of({"y^2 + x^3 + x^2", "y*x + x*y", "x^3*y", "x^5"})));
  bool confluent = true;
  try {
    confluent = verify_confluent(system_of({"y*x + x*y", "y^2 + x^3 + x^2"}, 12));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeBoundExceeded);
    confluent = false;
  }
  CHECK_FALSE(confluent);
}

TEST_CASE("completion") {
  auto done = complete(system_of({"x*y + y*x", "x^3 + x^2 + y^2", "x^5"}));
  auto leads = done.leading_words();
  CHECK(std::find(leads.begin(), leads.end(), w("x^3*y")) != leads.end());
  CHECK(verify_confluent(done));

  auto a = system_of({"x", "y^3"});
  CHECK(complete(a).leading_words() == a.leading_words());
}

TEST_CASE("normal monomials and quotients") {
  std::vector<Word> expect;
  for (auto s : {"", "x", "x^2", "x^3", "x^4", "y", "x*y", "x^2*y"}) expect.push_back(s[0] ? w(s) : Word{});
  auto got = normal_monomials(d_presentation(2, 2).completed());
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
  CHECK(normal_monomials(d_presentation(2, 3).completed()).size() == 9);

  auto a4 = a_presentation(4);
  CHECK(a4.algebra().dim() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(a4.algebra().product(i, j) == a4.algebra().product(j, i));
  CHECK(m2_presentation().algebra().dim() == 4);
  CHECK(d_presentation(2, 2).algebra().dim() == 8);
  CHECK_THROWS_AS(normal_monomials(system_of({"x*y + y*x"}, 10)), Error);
}
