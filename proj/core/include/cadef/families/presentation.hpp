#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cadef/algstruct/fdalgebra.hpp"
#include "cadef/ncgb/rewriting.hpp"

namespace cadef {

/// A named finite presentation k<gens>/(relations) with constant
/// coefficients. Completion and the quotient are computed on demand and
/// cached; copies share the cache.
class Presentation {
 public:
  Presentation(std::string name, std::vector<std::string> generators, std::vector<std::string> relations,
               std::size_t degree_bound);

  const std::string& name() const { return name_; }
  const ncgb::Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& relation_texts() const { return texts_; }
  const std::vector<ncgb::NCPoly>& relations() const { return relations_; }
  std::size_t degree_bound() const { return bound_; }
  ncgb::WeightedDeglexOrder order() const;

  const ncgb::RewritingSystem& completed() const&;
  const FDAlgebra& algebra() const&;
  // On temporaries, copies rather than references into a dying cache.
  ncgb::RewritingSystem completed() const&& { return completed(); }
  FDAlgebra algebra() const&& { return algebra(); }

 private:
  struct Cache {
    std::optional<ncgb::RewritingSystem> completed;
    std::optional<FDAlgebra> algebra;
  };
  std::string name_;
  ncgb::Alphabet alphabet_;
  std::vector<std::string> texts_;
  std::vector<ncgb::NCPoly> relations_;
  std::size_t bound_;
  std::shared_ptr<Cache> cache_;
};

/// Coordinates in p.algebra() of a polynomial in the generators.
Element presentation_element(const Presentation& p, const ncgb::NCPoly& poly);
Element presentation_element(const Presentation& p, const std::string& text);

/// Sign-twisted type D presentation: xy + yx, y^2 + sign (x^{2n-1} + x^{2m-2})
/// and x^{2n+2m-3} (m <= n) or x^{4n-2} (m > n); with m absent (infinity) the
/// y^2 relation drops x^{2m-2}. sign = +1 is the contraction algebra D_{n,m}.
Presentation d_presentation(int n, std::optional<int> m, int sign = 1, std::optional<std::size_t> bound = {});
std::string d_name(int n, std::optional<int> m, int sign = 1);
/// Default degree bound 2(2n + 2m), with m = 2n standing in for infinity.
std::size_t d_default_bound(int n, std::optional<int> m);

/// k<x,y>/(x, y^{n-1}).
Presentation a_presentation(int n);
/// A_2 = k<x,y>/(xy+yx, y^2, (x^2-1)y, (x^2-1)^2).
Presentation a2_presentation();
/// A' = k<x,y>/(xy+yx, y^2, x^2-1).
Presentation aprime_presentation();
/// k<x,y>/(xy+yx, x^2-1, y^2-1), the 2x2 matrices.
Presentation m2_presentation();
/// Path algebra of the two-vertex cycle modulo paths of length 3, on an
/// idempotent e and arrows a = e a (1-e), b = (1-e) b e.
Presentation quiver_presentation();
/// k[y]/(y^3).
Presentation truncated_cubic_presentation();

}  // namespace cadef
