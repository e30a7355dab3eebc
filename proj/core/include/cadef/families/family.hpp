#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cadef/algstruct/ops.hpp"
#include "cadef/ncgb/rewriting.hpp"

namespace cadef {

/// Free one-parameter family: structure constants in Q[t], fibers by
/// evaluation. `rules` keeps the rewriting system it came from, if any.
struct PolyFamily {
  std::string name;
  PolyAlgebra algebra;
  std::optional<ncgb::RewritingSystem> rules;
  std::vector<ncgb::Word> basis;  // normal words, when rules are present
  std::vector<Rational> excluded;
  std::vector<Rational> samples;

  std::size_t dim() const { return algebra.dim(); }
  bool is_excluded(const Rational& at) const;
};

/// Completes the relations over Q[t] and reads off structure constants.
/// Throws NonUnitLeadingCoefficient, DegreeBoundExceeded,
/// PossiblyInfiniteDimensional.
PolyFamily family_from_relations(const std::string& name, const ncgb::Alphabet& alphabet,
                                 const std::vector<ncgb::NCPoly>& relations, std::size_t degree_bound);
PolyFamily family_from_texts(const std::string& name, const std::vector<std::string>& generators,
                             const std::string& parameter, const std::vector<std::string>& relations,
                             std::size_t degree_bound);

bool verify_family(const PolyFamily& F);
/// Fiber coordinates of a polynomial in the family's generators at t = at.
Element family_element(const PolyFamily& F, const Rational& at, const ncgb::NCPoly& p);
Element family_element(const PolyFamily& F, const Rational& at, const std::string& text);
FDAlgebra fiber(const PolyFamily& F, const Rational& at);
/// Fiber recomputed from the specialized rewriting rules.
FDAlgebra fiber_from_rules(const PolyFamily& F, const Rational& at);

PolyFamily product_family(const PolyFamily& a, const PolyFamily& b);
/// G(t) = F(t + c): excluded and sample points move by -c. Rules are dropped.
PolyFamily shift_family(const PolyFamily& F, const Rational& c);
PolyFamily constant_family(const std::string& name, const FDAlgebra& A);

struct FamilyParams {
  int n = 0;
  std::optional<int> m;  // absent means infinity
  int sign = 1;
};

/// Names: parabola, a2, aprime, dn1(n[, sign]), d1inf, an(n),
/// induction(n, m | inf[, sign]), quiver. Throws OutOfRange.
PolyFamily builtin_family(const std::string& name, const FamilyParams& params = {});
std::vector<std::string> builtin_family_names();

/// Blocks of A by central primitive idempotents (idempotents of the centre
/// modulo its radical, lifted exactly).
struct FiberBlock {
  Element idempotent;
  FDAlgebra algebra;
  UniPoly residue_field;
};
std::vector<FiberBlock> fiber_blocks(const FDAlgebra& A);

}  // namespace cadef
