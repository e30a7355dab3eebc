#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cadef/algstruct/fdalgebra.hpp"
#include "cadef/ncgb/ncpoly.hpp"

namespace cadef::ncgb {

/// Oriented rule lead -> -tail; the relation it encodes is lead + tail.
struct Rule {
  Word lead;
  NCPoly tail;
  NCPoly relation() const { return NCPoly::monomial(lead) + tail; }
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// A rewriting system over Q[t] coefficients with leading coefficient 1 on
/// every rule. Words longer than the degree bound are never produced; if a
/// reduction would need one, DegreeBoundExceeded is raised.
class RewritingSystem {
 public:
  RewritingSystem() = default;
  RewritingSystem(Alphabet alphabet, WeightedDeglexOrder order, std::size_t degree_bound, std::vector<Rule> rules);

  /// Orients and normalizes relations without completing. Throws
  /// NonUnitLeadingCoefficient when a leading coefficient is not a nonzero
  /// constant.
  static RewritingSystem from_relations(const Alphabet& alphabet, const WeightedDeglexOrder& order,
                                        std::size_t degree_bound, const std::vector<NCPoly>& relations);

  const Alphabet& alphabet() const { return alphabet_; }
  const WeightedDeglexOrder& order() const { return order_; }
  std::size_t degree_bound() const { return degree_bound_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::vector<NCPoly> relations() const;
  std::vector<Word> leading_words() const;

  /// True if some rule's leading word occurs in w.
  bool reducible(const Word& w) const;

  /// Substitutes t := at in every rule (leading coefficients stay 1).
  RewritingSystem specialize(const Rational& at) const;
  bool has_constant_coefficients() const;

  friend bool operator==(const RewritingSystem& a, const RewritingSystem& b) { return a.rules_ == b.rules_; }

 private:
  Alphabet alphabet_;
  WeightedDeglexOrder order_;
  std::size_t degree_bound_ = 0;
  std::vector<Rule> rules_;
};

/// Memoizing normal-form evaluator bound to one rewriting system. Not
/// thread-safe; create one per thread.
class Reducer {
 public:
  explicit Reducer(const RewritingSystem& system) : system_(&system) {}
  NCPoly reduce(const NCPoly& p);
  const NCPoly& reduce_word(const Word& w);

 private:
  struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
      return std::hash<std::string_view>{}(
          std::string_view(reinterpret_cast<const char*>(w.data()), w.size()));
    }
  };
  const RewritingSystem* system_;
  std::unordered_map<Word, NCPoly, WordHash> memo_;
};

NCPoly normal_form(const NCPoly& p, const RewritingSystem& system);

/// Overlap or inclusion ambiguity between two rules, with the two one-step
/// rewrites of the ambiguous word.
struct CriticalPair {
  Word word;
  NCPoly reduction1;
  NCPoly reduction2;
  std::size_t rule1 = 0;
  std::size_t rule2 = 0;
  bool inclusion = false;
};

std::vector<CriticalPair> critical_pairs(const RewritingSystem& system);

/// Diamond-lemma check: every critical pair within the bound resolves.
bool verify_confluent(const RewritingSystem& system);

/// Pairwise overlap completion with interreduction. Throws
/// NonUnitLeadingCoefficient when a new rule cannot be made monic over Q[t].
RewritingSystem complete(const RewritingSystem& system);

/// Fully interreduces: no leading word contains another, tails are normal.
RewritingSystem interreduce(const RewritingSystem& system);

/// Irreducible words of length <= bound in increasing order. Throws
/// PossiblyInfiniteDimensional if any irreducible word reaches the bound.
std::vector<Word> normal_monomials(const RewritingSystem& system);

/// Structure constants of the quotient on the normal-monomial basis
/// (word 1 first). Coefficients stay in Q[t].
struct Quotient {
  std::vector<Word> basis;
  PolyAlgebra algebra;
  /// Coordinates of an arbitrary polynomial in the normal basis.
  std::vector<UniPoly> coordinates(const NCPoly& p, Reducer& reducer) const;
};

Quotient quotient_structure_constants(const RewritingSystem& system);

/// Plain rational structure constants; throws if some constant depends on t.
FDAlgebra quotient_algebra(const RewritingSystem& system);

}  // namespace cadef::ncgb
