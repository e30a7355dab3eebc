#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cadef/exactnum/unipoly.hpp"

namespace cadef::ncgb {

/// Generator indices; the empty word is the monomial 1.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Names of the generators of a free algebra, in index order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a generator name, or -1.
  int find(const std::string& name) const;

  /// "1", "x", "x^2*y", "y*x" ...
  std::string render(const Word& w) const;
  Word parse_word(const std::string& text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);
Word power(Letter g, std::size_t k);
/// Position of the first occurrence of `needle` in `hay`, or npos.
std::size_t find_subword(const Word& hay, const Word& needle, std::size_t from = 0);

/// Weighted degree-lexicographic order. Words compare by total weight, then
/// by length, then left-to-right by letter precedence.
class WeightedDeglexOrder {
 public:
  WeightedDeglexOrder() = default;
  /// `precedence[i]` ranks letter i in the lexicographic tie-break (larger
  /// rank means larger letter).
  WeightedDeglexOrder(std::vector<std::uint64_t> weights, std::vector<int> precedence);

  /// Heavy-last-generator order: every generator has weight 1 except the
  /// last, which gets `heavy`; precedence follows index order.
  static WeightedDeglexOrder heavy_last(std::size_t generators, std::uint64_t heavy);

  std::uint64_t weight(const Word& w) const;
  std::strong_ordering compare(const Word& u, const Word& v) const;
  bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }

  const std::vector<std::uint64_t>& weights() const { return weights_; }
  const std::vector<int>& precedence() const { return precedence_; }

 private:
  std::vector<std::uint64_t> weights_;
  std::vector<int> precedence_;
};

enum class Cmp { LT, EQ, GT };
Cmp order_compare(const WeightedDeglexOrder& order, const Word& u, const Word& v);

/// Noncommutative polynomial with coefficients in Q[t]. A coefficient that is
/// a constant polynomial represents a plain rational coefficient.
class NCPoly {
 public:
  using Terms = std::map<Word, UniPoly>;

  NCPoly() = default;
  NCPoly(const UniPoly& c);  // NOLINT(google-explicit-constructor)
  static NCPoly monomial(const Word& w, const UniPoly& c = UniPoly(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  UniPoly coeff(const Word& w) const;
  void add_term(const Word& w, const UniPoly& c);

  /// True when every coefficient is a constant.
  bool has_constant_coefficients() const;
  std::size_t max_length() const;
  /// Largest word under the order; the polynomial must be nonzero.
  const Word& leading_word(const WeightedDeglexOrder& order) const;

  NCPoly operator-() const;
  friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly scaled(const UniPoly& c) const;
  /// a * this * b for words a, b.
  NCPoly sandwich(const Word& left, const Word& right) const;
  /// Substitutes t := at in every coefficient.
  NCPoly specialize(const Rational& at) const;

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  /// Terms in decreasing order under `order` when given, else shortlex.
  std::string to_string(const Alphabet& alphabet, const std::string& parameter = "t",
                        const WeightedDeglexOrder* order = nullptr) const;

 private:
  Terms terms_;
};

NCPoly pow(const NCPoly& base, unsigned exponent);

}  // namespace cadef::ncgb
