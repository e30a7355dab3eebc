#include "cadef/ncgb/ncpoly.hpp"

#include <algorithm>
#include <numeric>

#include "cadef/error.hpp"

namespace cadef::ncgb {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 255) throw Error(ErrorCode::InvalidInput, "too many generators");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(ErrorCode::InvalidInput, "empty generator name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw Error(ErrorCode::InvalidInput, "duplicate generator " + names_[i]);
  }
}

int Alphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return int(i);
  return -1;
}

std::string Alphabet::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += names_.at(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Word Alphabet::parse_word(const std::string& text) const {
  Word w;
  if (text == "1" || text.empty()) return w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string::npos) end = text.size();
    std::string factor = text.substr(pos, end - pos);
    std::size_t caret = factor.find('^');
    std::string name = factor.substr(0, caret);
    std::size_t k = caret == std::string::npos ? 1 : std::stoul(factor.substr(caret + 1));
    int g = find(name);
    if (g < 0) throw SyntaxError(ErrorCode::UnknownSymbol, pos, "unknown generator '" + name + "'");
    w.insert(w.end(), k, Letter(g));
    pos = end + 1;
  }
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word concat(const Word& a, const Word& b, const Word& c) {
  Word w;
  w.reserve(a.size() + b.size() + c.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

Word power(Letter g, std::size_t k) { return Word(k, g); }

std::size_t find_subword(const Word& hay, const Word& needle, std::size_t from) {
  if (needle.size() > hay.size()) return std::string::npos;
  auto it = std::search(hay.begin() + std::ptrdiff_t(std::min(from, hay.size())), hay.end(), needle.begin(),
                        needle.end());
  return it == hay.end() && !needle.empty() ? std::string::npos : std::size_t(it - hay.begin());
}

WeightedDeglexOrder::WeightedDeglexOrder(std::vector<std::uint64_t> weights, std::vector<int> precedence)
    : weights_(std::move(weights)), precedence_(std::move(precedence)) {
  if (weights_.size() != precedence_.size()) throw Error(ErrorCode::InvalidInput, "order arity mismatch");
  for (auto w : weights_)
    if (w == 0) throw Error(ErrorCode::InvalidInput, "monomial order weights must be positive");
}

WeightedDeglexOrder WeightedDeglexOrder::heavy_last(std::size_t generators, std::uint64_t heavy) {
  std::vector<std::uint64_t> w(generators, 1);
  if (generators > 0) w.back() = heavy;
  std::vector<int> p(generators);
  std::iota(p.begin(), p.end(), 0);
  return {std::move(w), std::move(p)};
}

std::uint64_t WeightedDeglexOrder::weight(const Word& w) const {
  std::uint64_t s = 0;
  for (auto g : w) s += weights_.at(g);
  return s;
}

std::strong_ordering WeightedDeglexOrder::compare(const Word& u, const Word& v) const {
  if (auto c = weight(u) <=> weight(v); c != 0) return c;
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == v[i]) continue;
    return precedence_[u[i]] <=> precedence_[v[i]];
  }
  return std::strong_ordering::equal;
}

Cmp order_compare(const WeightedDeglexOrder& order, const Word& u, const Word& v) {
  auto c = order.compare(u, v);
  if (c < 0) return Cmp::LT;
  if (c > 0) return Cmp::GT;
  return Cmp::EQ;
}

NCPoly::NCPoly(const UniPoly& c) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

NCPoly NCPoly::monomial(const Word& w, const UniPoly& c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(w, c);
  return p;
}

UniPoly NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? UniPoly() : it->second;
}

void NCPoly::add_term(const Word& w, const UniPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool NCPoly::has_constant_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_constant(); });
}

std::size_t NCPoly::max_length() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.size());
  return m;
}

const Word& NCPoly::leading_word(const WeightedDeglexOrder& order) const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroInput, "leading word of zero polynomial");
  const Word* best = &terms_.begin()->first;
  for (const auto& [w, c] : terms_)
    if (order.less(*best, w)) best = &w;
  return *best;
}

NCPoly NCPoly::operator-() const { return scaled(UniPoly(-1)); }

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
  NCPoly r = a;
  r += b;
  return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
  NCPoly r = a;
  r -= b;
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
  return r;
}

NCPoly NCPoly::scaled(const UniPoly& c) const {
  NCPoly r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.add_term(w, x * c);
  return r;
}

NCPoly NCPoly::sandwich(const Word& left, const Word& right) const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(concat(left, w, right), c);
  return r;
}

NCPoly NCPoly::specialize(const Rational& at) const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.add_term(w, UniPoly(c.eval(at)));
  return r;
}

std::string NCPoly::to_string(const Alphabet& alphabet, const std::string& parameter,
                              const WeightedDeglexOrder* order) const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> items;
  for (const auto& t : terms_) items.push_back(&t);
  if (order != nullptr) {
    std::sort(items.begin(), items.end(), [&](auto a, auto b) { return order->less(b->first, a->first); });
  } else {
    std::reverse(items.begin(), items.end());
  }
  std::string out;
  for (const auto* item : items) {
    const auto& [w, c] = *item;
    std::string word = w.empty() ? "" : alphabet.render(w);
    std::string coef;
    bool negative = false;
    if (c.is_constant()) {
      Rational v = c.constant_term();
      negative = v.sign() < 0;
      Rational mag = negative ? -v : v;
      if (!mag.is_one() || w.empty()) coef = mag.to_string();
    } else {
      coef = "(" + c.to_string(parameter) + ")";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coef;
    if (!coef.empty() && !word.empty()) out += "*";
    out += word;
  }
  return out;
}

NCPoly pow(const NCPoly& base, unsigned exponent) {
  NCPoly r(UniPoly(1));
  for (unsigned i = 0; i < exponent; ++i) r = r * base;
  return r;
}

}  // namespace cadef::ncgb
