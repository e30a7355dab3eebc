#include "cadef/ncgb/parse.hpp"

#include <cctype>

#include "cadef/error.hpp"

namespace cadef::ncgb {
namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet, const std::optional<std::string>& parameter)
      : text_(text), alphabet_(alphabet), parameter_(parameter) {}

  NCPoly run() {
    skip();
    if (pos_ >= text_.size()) fail("empty expression");
    NCPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(ErrorCode::SyntaxError, pos_, msg); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NCPoly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    NCPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  NCPoly term() {
    NCPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  NCPoly factor() {
    if (accept('-')) return -factor();
    NCPoly base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + unsigned(text_[pos_] - '0');
        if (e > kMaxExponent) fail("exponent too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected exponent");
      base = pow(base, unsigned(e));
    }
    return base;
  }

  NCPoly primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NCPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail(std::string("unexpected '") + c + "'");
  }

  NCPoly number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string lit(text_.substr(start, pos_ - start));
    std::size_t save = pos_;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip();
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) fail("expected denominator");
      lit += "/" + std::string(text_.substr(dstart, pos_ - dstart));
    } else {
      pos_ = save;
    }
    Rational q = Rational::parse(lit);
    return NCPoly(UniPoly(q));
  }

  NCPoly name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
      ++pos_;
    std::string id(text_.substr(start, pos_ - start));
    if (parameter_ && id == *parameter_) return NCPoly(UniPoly::t());
    int g = alphabet_.find(id);
    if (g >= 0) return NCPoly::monomial(Word{Letter(g)});
    // Juxtaposed single-letter symbols, e.g. "xy" or "xt".
    NCPoly acc(UniPoly(1));
    for (std::size_t i = 0; i < id.size(); ++i) {
      std::string one(1, id[i]);
      if (parameter_ && one == *parameter_) {
        acc = acc.scaled(UniPoly::t());
        continue;
      }
      int h = alphabet_.find(one);
      if (h < 0) throw SyntaxError(ErrorCode::UnknownSymbol, start, "unknown symbol '" + id + "'");
      acc = acc * NCPoly::monomial(Word{Letter(h)});
    }
    return acc;
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  const std::optional<std::string>& parameter_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_ncpoly(std::string_view text, const Alphabet& alphabet, const std::optional<std::string>& parameter) {
  return Parser(text, alphabet, parameter).run();
}

}  // namespace cadef::ncgb
