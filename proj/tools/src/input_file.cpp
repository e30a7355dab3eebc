#include "cadef_cli/input_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "cadef/ncgb/parse.hpp"

namespace cadef::cli {

namespace {

struct Value {
  bool is_list = false;
  std::string scalar;
  std::vector<std::string> items;
  std::size_t pos = 0;
};

class Reader {
 public:
  explicit Reader(const std::string& text) : s_(text) {}

  [[noreturn]] void fail(std::size_t pos, const std::string& what) const {
    std::size_t line = 1 + std::size_t(std::count(s_.begin(), s_.begin() + std::ptrdiff_t(pos), '\n'));
    std::size_t bol = s_.rfind('\n', pos == 0 ? 0 : pos - 1);
    std::size_t col = pos - (bol == std::string::npos || pos == 0 ? 0 : bol + 1) + 1;
    throw SyntaxError(ErrorCode::SyntaxError, pos,
                      what + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")");
  }

  // Skips blanks and comments; newlines too when `lines` is set.
  void skip(bool lines) {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else if (c == ' ' || c == '\t' || c == '\r' || (lines && c == '\n')) {
        ++i_;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip(true);
    return i_ >= s_.size();
  }

  std::pair<std::string, std::size_t> key() {
    skip(true);
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (start == i_) fail(start, "expected a key");
    std::string k = s_.substr(start, i_ - start);
    skip(false);
    if (i_ >= s_.size() || s_[i_] != '=') fail(i_, "expected '=' after " + k);
    ++i_;
    return {k, start};
  }

  Value value() {
    skip(false);
    Value v;
    v.pos = i_;
    if (i_ < s_.size() && s_[i_] == '[') {
      v.is_list = true;
      ++i_;
      skip(true);
      if (i_ < s_.size() && s_[i_] == ']') {
        ++i_;
      } else {
        for (;;) {
          v.items.push_back(atom());
          skip(true);
          if (i_ < s_.size() && s_[i_] == ',') {
            ++i_;
            skip(true);
            if (i_ < s_.size() && s_[i_] == ']') {  // trailing comma
              ++i_;
              break;
            }
            continue;
          }
          if (i_ < s_.size() && s_[i_] == ']') {
            ++i_;
            break;
          }
          fail(i_, "expected ',' or ']'");
        }
      }
    } else {
      v.scalar = atom();
    }
    skip(false);
    if (i_ < s_.size() && s_[i_] != '\n') fail(i_, "unexpected text after value");
    return v;
  }

 private:
  std::string atom() {
    skip(false);
    if (i_ >= s_.size()) fail(i_, "expected a value");
    if (s_[i_] == '"') {
      std::size_t start = ++i_;
      while (i_ < s_.size() && s_[i_] != '"' && s_[i_] != '\n') ++i_;
      if (i_ >= s_.size() || s_[i_] != '"') fail(start - 1, "unterminated string");
      return s_.substr(start, i_++ - start);
    }
    std::size_t start = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != ',' &&
           s_[i_] != ']' && s_[i_] != '#')
      ++i_;
    if (start == i_) fail(start, "expected a value");
    return s_.substr(start, i_ - start);
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

Rational rational_at(const Reader& r, const std::string& text, std::size_t pos) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    r.fail(pos, "'" + text + "' is not a rational number");
  }
}

}  // namespace

InputFile parse_input(const std::string& text) {
  Reader r(text);
  InputFile f;
  std::set<std::string> seen;
  while (!r.done()) {
    auto [k, kpos] = r.key();
    if (!seen.insert(k).second) r.fail(kpos, "duplicate key " + k);
    Value v = r.value();
    auto scalar = [&] {
      if (v.is_list) r.fail(v.pos, k + " takes a single value");
      return v.scalar;
    };
    auto list = [&] {
      if (!v.is_list) r.fail(v.pos, k + " takes a bracketed list");
      return v.items;
    };
    if (k == "name") {
      f.name = scalar();
    } else if (k == "generators") {
      f.generators = list();
      std::set<std::string> distinct(f.generators.begin(), f.generators.end());
      if (distinct.size() != f.generators.size()) r.fail(v.pos, "generator names must be distinct");
      for (const auto& g : f.generators)
        if (g.empty() || !std::all_of(g.begin(), g.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); }))
          r.fail(v.pos, "generator name '" + g + "' must be alphabetic");
    } else if (k == "parameter") {
      f.parameter = scalar();
    } else if (k == "relations") {
      f.relations = list();
    } else if (k == "degree_bound") {
      std::string s = scalar();
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        r.fail(v.pos, "degree_bound must be a positive integer");
      f.degree_bound = std::stoul(s);
    } else if (k == "order") {
      f.order = scalar();
      if (*f.order != "heavy-last") r.fail(v.pos, "unsupported order '" + *f.order + "'");
    } else if (k == "excluded_points") {
      for (const auto& s : list()) f.excluded_points.push_back(rational_at(r, s, v.pos));
    } else if (k == "samples") {
      for (const auto& s : list()) f.samples.push_back(rational_at(r, s, v.pos));
    } else {
      r.fail(kpos, "unknown key " + k);
    }
  }
  if (f.generators.empty()) throw SyntaxError(ErrorCode::SyntaxError, text.size(), "missing generators");
  if (f.relations.empty()) throw SyntaxError(ErrorCode::SyntaxError, text.size(), "missing relations");
  return f;
}

InputFile read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

namespace {

std::size_t default_bound(const InputFile& f) {
  ncgb::Alphabet al(f.generators);
  std::size_t longest = 0;
  for (const auto& r : f.relations) longest = std::max(longest, ncgb::parse_ncpoly(r, al, f.parameter).max_length());
  return 4 * (longest + 2);
}

}  // namespace

Presentation to_presentation(const InputFile& f) {
  if (f.parameter) throw Error(ErrorCode::InvalidInput, "a presentation file cannot declare a parameter");
  return Presentation(f.name.empty() ? "input" : f.name, f.generators, f.relations,
                      f.degree_bound.value_or(default_bound(f)));
}

PolyFamily to_family(const InputFile& f) {
  if (!f.parameter) throw Error(ErrorCode::InvalidInput, "a family file must declare a parameter");
  PolyFamily F = family_from_texts(f.name.empty() ? "input" : f.name, f.generators, *f.parameter, f.relations,
                                   f.degree_bound.value_or(default_bound(f)));
  if (!f.excluded_points.empty()) F.excluded = f.excluded_points;
  F.samples = f.samples.empty() ? std::vector<Rational>{Rational(1), Rational(2)} : f.samples;
  std::erase_if(F.samples, [&](const Rational& x) { return F.is_excluded(x); });
  return F;
}

}  // namespace cadef::cli
