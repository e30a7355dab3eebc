#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cadef/exactnum/rational.hpp"
#include "cadef/families/family.hpp"
#include "cadef/families/presentation.hpp"

namespace cadef::cli {

/// Contents of a presentation or family description file.
///
///   # comment to end of line
///   name = "D(2,2)"
///   generators = [x, y]
///   parameter = t                      # families only
///   relations = ["x*y + y*x", "y^2 + x^3 + x^2", "x^5"]
///   degree_bound = 16
///   order = heavy-last                 # the only order currently accepted
///   excluded_points = [0, 1]           # families only
///   samples = [4, 9]                   # families only
///
/// Values are bare words, integers, p/q rationals, double-quoted strings, or
/// bracketed lists of those; lists may span lines and end with a comma. Keys may appear once.
struct InputFile {
  std::string name;
  std::vector<std::string> generators;
  std::optional<std::string> parameter;
  std::vector<std::string> relations;
  std::optional<std::size_t> degree_bound;
  std::optional<std::string> order;
  std::vector<Rational> excluded_points;
  std::vector<Rational> samples;
};

/// Throws SyntaxError carrying the byte offset; the message names line and
/// column.
InputFile parse_input(const std::string& text);
InputFile read_input_file(const std::string& path);

/// Requires no parameter. Default degree bound: 4 x (longest relation + 2).
Presentation to_presentation(const InputFile& f);
/// Requires a parameter. Excluded points default to {0}; samples to {1, 2}
/// minus the excluded ones.
PolyFamily to_family(const InputFile& f);

}  // namespace cadef::cli
