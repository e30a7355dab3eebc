#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cadef/ncgb/ncpoly.hpp"

namespace cadef::ncgb {

/// Parses a relation such as "x*y + y*x" or "x*(x^2 - t^2)^2".
///
/// Grammar:
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := ['-'] primary ['^' integer]
///   primary := integer ['/' integer] | name | '(' expr ')'
///
/// Names must be generators or the parameter. A name that is not declared
/// but spells a run of single-letter generators ("xy") is read as their
/// product. The parameter commutes with everything; generators do not.
/// Throws SyntaxError (with position) or UnknownSymbol.
NCPoly parse_ncpoly(std::string_view text, const Alphabet& alphabet,
                    const std::optional<std::string>& parameter = std::nullopt);

}  // namespace cadef::ncgb
