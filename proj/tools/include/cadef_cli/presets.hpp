#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cadef/contraction/contraction.hpp"
#include "cadef/families/certificate.hpp"
#include "cadef/families/family.hpp"

namespace cadef::cli {

/// Presentation presets:
///   d N M | d N inf [+|-]   a N   a2   aprime   m2   quiver   cubic
struct PresentationPreset {
  Presentation presentation;
  std::optional<ContractionSpec> contraction;  // set for a and d with sign +
};
PresentationPreset presentation_preset(const std::vector<std::string>& tokens);

/// Family presets with their deformation evidence:
///   parabola   a2   aprime   dn1 N [+|-]   d1inf [M|inf] [+|-]   an N
///   induction N M|inf [+|-]   quiver
struct FamilyPreset {
  PolyFamily family;
  EdgeSpec edge;
  bool touches_a = false;
};
FamilyPreset family_preset(const std::vector<std::string>& tokens);

std::string preset_list();

/// "inf" or a positive integer. Throws OutOfRange.
std::optional<int> parse_index(const std::string& text);

}  // namespace cadef::cli
