#include "cadef_cli/presets.hpp"

#include <charconv>

#include "cadef/families/evidence.hpp"

namespace cadef::cli {

std::optional<int> parse_index(const std::string& text) {
  if (text == "inf") return std::nullopt;
  int v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || v < 1)
    throw Error(ErrorCode::OutOfRange, "'" + text + "' is not a positive index or 'inf'");
  return v;
}

namespace {

int parse_int(const std::string& text) {
  auto v = parse_index(text);
  if (!v) throw Error(ErrorCode::OutOfRange, "an integer is required, not 'inf'");
  return *v;
}

int parse_sign(const std::vector<std::string>& t, std::size_t i) {
  if (t.size() <= i) return 1;
  if (t[i] == "+") return 1;
  if (t[i] == "-") return -1;
  throw Error(ErrorCode::OutOfRange, "sign must be + or -, not '" + t[i] + "'");
}

void arity(const std::vector<std::string>& t, std::size_t lo, std::size_t hi) {
  if (t.size() < lo || t.size() > hi)
    throw Error(ErrorCode::OutOfRange, "preset " + t[0] + " takes " + std::to_string(lo - 1) + " to " +
                                           std::to_string(hi - 1) + " arguments");
}

}  // namespace

std::string preset_list() {
  return "presentations: d N M|inf [+|-], a N, a2, aprime, m2, quiver, cubic; "
         "families: parabola, a2, aprime, dn1 N [+|-], d1inf [M|inf] [+|-], an N, induction N M|inf [+|-], quiver";
}

PresentationPreset presentation_preset(const std::vector<std::string>& t) {
  if (t.empty()) throw Error(ErrorCode::OutOfRange, "empty preset");
  const std::string& k = t[0];
  if (k == "d") {
    arity(t, 3, 4);
    int n = parse_int(t[1]);
    auto m = parse_index(t[2]);
    int sign = parse_sign(t, 3);
    std::optional<ContractionSpec> spec;
    if (sign > 0) spec = ContractionSpec::d(n, m);
    return {d_presentation(n, m, sign), spec};
  }
  if (k == "a") {
    arity(t, 2, 2);
    int n = parse_int(t[1]);
    if (n < 2) throw Error(ErrorCode::OutOfRange, "A_n needs n >= 2");
    return {a_presentation(n), ContractionSpec::a(n)};
  }
  arity(t, 1, 1);
  if (k == "a2") return {a2_presentation(), std::nullopt};
  if (k == "aprime") return {aprime_presentation(), std::nullopt};
  if (k == "m2") return {m2_presentation(), std::nullopt};
  if (k == "quiver") return {quiver_presentation(), std::nullopt};
  if (k == "cubic") return {truncated_cubic_presentation(), std::nullopt};
  throw Error(ErrorCode::OutOfRange, "unknown presentation preset '" + k + "'");
}

FamilyPreset family_preset(const std::vector<std::string>& t) {
  if (t.empty()) throw Error(ErrorCode::OutOfRange, "empty preset");
  const std::string& k = t[0];
  FamilyPreset out;
  if (k == "dn1") {
    arity(t, 2, 3);
    int n = parse_int(t[1]);
    if (n < 2) throw Error(ErrorCode::OutOfRange, "dn1 needs n >= 2");
    out.edge = dn1_edge(n, parse_sign(t, 2));
  } else if (k == "d1inf") {
    arity(t, 1, 3);
    std::optional<int> m;
    if (t.size() > 1) m = parse_index(t[1]);
    if (m && *m < 2) throw Error(ErrorCode::OutOfRange, "d1inf needs m >= 2");
    out.edge = d1inf_edge(m, parse_sign(t, 2));
  } else if (k == "an") {
    arity(t, 2, 2);
    int n = parse_int(t[1]);
    if (n < 2) throw Error(ErrorCode::OutOfRange, "an needs n >= 2");
    out.edge = an_edge(n);
    out.touches_a = true;
  } else if (k == "induction") {
    arity(t, 3, 4);
    int n = parse_int(t[1]);
    auto m = parse_index(t[2]);
    if (n < 2 || (m && *m < 2)) throw Error(ErrorCode::OutOfRange, "induction needs n, m >= 2");
    out.edge = induction_edge(n, m, parse_sign(t, 3));
  } else {
    arity(t, 1, 1);
    if (k == "parabola") out.edge = parabola_edge();
    else if (k == "a2") out.edge = a2_edge();
    else if (k == "aprime") out.edge = aprime_edge();
    else if (k == "quiver") out.edge = quiver_edge();
    else throw Error(ErrorCode::OutOfRange, "unknown family preset '" + k + "'");
  }
  out.family = out.edge.family;
  return out;
}

}  // namespace cadef::cli
