// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cadef/contraction/contraction.hpp"
#include "cadef/families/evidence.hpp"
#include "cadef/hochschild/hochschild.hpp"
#include "cadef_cli/app.hpp"
#include "cadef_cli/report.hpp"

using namespace cadef;
using cadef::cli::Json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Json cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run_command(args, out, err);
  return Json::parse(out.str());
}

std::string mstr(std::optional<int> m) { return m ? std::to_string(*m) : "inf"; }

std::size_t table_dim(int n, std::optional<int> m) { return m && *m <= n ? 4 * n + 2 * *m - 4 : 6 * n - 3; }
std::size_t table_centre(int n, std::optional<int> m) { return m && *m <= n ? n + 2 * *m - 1 : 3 * n; }

std::vector<std::optional<int>> ms(int lo, int hi, bool inf) {
  std::vector<std::optional<int>> out;
  for (int m = lo; m <= hi; ++m) out.push_back(m);
  if (inf) out.push_back(std::nullopt);
  return out;
}

Outcome gb_table() {
  Outcome o;
  int cells = 0;
  for (int n = 2; n <= 5; ++n)
    for (auto m : ms(2, 5, true)) {
      int code = 0;
      Json r = cli({"gb", "verify", "--preset", "d", std::to_string(n), mstr(m)}, code);
      bool ok = code == 0 && r["confluent"] == true && r["dim"] == table_dim(n, m) &&
                r["centre_dim"] == table_centre(n, m);
      if (!ok) {
        o.pass = false;
        o.detail += " D(" + std::to_string(n) + "," + mstr(m) + ")";
      }
      ++cells;
    }
  o.detail = std::to_string(cells) + " cells" + (o.pass ? "" : ", mismatches:" + o.detail);
  return o;
}

Outcome gb_discovery() {
  Outcome o;
  int cells = 0;
  for (int n = 2; n <= 5; ++n)
    for (auto m : ms(2, 5, true)) {
      int code = 0;
      Json r = cli({"gb", "complete", "--preset", "d", std::to_string(n), mstr(m)}, code);
      std::string want = "x^" + std::to_string(2 * n - 1) + "*y";
      bool found = false;
      for (const auto& a : r["added"]) found = found || a == want;
      if (!found) {
        o.pass = false;
        o.detail += " D(" + std::to_string(n) + "," + mstr(m) + ")";
      }
      ++cells;
    }
  o.detail = std::to_string(cells) + " cells" + (o.pass ? ", x^(2n-1)*y added in each" : ", missing:" + o.detail);
  return o;
}

Outcome dinfty() {
  Outcome o;
  for (int n : {2, 3})
    for (int m = 2 * n; m <= 2 * n + 2; ++m)
      if (!dinfty_coincidence(n, m)) {
        o.pass = false;
        o.detail += " (" + std::to_string(n) + "," + std::to_string(m) + ")";
      }
  if (o.pass) o.detail = "6 pairs coincide";
  return o;
}

Outcome aux_algebra() {
  FDAlgebra A = a2_presentation().algebra();
  std::size_t z = centre(A).dim();
  return {A.dim() == 6 && z == 3, "A2 dim " + std::to_string(A.dim()) + ", centre " + std::to_string(z)};
}

Outcome obstruction() {
  Outcome o;
  std::vector<InvariantRecord> inv;
  std::vector<ContractionSpec> specs;
  for (int n = 2; n <= 6; ++n)
    for (int m = 2; m <= 6; ++m) {
      specs.push_back(ContractionSpec::d(n, m));
      inv.push_back(computed_invariants(build_contraction(specs.back())));
    }
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto sols = obstruction_solver(inv[i].dim, inv[i].centre_dim, inv[i].nilpotency_index);
    GeometricType t;
    if (sols.size() == 1) {
      if (sols[0].first) t.counts[2] = sols[0].first;
      if (sols[0].second) t.counts[1] = sols[0].second;
    }
    if (sols.size() != 1 || !(t == semisimple_target(specs[i]))) {
      o.pass = false;
      o.detail += " " + specs[i].name();
    }
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (ms >= 1000) o.pass = false;
  o.detail = "25 cells, solver " + std::to_string(ms) + " ms" + (o.detail.empty() ? "" : ", wrong:" + o.detail);
  return o;
}

Outcome certificates() {
  Outcome o;
  int verified = 0, cells = 0, aux_total = 0, aux_iso = 0;
  std::string bad, aux_bad;
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m) {
      ++cells;
      Reproduction r = reproduce(ContractionSpec::d(n, m));
      bool ok = r.ok() && r.certificate && r.certificate->verified() && r.certificate->complete() &&
                r.certified_target == semisimple_target(r.spec);
      verified += ok;
      if (!ok) bad += " " + r.spec.name();
      if (!r.certificate) continue;
      for (const auto& e : r.certificate->chain)
        for (const auto& s : e.samples)
          for (const auto& a : s.aux) {
            ++aux_total;
            if (a.map.verdict == MapVerdict::Isomorphism) {
              ++aux_iso;
            } else if (aux_bad.empty()) {
              aux_bad = "'" + a.description + "' into " + a.presentation + " at t=" + s.at.to_string() + " is " +
                        std::string(to_string(a.map.verdict));
            }
          }
    }
  o.pass = verified == cells && aux_iso == aux_total;
  o.detail = std::to_string(verified) + "/" + std::to_string(cells) + " certificates verified with matching targets";
  if (!bad.empty()) o.detail += " (failed:" + bad + ")";
  o.detail += "; literal generator maps: " + std::to_string(aux_iso) + "/" + std::to_string(aux_total) +
              " isomorphisms";
  if (!aux_bad.empty()) o.detail += ", e.g. " + aux_bad;
  return o;
}

Outcome named_fibers() {
  Outcome o;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      o.pass = false;
      o.detail += " " + what;
    }
  };
  for (int n : {2, 3}) {
    PolyFamily F = builtin_family("dn1", {n});
    GeometricType T;
    T.counts[2] = std::size_t(n - 1);
    T.counts[1] = 2;
    for (int at : {1, 2}) {
      FDAlgebra A = fiber(F, Rational(at));
      expect(radical(A).dim() == 0 && geometric_type(A) == T, "dn1(" + std::to_string(n) + ")@" + std::to_string(at));
    }
  }
  expect(geometric_type(fiber(builtin_family("d1inf"), Rational(1))) == GeometricType::parse("{1:3}"), "d1inf@1");
  PolyFamily P = builtin_family("parabola");
  expect(geometric_type(fiber(P, Rational(1))) == GeometricType::parse("{1:2}"), "parabola@1");
  expect(radical(fiber(P, Rational(0))).dim() == 1, "parabola@0");
  if (o.pass) o.detail = "dn1 n=2,3 at 1,2; d1inf at 1; parabola at 0,1";
  else o.detail = "wrong:" + o.detail;
  return o;
}

struct NamedFamily {
  std::string label;
  PolyFamily family;
};

std::vector<NamedFamily> all_families() {
  std::vector<NamedFamily> out;
  auto add = [&](const std::string& name, FamilyParams p, const std::string& label) {
    out.push_back({label, builtin_family(name, p)});
  };
  add("parabola", {}, "parabola");
  add("a2", {}, "a2");
  add("aprime", {}, "aprime");
  add("dn1", {2, 1, 1}, "dn1(2)");
  add("dn1", {3, 1, -1}, "dn1(3,-)");
  add("d1inf", {}, "d1inf");
  add("an", {4}, "an(4)");
  add("induction", {2, 2, 1}, "induction(2,2)");
  add("induction", {3, 2, -1}, "induction(3,2,-)");
  add("induction", {2, std::nullopt, 1}, "induction(2,inf)");
  add("quiver", {}, "quiver");
  return out;
}

std::vector<ncgb::Word> words_upto(std::size_t gens, std::size_t len) {
  std::vector<ncgb::Word> all{{}}, layer{{}};
  for (std::size_t l = 1; l <= len; ++l) {
    std::vector<ncgb::Word> next;
    for (const auto& w : layer)
      for (std::size_t g = 0; g < gens; ++g) {
        auto v = w;
        v.push_back(ncgb::Letter(g));
        next.push_back(v);
      }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

// Rank of the word-evaluation matrix over Q(t), generators taken from the
// family's normal forms.
std::size_t generic_word_rank(const PolyFamily& F, const std::vector<ncgb::Word>& words) {
  RatFuncAlgebra R = to_ratfunc(F.algebra);
  std::size_t d = F.dim();
  std::vector<std::vector<RatFunc>> gens;
  for (std::size_t g = 0; g < F.rules->alphabet().size(); ++g) {
    ncgb::NCPoly nf = ncgb::normal_form(ncgb::NCPoly::monomial({ncgb::Letter(g)}), *F.rules);
    std::vector<RatFunc> v(d);
    for (const auto& [w, c] : nf.terms()) {
      auto it = std::find(F.basis.begin(), F.basis.end(), w);
      v[std::size_t(it - F.basis.begin())] += RatFunc(c);
    }
    gens.push_back(std::move(v));
  }
  std::vector<std::vector<RatFunc>> cols;
  for (const auto& w : words) {
    std::vector<RatFunc> acc = R.unit();
    for (auto g : w) acc = R.multiply(acc, gens[g]);
    cols.push_back(std::move(acc));
  }
  return mat_rank(Matrix<RatFunc>::from_columns(cols, d));
}

std::size_t word_rank(const FDAlgebra& A, const PolyFamily& F, const Rational& at,
                      const std::vector<ncgb::Word>& words) {
  std::vector<Element> gens;
  for (const auto& name : F.rules->alphabet().names()) gens.push_back(family_element(F, at, name));
  std::vector<Element> cols;
  for (const auto& w : words) cols.push_back(evaluate_word(A, w, gens));
  return mat_rank(QMatrix::from_columns(cols, A.dim()));
}

Outcome semicontinuity() {
  Outcome o;
  const std::vector<Rational> pool{2, 3, 5, 7, Rational(1, 2), -3, 11};
  std::size_t checked = 0;
  for (const auto& [label, F] : all_families()) {
    FDAlgebra A0 = fiber(F, Rational(0));
    std::size_t z0 = centre(A0).dim();
    auto words = words_upto(F.rules->alphabet().size(), F.rules->alphabet().size() > 2 ? 4 : 5);
    std::size_t generic = generic_word_rank(F, words);
    std::size_t r0 = word_rank(A0, F, Rational(0), words);
    bool ok = r0 <= generic;
    std::size_t samples = 0;
    for (const auto& at : pool) {
      if (F.is_excluded(at)) continue;
      FDAlgebra A = fiber(F, at);
      ok = ok && centre(A).dim() <= z0 && word_rank(A, F, at, words) <= generic;
      ++samples;
    }
    ok = ok && samples >= 5;
    checked += samples;
    if (!ok) {
      o.pass = false;
      o.detail += " " + label;
    }
  }
  o.detail = std::to_string(all_families().size()) + " families, " + std::to_string(checked) + " sampled fibers" +
             (o.pass ? "" : ", violations:" + o.detail);
  return o;
}

Outcome hochschild() {
  Outcome o;
  std::vector<std::pair<std::string, FDAlgebra>> algebras;
  for (auto [n, m] : std::vector<std::pair<int, std::optional<int>>>{{2, 2}, {2, 3}, {3, 2}, {2, std::nullopt}})
    algebras.emplace_back(d_name(n, m), d_presentation(n, m).algebra());
  for (int n = 2; n <= 5; ++n) algebras.emplace_back("A(" + std::to_string(n) + ")", a_presentation(n).algebra());
  for (const Presentation& p : {a2_presentation(), aprime_presentation(), m2_presentation(), quiver_presentation(),
                                truncated_cubic_presentation()})
    algebras.emplace_back(p.name(), p.algebra());
  std::vector<std::pair<std::string, FDAlgebra>> semisimple{
      {"dn1(2)@1", fiber(builtin_family("dn1", {2}), 1)},
      {"dn1(2)@2", fiber(builtin_family("dn1", {2}), 2)},
      {"dn1(3)@1", fiber(builtin_family("dn1", {3}), 1)},
      {"d1inf@1", fiber(builtin_family("d1inf"), 1)},
      {"parabola@1", fiber(builtin_family("parabola"), 1)},
      {"aprime@1", fiber(builtin_family("aprime"), 1)},
      {"quiver@1", fiber(builtin_family("quiver"), 1)},
  };
  auto t0 = std::chrono::steady_clock::now();
  std::string finding;
  for (const auto& [name, A] : algebras) {
    auto r = hochschild_dims(A, 2, {.reduced = true});
    if (r.dims[0] != centre(A).dim()) {
      o.pass = false;
      o.detail += " HH0!=Z(" + name + ")";
    }
    if (name == "D(2,2)")
      finding = "D(2,2): HH1=" + std::to_string(r.dims[1]) + ", HH2=" + std::to_string(r.dims[2]) +
                (r.dims[1] == r.dims[2] ? " (equal)" : " (NOT equal, finding)");
  }
  for (const auto& [name, A] : semisimple) {
    auto r = hochschild_dims(A, 2, {.reduced = true});
    if (radical(A).dim() != 0 || r.dims[0] != centre(A).dim() || r.dims[1] != 0 || r.dims[2] != 0) {
      o.pass = false;
      o.detail += " rigid(" + name + ")";
    }
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s >= 300) o.pass = false;
  o.detail = std::to_string(algebras.size()) + " algebras, " + std::to_string(semisimple.size()) +
             " semisimple fibers, " + std::to_string(s) + " s; " + finding +
             (o.detail.empty() ? "" : "; failures:" + o.detail);
  return o;
}

template <typename C>
bool mutation_caught(const StructAlgebra<C>& A, const C& delta) {
  auto mutate = [&](std::size_t i, std::size_t j, std::size_t k) {
    return StructAlgebra<C>::from_products(A.dim(), [&](std::size_t a, std::size_t b) {
      auto v = A.multiply(A.basis(a), A.basis(b));
      if (a == i && b == j) v[k] += delta;
      return v;
    });
  };
  std::size_t d = A.dim();
  for (std::size_t k = 0; k < d; ++k)
    if (verify_structure(mutate(0, d - 1, k))) return false;
  if (d < 3) return true;
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = 1; j < d; ++j)
      if (!verify_structure(mutate(i, j, 0))) return true;
  return false;
}

Outcome moduli() {
  Outcome o;
  std::size_t count = 0;
  auto fail = [&](const std::string& what) {
    o.pass = false;
    o.detail += " " + what;
  };
  for (int n = 1; n <= 4; ++n)
    for (auto m : ms(1, 4, true)) {
      FDAlgebra A = d_presentation(n, m).algebra();
      ++count;
      if (!verify_structure(A)) fail(d_name(n, m));
      if (!mutation_caught(A, Rational(1))) fail("mutation " + d_name(n, m));
    }
  for (const Presentation& p : {a2_presentation(), aprime_presentation(), m2_presentation(), quiver_presentation(),
                                truncated_cubic_presentation(), a_presentation(4)}) {
    ++count;
    if (!verify_structure(p.algebra())) fail(p.name());
    if (!mutation_caught(p.algebra(), Rational(1))) fail("mutation " + p.name());
  }
  for (const auto& [label, F] : all_families()) {
    ++count;
    if (!verify_structure(F.algebra)) fail(label);
    if (!mutation_caught(F.algebra, UniPoly::t())) fail("mutation " + label);
  }
  o.detail = std::to_string(count) + " algebras and families" + (o.pass ? "" : ", failures:" + o.detail);
  return o;
}

Outcome ledger() {
  Outcome o;
  auto has = [](const Json& notes, const std::string& needle) {
    for (const auto& n : notes)
      if (n.get<std::string>().find(needle) != std::string::npos) return true;
    return false;
  };
  int code = 0;
  for (int n = 2; n <= 5; ++n) {
    Json a = cli({"gb", "verify", "--preset", "a", std::to_string(n)}, code);
    Json r = cli({"reproduce", "--type", "a", "--n", std::to_string(n)}, code);
    GeometricType t;
    t.counts[1] = std::size_t(n - 1);
    bool ok = has(a["notes"], "n-1") && has(r["notes"], "n-1") && a["dim"] == n - 1 &&
              r["target"] == t.to_string() && code == 0;
    if (!ok) {
      o.pass = false;
      o.detail += " A(" + std::to_string(n) + ")";
    }
  }
  for (auto preset : std::vector<std::vector<std::string>>{{"d", "2", "2"}, {"d", "3", "inf"}, {"d", "4", "2"}}) {
    std::vector<std::string> args{"gb", "verify", "--preset"};
    args.insert(args.end(), preset.begin(), preset.end());
    Json g = cli(args, code);
    if (!(has(g["notes"], "2m-1") && has(g["notes"], "2m-2"))) {
      o.pass = false;
      o.detail += " d " + preset[1] + " " + preset[2];
    }
  }
  o.detail = o.pass ? "A(2..5) notes with dim n-1 and target {1:n-1}; D notes name 2m-1 vs 2m-2"
                    : "missing:" + o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"standard-basis table", gb_table},
      {"completion discovery", gb_discovery},
      {"D-infinity coincidence", dinfty},
      {"auxiliary algebra A2", aux_algebra},
      {"obstruction uniqueness", obstruction},
      {"existence certificates", certificates},
      {"named fibers", named_fibers},
      {"semicontinuity", semicontinuity},
      {"Hochschild", hochschild},
      {"moduli equations", moduli},
      {"discrepancy ledger", ledger},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
              << o.detail << "; " << s << " s)" << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : std::string("all criteria passed"))
            << std::endl;
  return failed ? 1 : 0;
}
