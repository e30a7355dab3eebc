#include "cadef_cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "cadef/contraction/contraction.hpp"
#include "cadef/families/evidence.hpp"
#include "cadef/hochschild/hochschild.hpp"
#include "cadef_cli/input_file.hpp"
#include "cadef_cli/presets.hpp"
#include "cadef_cli/report.hpp"

namespace cadef::cli {

namespace {

struct Source {
  std::vector<std::string> preset;
  std::string file;
};

void add_source(CLI::App* cmd, Source& s, const std::string& what) {
  auto* p = cmd->add_option("--preset", s.preset, what + " preset: " + preset_list())->expected(1, 4);
  auto* f = cmd->add_option("--file", s.file, what + " description file");
  p->excludes(f);
}

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownSymbol:
    case ErrorCode::OutOfRange:
    case ErrorCode::InvalidInput:
      return true;
    default:
      return false;
  }
}

struct Loaded {
  Presentation presentation;
  std::vector<std::string> notes;
};

Loaded load_presentation(const Source& s) {
  if (!s.preset.empty()) {
    PresentationPreset p = presentation_preset(s.preset);
    std::vector<std::string> notes;
    if (p.contraction) notes = discrepancy_notes(*p.contraction);
    else if (s.preset[0] == "d") notes = discrepancy_notes(ContractionSpec::d(1, 1));
    return {p.presentation, notes};
  }
  if (!s.file.empty()) return {to_presentation(read_input_file(s.file)), {}};
  throw Error(ErrorCode::InvalidInput, "give --preset or --file");
}

struct LoadedFamily {
  PolyFamily family;
  std::optional<EdgeSpec> edge;
  std::vector<std::string> notes;
};

LoadedFamily load_family(const Source& s) {
  if (!s.preset.empty()) {
    FamilyPreset p = family_preset(s.preset);
    std::vector<std::string> notes;
    if (p.touches_a) notes = discrepancy_notes(ContractionSpec::a(2));
    return {p.family, p.edge, notes};
  }
  if (!s.file.empty()) return {to_family(read_input_file(s.file)), std::nullopt, {}};
  throw Error(ErrorCode::InvalidInput, "give --preset or --file");
}

Json algebra_summary(const FDAlgebra& A) {
  Json j;
  j["dim"] = A.dim();
  j["structure_ok"] = verify_structure(A);
  j["centre_dim"] = centre(A).dim();
  j["radical_dim"] = radical(A).dim();
  return j;
}

Json presentation_json(const Presentation& p) {
  return {{"name", p.name()},
          {"generators", p.alphabet().names()},
          {"relations", p.relation_texts()},
          {"degree_bound", p.degree_bound()}};
}

std::vector<std::string> normal_words(const ncgb::RewritingSystem& sys) {
  std::vector<std::string> out;
  for (const auto& w : ncgb::normal_monomials(sys)) out.push_back(w.empty() ? "1" : sys.alphabet().render(w));
  return out;
}

// Upper unitriangular change of basis keeps the unit in front.
FDAlgebra random_basis_change(const FDAlgebra& A, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::size_t d = A.dim();
  QMatrix P = QMatrix::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (i > 0) P(i, j) = Rational(dist(rng));
  return change_basis(A, P);
}

struct Options {
  Source src;
  std::string at = "1";
  std::size_t k_max = 2;
  bool reduced = false;
  bool cross_check = false;
  bool allow_large = false;
  std::optional<std::uint64_t> seed;
  std::string type = "d";
  int n = 2;
  std::string m = "2";
  std::string n_range;
  std::string m_range;
  bool include_inf = false;
  unsigned jobs = 0;
  std::size_t d = 0, z = 0, p = 0;
  bool from_algebra = false;
};

Json cmd_gb(bool complete_only, const Options& o, bool& ok) {
  Loaded L = load_presentation(o.src);
  const auto& sys = L.presentation.completed();
  Json j;
  j["presentation"] = presentation_json(L.presentation);
  j["rules"] = rules_json(sys);
  j["confluent"] = ncgb::verify_confluent(sys);
  FDAlgebra A = L.presentation.algebra();
  j["dim"] = A.dim();
  j["normal_basis"] = normal_words(sys);
  ok = j["confluent"].get<bool>();
  if (complete_only) {
    std::set<ncgb::Word> given;
    for (const auto& r : L.presentation.relations()) given.insert(r.leading_word(sys.order()));
    Json added = Json::array();
    for (const auto& w : sys.leading_words())
      if (!given.count(w)) added.push_back(sys.alphabet().render(w));
    j["added"] = added;
  } else {
    j["centre_dim"] = centre(A).dim();
    j["structure_ok"] = verify_structure(A);
    ok = ok && j["structure_ok"].get<bool>();
    if (!o.src.preset.empty()) {
      PresentationPreset p = presentation_preset(o.src.preset);
      if (p.contraction) {
        auto expected = expected_invariants(*p.contraction);
        auto computed = computed_invariants(build_contraction(*p.contraction));
        j["computed"] = to_json(computed);
        j["expected"] = expected ? to_json(*expected) : Json(nullptr);
        if (expected) {
          j["matches_table"] = *expected == computed;
          ok = ok && *expected == computed;
        }
      }
    }
  }
  j["notes"] = L.notes;
  return j;
}

Json cmd_algebra(const std::string& what, const Options& o, bool& ok) {
  Loaded L = load_presentation(o.src);
  FDAlgebra A = L.presentation.algebra();
  Json j;
  j["presentation"] = presentation_json(L.presentation);
  j["notes"] = L.notes;
  if (what == "info") {
    j.update(algebra_summary(A));
    Json nil = Json::object();
    for (const auto& g : L.presentation.alphabet().names()) {
      try {
        nil[g] = nilpotency_index(A, presentation_element(L.presentation, g));
      } catch (const Error&) {
        nil[g] = nullptr;
      }
    }
    j["nilpotency_index"] = nil;
    ok = j["structure_ok"].get<bool>();
  } else if (what == "wedderburn") {
    j.update(algebra_summary(A));
    FDAlgebra S = semisimple_quotient(A);
    j["semisimple_dim"] = S.dim();
    j["geometric_type"] = geometric_type(S).to_string();
    Json blocks = Json::array();
    for (const auto& b : fiber_blocks(A))
      blocks.push_back({{"dim", b.algebra.dim()},
                        {"radical_dim", radical(b.algebra).dim()},
                        {"residue_field", b.residue_field.to_string("z")}});
    j["blocks"] = blocks;
    ok = j["structure_ok"].get<bool>();
  } else {
    HochschildOptions opts;
    opts.reduced = o.reduced;
    opts.allow_large = o.allow_large;
    HochschildReport r = hochschild_dims(A, o.k_max, opts);
    j["hochschild"] = to_json(r);
    std::size_t z = centre(A).dim();
    j["centre_dim"] = z;
    j["hh0_matches_centre"] = r.dims[0] == z;
    ok = r.dims[0] == z;
    if (o.k_max >= 2) j["hh1_equals_hh2"] = r.dims[1] == r.dims[2];
    if (o.cross_check) {
      HochschildOptions other = opts;
      other.reduced = !opts.reduced;
      HochschildReport s = hochschild_dims(A, o.k_max, other);
      j["cross_check"] = to_json(s);
      j["cross_check_agrees"] = s.dims == r.dims;
      ok = ok && s.dims == r.dims;
    }
    if (o.seed) {
      HochschildReport s = hochschild_dims(random_basis_change(A, *o.seed), o.k_max, opts);
      j["basis_change"] = {{"seed", *o.seed}, {"dims", s.dims}, {"invariant", s.dims == r.dims}};
      ok = ok && s.dims == r.dims;
    }
  }
  return j;
}

Json cmd_family(const std::string& what, const Options& o, bool& ok) {
  LoadedFamily L = load_family(o.src);
  const PolyFamily& F = L.family;
  Json j;
  j["family"] = F.name;
  j["dim"] = F.dim();
  Json ex = Json::array();
  for (const auto& x : F.excluded) ex.push_back(to_json(x));
  Json sm = Json::array();
  for (const auto& x : F.samples) sm.push_back(to_json(x));
  j["excluded_points"] = ex;
  j["samples"] = sm;
  j["notes"] = L.notes;
  if (what == "verify") {
    bool structure = verify_family(F);
    j["structure_ok"] = structure;
    std::size_t z0 = centre(fiber(F, Rational(0))).dim();
    Json rows = Json::array();
    bool semi = true;
    for (int k = 1; k <= 5; ++k) {
      Rational at(k + 1);
      if (F.is_excluded(at)) continue;
      std::size_t z = centre(fiber(F, at)).dim();
      semi = semi && z <= z0;
      rows.push_back({{"at", to_json(at)}, {"centre_dim", z}});
    }
    j["centre_dim_at_0"] = z0;
    j["centre_dims"] = rows;
    j["semicontinuous"] = semi;
    ok = structure && semi;
  } else if (what == "fiber") {
    Rational at = Rational::parse(o.at);
    FDAlgebra A = fiber(F, at);
    j["at"] = to_json(at);
    j["fiber"] = algebra_summary(A);
    if (radical(A).dim() == 0) j["fiber"]["geometric_type"] = geometric_type(A).to_string();
    Json blocks = Json::array();
    for (const auto& b : fiber_blocks(A)) blocks.push_back({{"dim", b.algebra.dim()}, {"radical_dim", radical(b.algebra).dim()}});
    j["fiber"]["blocks"] = blocks;
    bool excluded = F.is_excluded(at);
    j["excluded"] = excluded;
    ok = true;
    if (L.edge) {
      FiberCheck c;
      try {
        c = check_fiber(A, at, L.edge->claims(A, at));
      } catch (const Error& e) {
        c.at = at;
        c.failure = e.what();
      }
      j["evidence"] = to_json(c);
      ok = c.ok;
    }
    if (excluded) {
      j["diagnostic"] = "t = " + at.to_string() + " is an excluded point of " + F.name;
      ok = false;
    }
  } else {
    if (!L.edge) throw Error(ErrorCode::InvalidInput, "certify needs a family preset with evidence");
    CertEdge e = evaluate_edge(*L.edge);
    j["edge"] = to_json(e);
    ok = e.verified;
  }
  return j;
}

std::pair<int, int> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    int v = *parse_index(s);
    return {v, v};
  }
  auto a = parse_index(s.substr(0, colon));
  auto b = parse_index(s.substr(colon + 1));
  if (!a || !b || *a > *b) throw Error(ErrorCode::OutOfRange, "bad range '" + s + "'");
  return {*a, *b};
}

ContractionSpec spec_of(const Options& o) {
  if (o.type == "a") return ContractionSpec::a(o.n);
  if (o.type == "d") return ContractionSpec::d(o.n, parse_index(o.m));
  throw Error(ErrorCode::OutOfRange, "type must be a or d");
}

Json cmd_reproduce(const Options& o, bool& ok) {
  if (o.n_range.empty()) {
    ContractionSpec s = spec_of(o);
    contraction_presentation(s);  // range check
    Reproduction r = reproduce(s);
    ok = r.ok();
    return to_json(r);
  }
  std::vector<ContractionSpec> cells;
  auto [n0, n1] = parse_range(o.n_range);
  if (o.type == "a") {
    for (int n = std::max(n0, 2); n <= n1; ++n) cells.push_back(ContractionSpec::a(n));
  } else {
    auto [m0, m1] = parse_range(o.m_range.empty() ? o.n_range : o.m_range);
    for (int n = n0; n <= n1; ++n) {
      for (int m = m0; m <= m1; ++m) cells.push_back(ContractionSpec::d(n, m));
      if (o.include_inf) cells.push_back(ContractionSpec::d(n, std::nullopt));
    }
  }
  std::vector<Reproduction> results(cells.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, unsigned(std::max<std::size_t>(cells.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) results[i] = reproduce(cells[i]);
    });
  for (auto& t : pool) t.join();
  Json j;
  Json rows = Json::array();
  ok = true;
  for (const auto& r : results) {
    rows.push_back(to_json(r));
    ok = ok && r.ok();
  }
  j["cells"] = rows;
  j["ok"] = ok;
  return j;
}

Json cmd_obstruct(const Options& o, bool& ok) {
  Json j;
  std::size_t d = o.d, z = o.z, p = o.p;
  std::optional<GeometricType> expected;
  if (o.from_algebra) {
    ContractionSpec s = spec_of(o);
    InvariantRecord r = computed_invariants(build_contraction(s));
    d = r.dim;
    z = r.centre_dim;
    p = r.nilpotency_index;
    expected = semisimple_target(s);
    j["algebra"] = s.name();
    j["notes"] = discrepancy_notes(s);
  }
  auto sols = obstruction_solver(d, z, p);
  Json arr = Json::array();
  for (const auto& [k, l] : sols) arr.push_back({{"k", k}, {"l", l}});
  j["inputs"] = {{"d", d}, {"z", z}, {"p", p}};
  j["solutions"] = arr;
  j["unique"] = sols.size() == 1;
  ok = sols.size() == 1;
  if (sols.size() == 1) {
    GeometricType t;
    if (sols[0].first) t.counts[2] = sols[0].first;
    if (sols[0].second) t.counts[1] = sols[0].second;
    j["target"] = t.to_string();
    if (expected) {
      j["matches_table"] = t == *expected;
      ok = t == *expected;
    }
  }
  return j;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact deformation analysis of contraction algebras"};
  app.require_subcommand(1);
  Options o;
  bool timing = false;
  app.add_flag("--timing", timing, "Add wall-clock timing to the report");

  auto* gb = app.add_subcommand("gb", "Standard bases")->require_subcommand(1);
  auto* gb_verify = gb->add_subcommand("verify", "Complete, check confluence and invariants");
  auto* gb_complete = gb->add_subcommand("complete", "Complete and list the added rules");
  add_source(gb_verify, o.src, "presentation");
  add_source(gb_complete, o.src, "presentation");

  auto* alg = app.add_subcommand("algebra", "Finite-dimensional algebra analysis")->require_subcommand(1);
  auto* alg_info = alg->add_subcommand("info", "Dimension, centre, radical, nilpotency");
  auto* alg_wed = alg->add_subcommand("wedderburn", "Radical, semisimple quotient and blocks");
  auto* alg_hh = alg->add_subcommand("hochschild", "Hochschild cohomology dimensions");
  for (auto* c : {alg_info, alg_wed, alg_hh}) add_source(c, o.src, "presentation");
  alg_hh->add_option("--kmax", o.k_max, "Highest degree")->capture_default_str();
  alg_hh->add_flag("--reduced", o.reduced, "Use normalized cochains");
  alg_hh->add_flag("--cross-check", o.cross_check, "Also compute with the other complex");
  alg_hh->add_flag("--allow-large", o.allow_large, "Lift the cost guard");
  alg_hh->add_option("--seed", o.seed, "Seed for a random basis-change invariance check");

  auto* fam = app.add_subcommand("family", "One-parameter families")->require_subcommand(1);
  auto* fam_verify = fam->add_subcommand("verify", "Structure equations and centre semicontinuity");
  auto* fam_fiber = fam->add_subcommand("fiber", "Analyse one fiber and check its evidence");
  auto* fam_cert = fam->add_subcommand("certify", "Verify the preset's deformation edge");
  for (auto* c : {fam_verify, fam_fiber, fam_cert}) add_source(c, o.src, "family");
  fam_fiber->add_option("--at", o.at, "Parameter value p/q")->capture_default_str();

  auto* obs = app.add_subcommand("obstruct", "Solve the obstruction constraints");
  obs->add_option("--d", o.d, "Dimension");
  obs->add_option("--z", o.z, "Centre dimension");
  obs->add_option("--p", o.p, "Nilpotency index");
  auto* obs_type = obs->add_option("--type", o.type, "Read d, z, p from a contraction algebra (a or d)");
  obs->add_option("--n", o.n);
  obs->add_option("--m", o.m, "Integer or inf");

  auto* rep = app.add_subcommand("reproduce", "Full pipeline for one cell or a range");
  rep->add_option("--type", o.type, "a or d")->capture_default_str();
  rep->add_option("--n", o.n)->capture_default_str();
  rep->add_option("--m", o.m, "Integer or inf")->capture_default_str();
  rep->add_option("--range", o.n_range, "n range lo:hi (runs every cell)");
  rep->add_option("--mrange", o.m_range, "m range lo:hi, defaults to the n range");
  rep->add_flag("--inf", o.include_inf, "Add D(n,inf) cells to a range");
  rep->add_option("--jobs", o.jobs, "Worker threads (0: hardware)");

  auto* dinf = app.add_subcommand("dinfty-check", "Compare D(n,m) with D(n,inf) for m >= 2n");
  dinf->add_option("--n", o.n)->required();
  dinf->add_option("--m", o.m)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  o.from_algebra = obs_type->count() > 0;

  Json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = args;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Json body;
    if (gb_verify->parsed()) body = cmd_gb(false, o, ok);
    else if (gb_complete->parsed()) body = cmd_gb(true, o, ok);
    else if (alg_info->parsed()) body = cmd_algebra("info", o, ok);
    else if (alg_wed->parsed()) body = cmd_algebra("wedderburn", o, ok);
    else if (alg_hh->parsed()) body = cmd_algebra("hochschild", o, ok);
    else if (fam_verify->parsed()) body = cmd_family("verify", o, ok);
    else if (fam_fiber->parsed()) body = cmd_family("fiber", o, ok);
    else if (fam_cert->parsed()) body = cmd_family("certify", o, ok);
    else if (obs->parsed()) body = cmd_obstruct(o, ok);
    else if (rep->parsed()) body = cmd_reproduce(o, ok);
    else if (dinf->parsed()) {
      int n = o.n;
      auto m = parse_index(o.m);
      if (!m) throw Error(ErrorCode::OutOfRange, "m must be finite");
      body["n"] = n;
      body["m"] = *m;
      ok = dinfty_coincidence(n, *m);
      body["coincide"] = ok;
    }
    report.update(body);
  } catch (const Error& e) {
    Json ej{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) ej["position"] = se->position();
    report["error"] = ej;
    report["ok"] = false;
    err << e.what() << '\n';
    out << report.dump(2) << '\n';
    return is_input_error(e.code()) ? kInputError : kCheckFailed;
  }
  report["ok"] = ok;
  if (timing)
    report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out << report.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

}  // namespace cadef::cli
