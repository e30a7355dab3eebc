#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cadef_cli/app.hpp"
#include "cadef_cli/input_file.hpp"
#include "cadef_cli/report.hpp"

using namespace cadef;
using namespace cadef::cli;

namespace {

struct Run {
  int code;
  Json report;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  Json j;
  if (!out.str().empty() && out.str()[0] == '{') j = Json::parse(out.str());
  return {code, j, err.str()};
}

std::string example(const std::string& name) { return std::string(CADEF_EXAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("gb verify") {
  auto r = run({"gb", "verify", "--preset", "d", "2", "2"});
  CHECK(r.code == kOk);
  CHECK(r.report["confluent"] == true);
  CHECK(r.report["dim"] == 8);
  CHECK(r.report["matches_table"] == true);
  CHECK(r.report["schema_version"] == kSchemaVersion);
  CHECK(r.report["notes"].size() == 1);
}

TEST_CASE("gb complete lists the discovered rule") {
  auto r = run({"gb", "complete", "--preset", "d", "3", "2"});
  CHECK(r.code == kOk);
  CHECK(r.report["added"] == Json::array({"x^5*y"}));
}

TEST_CASE("reproduce") {
  auto r = run({"reproduce", "--type", "d", "--n", "2", "--m", "2"});
  CHECK(r.code == kOk);
  CHECK(r.report["target"] == "{2:1, 1:4}");
  CHECK(r.report["unique"] == true);

  auto range = run({"reproduce", "--type", "d", "--range", "2:3", "--inf", "--jobs", "3"});
  CHECK(range.code == kOk);
  REQUIRE(range.report["cells"].size() == 6);
  CHECK(range.report["cells"][2]["algebra"] == "D(2,inf)");
  auto serial = run({"reproduce", "--type", "d", "--range", "2:3", "--inf", "--jobs", "1"});
  CHECK(serial.report["cells"] == range.report["cells"]);
}

TEST_CASE("family fiber at an excluded point") {
  auto r = run({"family", "fiber", "--preset", "a2", "--at", "1"});
  CHECK(r.code == kCheckFailed);
  CHECK(r.report["diagnostic"].get<std::string>().find("excluded") != std::string::npos);
  auto ok = run({"family", "fiber", "--preset", "a2", "--at", "4"});
  CHECK(ok.code == kOk);
  CHECK(ok.report["evidence"]["ok"] == true);
}

TEST_CASE("family certify") {
  auto r = run({"family", "certify", "--preset", "dn1", "3"});
  CHECK(r.code == kOk);
  CHECK(r.report["edge"]["verified"] == true);
}

TEST_CASE("obstruct") {
  auto r = run({"obstruct", "--d", "9", "--z", "6", "--p", "6"});
  CHECK(r.code == kOk);
  CHECK(r.report["target"] == "{2:1, 1:5}");
  auto s = run({"obstruct", "--type", "d", "--n", "3", "--m", "inf"});
  CHECK(s.code == kOk);
  CHECK(s.report["matches_table"] == true);
}

TEST_CASE("hochschild with checks") {
  auto r = run({"algebra", "hochschild", "--preset", "a2", "--cross-check", "--seed", "3"});
  CHECK(r.code == kOk);
  CHECK(r.report["hochschild"]["dims"] == Json::array({3, 3, 6}));
  CHECK(r.report["basis_change"]["invariant"] == true);
}

TEST_CASE("algebra info and wedderburn succeed on a valid presentation") {
  auto info = run({"algebra", "info", "--preset", "d", "2", "2"});
  CHECK(info.code == kOk);
  CHECK(info.report["ok"] == true);
  auto w = run({"algebra", "wedderburn", "--preset", "d", "2", "2"});
  CHECK(w.code == kOk);
  CHECK(w.report["ok"] == true);
  std::size_t d = w.report["dim"], rad = w.report["radical_dim"], ss = w.report["semisimple_dim"];
  CHECK(d == rad + ss);
  std::size_t block_total = 0;
  for (const auto& b : w.report["blocks"]) block_total += b["dim"].get<std::size_t>();
  CHECK(block_total == d);
}

TEST_CASE("input errors exit with status 2") {
  CHECK(run({"gb", "verify", "--preset", "d", "0", "2"}).code == kInputError);
  CHECK(run({"gb", "verify", "--preset", "nonsense"}).code == kInputError);
  CHECK(run({"nonsense"}).code == kInputError);
  CHECK(run({"gb", "verify", "--file", "/nonexistent/file"}).code == kInputError);
  CHECK(run({"dinfty-check", "--n", "2", "--m", "4"}).code == kOk);
  CHECK(run({"dinfty-check", "--n", "2", "--m", "2"}).code == kInputError);
}

TEST_CASE("description files") {
  auto r = run({"gb", "verify", "--file", example("d22.cadef")});
  CHECK(r.code == kOk);
  CHECK(r.report["dim"] == 8);
  CHECK(r.report["centre_dim"] == 5);
  CHECK(run({"family", "verify", "--file", example("a2_family.cadef")}).code == kOk);
  auto f = run({"family", "fiber", "--file", example("induction_d22.cadef"), "--at", "2"});
  CHECK(f.code == kOk);
  CHECK(f.report["fiber"]["dim"] == 8);
}

TEST_CASE("input file parser") {
  InputFile f = parse_input(
      "# comment\n"
      "name = \"Q\"\n"
      "generators = [x,\n  y,]\n"
      "relations = [\"x*y\"]  # trailing\n"
      "excluded_points = [0, 1/2]\n");
  CHECK(f.name == "Q");
  CHECK(f.generators == std::vector<std::string>{"x", "y"});
  CHECK(f.excluded_points == std::vector<Rational>{Rational(0), Rational(1, 2)});
  try {
    parse_input("name = \"Q\"\ngenerators = [x, y\n");
    FAIL("accepted an unterminated list");
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_input("name = a\nname = b\n"), Error);
  CHECK_THROWS_AS(to_presentation(parse_input("generators = [x]\nrelations = [\"x^2\"]\norder = lex\n")), Error);
}
