#include "doctest.h"

#include "semiwell/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace semiwell;
using namespace semiwell::cli;
namespace fs = std::filesystem;

namespace {

const char* kAsymmetric = R"({
  "sphere_symbol": {"terms": [
    {"i": 2, "j": 0, "k": 0, "c": 2}, {"i": 0, "j": 2, "k": 0, "c": 5},
    {"i": 2, "j": 0, "k": 1, "c": -1}, {"i": 0, "j": 2, "k": 1, "c": -1}]},
  "wells": [{"x": 0, "y": 0, "z": 1}, {"x": 0, "y": 0, "z": -1}],
  "N_list": [32, 64, 128],
  "C": 20,
  "N": 128
})";

const char* kQuartic = R"({
  "flat_symbol": {"n": 1, "terms": [
    {"a": [1], "b": [1], "re": 1},
    {"a": [2], "b": [2], "re": 0.1}]},
  "N_list": [16, 32, 64, 128],
  "cutoff": 40
})";

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("semiwell_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write(const fs::path& dir, const std::string& name, const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(SEMIWELL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config parsing builds the asymmetric symbol") {
  const ExperimentConfig cfg = parse_config_text(kAsymmetric);
  REQUIRE(cfg.sphere_symbol);
  CHECK(cfg.sphere_symbol->same_coefficients(asymmetric_double_well(), 1e-15));
  CHECK(cfg.wells.size() == 2);
  CHECK(cfg.n_list == std::vector<int>{32, 64, 128});
  CHECK(*cfg.window == 20.0);
}

TEST_CASE("config round trip is the identity on content") {
  for (const char* text : {kAsymmetric, kQuartic}) {
    const ExperimentConfig a = parse_config_text(text);
    const Json emitted = config_to_json(a);
    const ExperimentConfig b = parse_config_text(dump_json(emitted));
    CHECK(dump_json(config_to_json(b)) == dump_json(emitted));
  }
  const ExperimentConfig q = parse_config_text(kQuartic);
  const auto again = parse_config_text(dump_json(config_to_json(q)));
  CHECK(again.flat_symbol->terms() == q.flat_symbol->terms());
}

TEST_CASE("strict parsing rejects bad configs") {
  CHECK_THROWS_AS(parse_config_text("{"), InputError);
  CHECK_THROWS_AS(parse_config_text(R"({"sphere_symbol": {"terms": []}, "bogus": 1})"), InputError);
  CHECK_THROWS_AS(parse_config_text(R"({"N": 3})"), InputError);
  CHECK_THROWS_AS(parse_config_text(R"({"sphere_symbol": {"terms": []},
      "flat_symbol": {"n": 1, "terms": []}})"),
                  InputError);
  CHECK_THROWS_AS(parse_config_text(R"({"sphere_symbol": {"terms": []}, "deltas": [0.6]})"), InputError);
  CHECK_THROWS_AS(parse_config_text(R"({"sphere_symbol": {"terms": []}, "N_list": [64, 32]})"), InputError);
  CHECK_THROWS_AS(parse_config_text(R"({"sphere_symbol": {"terms": []}, "tolerances": {"gapp": 1}})"), InputError);
  try {
    parse_config_text("{\"sphere_symbol\": {\"terms\": []},\n \"N\": 3,\n \"N\": 4}");
    FAIL("expected duplicate key error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("symbol schemas round trip") {
  FlatSymbol h(2);
  h.add_real_pair({2, 0}, {0, 1}, 0.25).add_term({1, 1}, {1, 1}, 3.0);
  const FlatSymbol back = flat_symbol_from_json(flat_symbol_to_json(h));
  CHECK(back.terms() == h.terms());
  const SphereSymbol s = asymmetric_double_well();
  CHECK(sphere_symbol_from_json(sphere_symbol_to_json(s)).same_coefficients(s));
  const QuadraticForm q = quadratic_form_of(FlatSymbol::from_quadratic(QuadraticForm::diag1(2, 3)));
  CHECK(q.matrix()(0, 0) == doctest::Approx(2.0));
  CHECK(q.matrix()(1, 1) == doctest::Approx(3.0));
}

TEST_CASE("json and csv formatting") {
  CHECK(dump_json(Json{{"b", 0.1}, {"a", 1}}) == "{\n  \"b\": 0.10000000000000001,\n  \"a\": 1\n}\n");
  SweepRecord r;
  r.big_n = 8;
  r.eigenvalues = {0.5, 1.0};
  CHECK(spectrum_csv({r}).rfind("N,lambda_1,lambda_2\n8,", 0) == 0);
}

TEST_CASE("reports carry the tolerances block and are reproducible") {
  const ExperimentConfig cfg = parse_config_text(kAsymmetric);
  const Report r = execute("mu", cfg, 1);
  CHECK(r.verdict == Verdict::Computed);
  const Json doc = report_document(r);
  CHECK(doc.contains("tolerances"));
  CHECK(doc.begin().key() == "command");

  const fs::path d1 = scratch("emit1"), d2 = scratch("emit2");
  emit_report(execute("theorem-b", cfg, 2), d1);
  emit_report(execute("theorem-b", cfg, 1), d2);
  CHECK(slurp(d1 / "theorem-b.json") == slurp(d2 / "theorem-b.json"));
  CHECK(slurp(d1 / "theorem-b.json").find("\"verdict\": \"PASS\"") != std::string::npos);
}

TEST_CASE("execute rejects missing inputs") {
  const ExperimentConfig flat = parse_config_text(kQuartic);
  CHECK_THROWS_AS(execute("mu", flat, 1), InputError);
  CHECK_THROWS_AS(execute("nonsense", flat, 1), InputError);
  const ExperimentConfig sphere = parse_config_text(kAsymmetric);
  CHECK_THROWS_AS(execute("concentration", sphere, 1), InputError);
  CHECK(execute("perturb", flat, 1).verdict == Verdict::Pass);
}

TEST_CASE("exit codes partition success, verdict failure and input error") {
  const fs::path dir = scratch("exit");
  const fs::path good = write(dir, "good.json", kAsymmetric);
  CHECK(run_binary("mu --config " + good.string() + " --out " + (dir / "out").string()) == kSuccess);
  CHECK(fs::exists(dir / "out" / "mu.json"));
  CHECK(fs::exists(dir / "out" / "mu.csv"));
  CHECK(run_binary("gap --config " + good.string() + " --out " + (dir / "out").string()) == kSuccess);

  // a wrong predicted gap turns the verdict into a failure
  std::string wrong = kAsymmetric;
  wrong.insert(wrong.rfind('}'), ", \"predicted_gap\": 3");
  const fs::path bad_gap = write(dir, "wrong.json", wrong);
  CHECK(run_binary("gap --config " + bad_gap.string() + " --out " + (dir / "out").string()) == kVerdictFail);

  const fs::path broken = write(dir, "broken.json", "{\"wells\": 3");
  CHECK(run_binary("mu --config " + broken.string() + " --out " + (dir / "out").string()) == kInputError);
  CHECK(run_binary("mu --config " + (dir / "missing.json").string()) == kInputError);
  CHECK(run_binary("frobnicate --config " + good.string()) == kInputError);

  std::string not_a_well = kAsymmetric;
  not_a_well.replace(not_a_well.find("\"x\": 0, \"y\": 0, \"z\": -1"), 24, "\"x\": 1, \"y\": 0, \"z\": 0");
  const fs::path nw = write(dir, "notwell.json", not_a_well);
  CHECK(run_binary("mu --config " + nw.string() + " --out " + (dir / "out").string()) == kInputError);

  // unwritable output location
  write(dir, "blocker", "x");
  CHECK(run_binary("mu --config " + good.string() + " --out " + (dir / "blocker" / "sub").string()) == kInputError);
}
