#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "semiinv/cli.hpp"
#include "support/fixtures.hpp"

using namespace semiinv;
using namespace semiinv::testing;

namespace {
std::pair<int, std::string> run(CommandConfig cfg) {
  std::ostringstream os;
  int rc = run_command(cfg, os);
  return {rc, os.str()};
}
}  // namespace

TEST_CASE("info on the bundled groups") {
  CommandConfig cfg;
  cfg.command = "info";
  cfg.group_file = data_path("b2.json");
  auto [rc, out] = run(cfg);
  CHECK(rc == kExitOk);
  CHECK(out.find("group order: 8") != std::string::npos);
  CHECK(out.find("basic invariant degrees: 2, 4") != std::string::npos);
}

TEST_CASE("qchi output and exit codes") {
  CommandConfig cfg;
  cfg.command = "qchi";
  cfg.group_file = data_path("b2.json");
  cfg.character = "det";
  auto [rc, out] = run(cfg);
  CHECK(rc == kExitOk);
  CHECK(out.find("[FAIL]") == std::string::npos);
  // trivial spelling
  cfg.character = "trivial";
  CHECK(run(cfg).first == kExitOk);
  // negative power
  cfg.character = "det^-1";
  CHECK(run(cfg).first == kExitOk);
}

TEST_CASE("basis emits a JSON certificate") {
  CommandConfig cfg;
  cfg.command = "basis";
  cfg.group_file = data_path("cyclic_6.json");
  cfg.character = "det^2";
  cfg.output = "json";
  auto [rc, out] = run(cfg);
  REQUIRE(rc == kExitOk);
  json j = json::parse(out);
  CHECK(j.at("group") == "Z6");
  CHECK(j.at("character") == "det^2");
  CHECK(j.at("generator_degrees") == json::array({3}));
  CHECK(j.contains("q_chi"));
  CHECK(j.contains("witness_scalar"));
  for (const auto& c : j.at("checks")) CHECK(c.at("pass").get<bool>());
  // identical config gives byte-identical output
  auto second = run(cfg);
  CHECK(second.second == out);
}

TEST_CASE("saito on a forms file") {
  // generate a forms file for B2 det via the engine, then feed it back
  SemiInvariantEngine eng(b2());
  SemiInvariantContext ctx = eng.context_det_power(1);
  GeneratorCertificate cert = find_generators(ctx, 10);
  FormsFile f;
  f.conductor = 4;
  f.nvars = 2;
  f.forms = cert.forms;
  std::string path = "/tmp/semiinv_b2_det_forms.json";
  {
    std::ofstream os(path);
    os << to_json(f).dump(1) << "\n";
  }
  CommandConfig cfg;
  cfg.command = "saito";
  cfg.group_file = data_path("b2.json");
  cfg.character = "det";
  cfg.forms_file = path;
  auto [rc, out] = run(cfg);
  CHECK(rc == kExitOk);
  CHECK(out.find("witness") != std::string::npos);
  // a repeated form must fail with exit code 2
  f.forms = {cert.forms[0], cert.forms[0]};
  {
    std::ofstream os(path);
    os << to_json(f).dump(1) << "\n";
  }
  auto [rc2, out2] = run(cfg);
  CHECK(rc2 == kExitMathFailure);
  CHECK(out2.find("[FAIL]") != std::string::npos);
}

TEST_CASE("hilbert command") {
  CommandConfig cfg;
  cfg.command = "hilbert";
  cfg.group_file = data_path("b2.json");
  cfg.character = "det";
  cfg.degree_cap = 10;
  auto [rc, out] = run(cfg);
  CHECK(rc == kExitOk);
  CHECK(out.find("match the free-module prediction") != std::string::npos);
}

TEST_CASE("logcheck command") {
  CommandConfig cfg;
  cfg.command = "logcheck";
  cfg.group_file = data_path("b2.json");
  cfg.character = "det";
  cfg.seed = 7;
  auto [rc, out] = run(cfg);
  CHECK(rc == kExitOk);
  auto again = run(cfg);
  CHECK(again.second == out);  // determinism under a fixed seed
}

TEST_CASE("input errors exit with code 3") {
  CommandConfig cfg;
  cfg.command = "info";
  cfg.group_file = "/nonexistent/nope.json";
  CHECK(run(cfg).first == kExitInputError);
  cfg.command = "qchi";
  cfg.group_file = data_path("b2.json");
  cfg.character = "det^x";
  CHECK(run(cfg).first == kExitInputError);
  cfg.character = "det";
  cfg.command = "saito";
  cfg.forms_file = "/nonexistent/forms.json";
  CHECK(run(cfg).first == kExitInputError);
  cfg.command = "bogus";
  CHECK(run(cfg).first == kExitInputError);
}
