#include <catch2/catch_amalgamated.hpp>

#include "semiinv/io.hpp"
#include "support/fixtures.hpp"
#include "support/test_gen.hpp"

using namespace semiinv;
using namespace semiinv::testing;

TEST_CASE("cyclotomic numbers round-trip bit-exactly") {
  auto& eng = rng(801);
  for (int m : {1, 2, 4, 6, 12}) {
    for (int t = 0; t < 30; ++t) {
      CycNum v = random_cyc(eng, m);
      json j = to_json(v);
      CycNum back = cycnum_from_json(j, m);
      CHECK(back == v);
      CHECK(to_json(back) == j);  // byte-stable encoding
    }
  }
  // non-canonical input is accepted and reduced, value preserved
  json j = json::array();
  for (int i = 0; i < 12; ++i) j.push_back("0");
  j[6] = "1";  // zeta_12^6 = -1
  CycNum v = cycnum_from_json(j, 12);
  CHECK(v == CycNum(12, Rat(-1)));
}

TEST_CASE("malformed cyclotomic input is rejected") {
  CHECK_THROWS_AS(cycnum_from_json(json::array({"1", "0"}), 4), input_error);
  CHECK_THROWS_AS(cycnum_from_json(json::array({"1", "x", "0", "0"}), 4), input_error);
  CHECK_THROWS_AS(cycnum_from_json(json::array({"1", "1/0", "0", "0"}), 4), input_error);
}

TEST_CASE("polynomials and forms round-trip") {
  auto& eng = rng(802);
  for (int t = 0; t < 25; ++t) {
    MPoly p = random_mpoly(eng, 3, 12, 4);
    json j = to_json(p);
    MPoly back = mpoly_from_json(j, 3, 12);
    CHECK(back == p);
    CHECK(to_json(back) == j);
    for (int deg = 0; deg <= 3; ++deg) {
      DiffForm w = random_form(eng, 3, 12, deg, 3);
      json jw = to_json(w);
      DiffForm wback = form_from_json(jw, 3, 12, deg);
      CHECK(wback == w);
      CHECK(to_json(wback) == jw);
    }
  }
}

TEST_CASE("group specifications round-trip through JSON") {
  GroupSpec s = group_spec_from_json(load_json_file(data_path("b2.json")));
  CHECK(s.conductor == 4);
  CHECK(s.dim == 2);
  CHECK(s.name == "B2");
  json j = to_json(s);
  GroupSpec back = group_spec_from_json(j);
  CHECK(back.generators.size() == s.generators.size());
  for (std::size_t i = 0; i < s.generators.size(); ++i)
    CHECK(back.generators[i] == s.generators[i]);
}

TEST_CASE("the bundled forms file parses and matches its metadata") {
  FormsFile f = forms_from_json(load_json_file(data_path("g26_det3_forms.json")));
  CHECK(f.conductor == 12);
  CHECK(f.nvars == 3);
  REQUIRE(f.forms.size() == 3);
  CHECK(form_coeff_degree(f.forms[0]) == 8);
  CHECK(form_coeff_degree(f.forms[1]) == 14);
  CHECK(form_coeff_degree(f.forms[2]) == 20);
  CHECK(!f.notes.empty());
  // round trip
  json j = to_json(f);
  FormsFile back = forms_from_json(j);
  for (int i = 0; i < 3; ++i)
    CHECK(back.forms[static_cast<std::size_t>(i)] == f.forms[static_cast<std::size_t>(i)]);
  CHECK(to_json(back) == j);
}

TEST_CASE("bad group files are rejected as input errors") {
  CHECK_THROWS_AS(load_group(data_path("missing.json")), input_error);
  json j = load_json_file(data_path("b2.json"));
  j["generators"][0][0][0] = json::array({"2", "0", "0", "0"});  // entry 2: not unitary
  GroupSpec s = group_spec_from_json(j);
  CHECK_THROWS_AS(ReflectionGroup(std::move(s.generators), s.name), input_error);
}
