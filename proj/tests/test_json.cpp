#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "insep/json_io.hpp"
#include "insep/rng.hpp"
#include "insep/suite.hpp"

using namespace insep;

namespace {

extension_profile mk(std::uint64_t p, std::vector<std::uint32_t> es,
                     std::vector<generator_relation> rels = {}) {
  extension_profile pr;
  pr.p = p;
  pr.exponents = std::move(es);
  pr.relations = std::move(rels);
  return pr;
}

}  // namespace

TEST_CASE("profile round-trip") {
  generator_relation rel;
  rel.index = 2;
  rel.terms = {{1, {2}}};
  for (const auto& pr : {mk(2, {1, 1}), mk(3, {2, 1}), mk(5, {}), mk(2, {2, 1}, {rel})}) {
    const json j = profile_to_json(pr);
    const extension_profile back = profile_from_json(j);
    CHECK(back == pr);
  }
  const json j = profile_to_json(mk(2, {2, 1}, {rel}));
  CHECK(j["p"] == 2);
  CHECK(j["exponents"] == json::array({2, 1}));
  CHECK(j["relations"][0]["i"] == 2);
  CHECK(j["relations"][0]["terms"] == json::array({json::array({1, json::array({2})})}));
}

TEST_CASE("profile parsing rejects malformed input") {
  CHECK_THROWS_AS(profile_from_json(json::parse(R"({"exponents": []})")), error);
  CHECK_THROWS_AS(profile_from_json(json::parse(R"({"p": 4, "exponents": []})")), error);
  CHECK_THROWS_AS(profile_from_json(json::parse(R"({"p": 2, "exponents": [1, 2]})")), error);
  CHECK_THROWS_AS(profile_from_json(json::parse(R"({"p": 2, "exponents": "x"})")), error);
  CHECK_THROWS_AS(profile_from_json(json::parse(R"({"p": -2, "exponents": []})")), error);
  CHECK_NOTHROW(profile_from_json(json::parse(R"({"p": 2, "exponents": []})")));
}

TEST_CASE("element round-trip") {
  const ring_ptr r = ring::make(mk(3, {2, 1}));
  splitmix64 g(3);
  for (int t = 0; t < 20; ++t) {
    element x = r->random_ideal_element(g.next(), 5);
    if (g.below(2)) x = r->add(x, r->one());
    const json j = element_to_json(x);
    CHECK(element_from_json(r, j) == x);
  }
  CHECK(element_to_json(r->zero()) == json::array());
  const element a2 = r->generator(2);
  // a2 sits at packed index 9 (strides: a1 innermost with cap 9): nu = (0, 1).
  CHECK(element_to_json(a2) == json::array({json::array({1, json::array({0, 1})})}));
  CHECK_THROWS_AS(element_from_json(r, json::parse("[[1, [0]]]")), error);  // nu too short
  CHECK_THROWS_AS(element_from_json(r, json::parse("[0]")), error);
}

TEST_CASE("matrix round-trip") {
  const ring_ptr r = ring::make(mk(2, {1, 1}));
  splitmix64 g(8);
  matrix m(r, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = r->random_ideal_element(g.next(), 3);
  const json j = matrix_to_json(m);
  CHECK(j["size"] == 3);
  CHECK(matrix_from_json(r, j) == m);
  CHECK_THROWS_AS(matrix_from_json(r, json::parse(R"({"size": 2, "entries": []})")), error);
}

TEST_CASE("witness serialization") {
  const ring_ptr r = ring::make(mk(2, {1, 1}));
  const witness_report w = borel_witness(r, 2);
  const json j = witness_to_json(w);
  CHECK(j["case"] == "exact");
  CHECK(j["q"] == 1);
  CHECK(j["tau"] == 0);
  CHECK(j["claimed_power"] == 2);
  CHECK(j["verified_exponent"] == 2);
  CHECK(j["matrix"]["size"] == 2);

  const witness_report gen = borel_witness(ring::make(mk(2, {1, 1, 1})), 2);
  const json jg = witness_to_json(gen);
  CHECK(jg["case"] == "generic");
  CHECK(jg["q"].is_null());
  CHECK(jg["tau"].is_null());
}

TEST_CASE("prediction serialization") {
  const prediction p = predict(mk(2, {2, 1}), parse_group("GL3", 0));
  const json j = prediction_to_json(p);
  CHECK(j["applicable"] == true);
  CHECK(j["exact"] == 3);
  CHECK(j["lower"] == 3);
  CHECK(j["upper"] == 3);
  CHECK(j["citations"].is_array());
  CHECK_FALSE(j["citations"].empty());
  for (const auto& c : j["citations"]) {
    CHECK(c.contains("rule"));
    CHECK(c.contains("quote"));
  }
  const prediction gate = predict(mk(3, {1}), parse_group("E6", 0));
  const json jg = prediction_to_json(gate);
  CHECK(jg["applicable"] == false);
  CHECK(jg["exact"].is_null());
  CHECK(jg["reason"].is_string());
}

TEST_CASE("sl2 serialization") {
  const ring_ptr r = ring::make(mk(2, {1, 1}));
  const json j = sl2_witness_to_json(sl2_full_witness(r));
  CHECK(j["exponent"] == 2);
  CHECK(j["expected"] == 2);
  CHECK(j["nonzero_at_e"] == true);
  CHECK(j["pass"] == true);
  const json jc = sl2_check_to_json(sl2_sample_check(r, 4, 0));
  CHECK(jc["exhaustive"] == true);
  CHECK(jc["violations"] == 0);
  CHECK(jc["attained"] == true);
}

TEST_CASE("suite report shape and determinism") {
  suite_config cfg;
  cfg.profiles = {mk(2, {1}), mk(2, {1, 1})};
  cfg.trials = 6;
  cfg.seed = 42;
  const suite_report rep = run_suite(cfg);
  CHECK(rep.pass);
  const json j = suite_report_to_json(rep);
  CHECK(j["pass"] == true);
  CHECK(j["config"]["trials"] == 6);
  CHECK(j["config"]["seed"] == 42);
  CHECK(j["results"].is_array());
  CHECK(j["results"].size() == rep.items.size());
  for (const auto& item : j["results"]) {
    CHECK(item["status"] == "pass");
    CHECK(item["cases"].get<std::uint64_t>() > 0);
  }
  // Byte-identical across runs with the same seed.
  const suite_report rep2 = run_suite(cfg);
  CHECK(suite_report_to_json(rep2).dump() == j.dump());
  // Fault injection must flip the nilpotency property.
  suite_config bad = cfg;
  bad.negate = true;
  const suite_report repn = run_suite(bad);
  CHECK_FALSE(repn.pass);
  bool found = false;
  for (const suite_item& it : repn.items)
    if (it.property == "ideal-nilpotency") {
      found = true;
      CHECK_FALSE(it.pass);
      CHECK_FALSE(it.details.empty());
    }
  CHECK(found);
}

TEST_CASE("modular grid enumeration") {
  const std::vector<extension_profile> grid = modular_grid({2}, 1u << 4);
  // Sequences with prod 2^{e_i} <= 16: (), (1), (1,1), (1,1,1), (1,1,1,1), (2), (2,1),
  // (2,1,1), (2,2), (3), (3,1), (4).
  CHECK(grid.size() == 12);
  for (const extension_profile& pr : grid) {
    CHECK(pr.p == 2);
    CHECK(pr.relations.empty());
    CHECK_NOTHROW(validate(pr));
    std::uint64_t dim = 1;
    for (std::uint32_t e : pr.exponents) dim *= p_power(2, e);
    CHECK(dim <= 16);
  }
  // Both characteristics appear, each with its empty profile.
  const std::vector<extension_profile> two = modular_grid({2, 3}, 8);
  std::size_t empty_count = 0;
  for (const extension_profile& pr : two)
    if (pr.exponents.empty()) ++empty_count;
  CHECK(empty_count == 2);
}
