#include <catch2/catch_amalgamated.hpp>

#include "ahm/report.hpp"
#include "ahm/suites.hpp"

#include <algorithm>
#include <set>

using namespace ahm;

namespace {

RunOptions quick_options(std::uint64_t seed = 7) {
  RunOptions o;
  o.seed = seed;
  o.samples = 6;
  return o;
}

}  // namespace

TEST_CASE("suite names round trip through the string table") {
  const auto& table = suite_table();
  CHECK(table.size() == 14);
  for (const auto& [id, name] : table) {
    CHECK(to_string(id) == name);
    CHECK(suite_from_string(name) == id);
  }
  CHECK(suite_names().size() == table.size());
  CHECK_THROWS_AS(suite_from_string("no_such_suite"), ConfigError);
}

TEST_CASE("suite dispatch labels reports with wire names") {
  RunOptions o = quick_options();
  SuiteReport a = run_suite(SuiteId::connection_axioms, o);
  CHECK(a.suite == "connection_axioms");
  CHECK(a.pass());
  CHECK(a.checks.size() >= 4);
  CHECK(a.wall_seconds > 0.0);
  std::set<std::string> names;
  for (const auto& c : a.checks) names.insert(c.name);
  CHECK(names.size() == a.checks.size());

  SuiteReport b = run_suite(SuiteId::lemma32, o);
  CHECK(b.suite == "lemma32");
  CHECK(b.pass());
}

TEST_CASE("check records aggregate residual samples") {
  CheckRecord r = CheckRecord::from_samples("probe", "max and mean of samples",
                                            {1e-9, 3e-8, 2e-9}, 1e-7);
  CHECK(r.pass);
  CHECK(r.samples == 3);
  CHECK(r.max_residual == 3e-8);
  CHECK(r.mean_residual == Catch::Approx((1e-9 + 3e-8 + 2e-9) / 3.0));
  CheckRecord bad =
      CheckRecord::from_samples("probe", "over tolerance", {2e-7}, 1e-7);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("report serialization keeps timings opt-in") {
  RunOptions o = quick_options();
  VerificationReport rep;
  rep.seed = o.seed;
  rep.threads = o.threads;
  rep.diff = o.diff;
  rep.suites.push_back(run_suite(SuiteId::connection_axioms, o));

  nlohmann::json j = rep.to_json();
  CHECK(j["tool"] == "ahm-verify");
  CHECK(j["seed"] == 7);
  CHECK(j["pass"] == true);
  CHECK(j["fd"]["scheme"] == "central2");
  REQUIRE(j["suites"].size() == 1);
  CHECK_FALSE(j["suites"][0].contains("wall_seconds"));
  CHECK(nlohmann::json::parse(j.dump()) == j);

  rep.include_timings = true;
  CHECK(rep.to_json()["suites"][0].contains("wall_seconds"));
  rep.include_timings = false;

  std::string text = rep.to_text();
  CHECK(text.find("suite connection_axioms: PASS") != std::string::npos);
  CHECK(text.find("overall: PASS") != std::string::npos);
}

TEST_CASE("emit_report selects the declared formats") {
  RunOptions o = quick_options();
  VerificationReport rep;
  rep.seed = o.seed;
  rep.suites.push_back(run_suite(SuiteId::lemma32, o));
  CHECK(nlohmann::json::parse(emit_report(rep, "json")) == rep.to_json());
  CHECK(emit_report(rep, "text") == rep.to_text());
  CHECK_THROWS_AS(emit_report(rep, "yaml"), ConfigError);
}

TEST_CASE("identical options give byte-identical reports") {
  auto render = [](std::uint64_t seed) {
    RunOptions o = quick_options(seed);
    VerificationReport rep;
    rep.seed = seed;
    rep.suites.push_back(run_suite(SuiteId::connection_axioms, o));
    rep.suites.push_back(run_suite(SuiteId::classification_zoo, o));
    return emit_report(rep, "json");
  };
  CHECK(render(7) == render(7));
  CHECK(render(7) != render(8));
}

TEST_CASE("coverage registry spans every operation exactly") {
  std::vector<std::string> ops = all_operations();
  std::set<std::string> registry(ops.begin(), ops.end());
  CHECK(registry.size() == ops.size());

  const auto& cov = suite_coverage();
  std::vector<std::string> names = suite_names();
  std::set<std::string> expected_keys(names.begin(), names.end());
  expected_keys.insert("harness");
  std::set<std::string> keys;
  std::set<std::string> covered;
  for (const auto& [suite, used] : cov) {
    keys.insert(suite);
    for (const auto& op : used) {
      INFO("suite " << suite << " claims unknown operation " << op);
      CHECK(registry.count(op) == 1);
      covered.insert(op);
    }
  }
  CHECK(keys == expected_keys);
  for (const auto& op : registry) {
    INFO("operation " << op << " is exercised by no suite");
    CHECK(covered.count(op) == 1);
  }
}

TEST_CASE("curve csv output has a frozen header") {
  MapBundle conj = build_map("conjugation_flat");
  ModelBundle flat = build_model("flat_complex");
  ModelBundle tar = build_model(conj.target_model);
  CurveSpec spec;
  spec.regime = RadialCase::nonpositive;
  QuadratureOptions q;
  q.radial_nodes = 12;
  q.sphere_nodes = 4;
  DiffConfig cfg;
  Rng rng(11);
  MonotonicityCurve curve = run_curve(conj.map, *flat.pole, tar.chart, spec,
                                      {0.5, 1.0}, q, cfg, rng, 8);
  std::string csv = curve_to_csv(curve);
  CHECK(csv.rfind("r,weighted_integral,normalizer,ratio,boundary_integral,"
                  "margin\n",
                  0) == 0);
  long rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == static_cast<long>(curve.points.size()) + 1);
}

TEST_CASE("numbers serialize with twelve significant digits") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-2.0) == "-2");
  CHECK(format_double(9.869604401089358) == "9.86960440109");
  CHECK(format_double(1e-9) == "1e-09");
}

TEST_CASE("model and map configuration round trips") {
  nlohmann::json jm = {{"kind", "warped_radial"},
                       {"case", "constant_negative"},
                       {"beta", 1.0},
                       {"m", 2}};
  ModelBundle mb = model_from_json(jm);
  REQUIRE(mb.radial.has_value());
  CHECK(mb.radial->tag() == RadialCase::constant_negative);
  CHECK(mb.chart.dim() == 4);

  ModelBundle named = model_from_json({{"kind", "perturbed_acs"}});
  CHECK(named.chart.name == "perturbed_acs");

  MapBundle byname = map_from_json({{"name", "conjugation_flat"}});
  CHECK(byname.map.name == "conjugation_flat");
  CHECK(byname.map.declared_antiholomorphic);

  MapBundle poly = map_from_json(
      {{"kind", "random_polynomial"}, {"seed", 3}, {"scale", 0.5}});
  CHECK(poly.map.jacobian_exact != nullptr);
  Vec p = Vec::Zero(4);
  MapBundle poly2 = map_from_json(
      {{"kind", "random_polynomial"}, {"seed", 3}, {"scale", 0.5}});
  CHECK((poly.map.at(p) - poly2.map.at(p)).norm() == 0.0);

  CHECK_THROWS_AS(map_from_json({{"kind", "spline"}}), ConfigError);
  CHECK_THROWS_AS(model_from_json({{"kind", "warped_radial"},
                                   {"case", "mystery"}}),
                  ConfigError);
}
