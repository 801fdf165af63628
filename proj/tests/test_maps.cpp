#include <catch2/catch_amalgamated.hpp>

#include "ahm/models.hpp"
#include "ahm/stress.hpp"
#include "oracles.hpp"

using namespace ahm;

namespace {

Chart flat_chart_m1() {
  Chart c;
  c.name = "flat_m1";
  c.m = 1;
  c.metric = [](const Vec&) { return Mat(Mat::Identity(2, 2)); };
  Mat j0 = standard_acs(1);
  c.acs = [j0](const Vec&) { return j0; };
  c.sample = box_sampler(2, 1.0);
  return c;
}

}  // namespace

TEST_CASE("differential split is a projection pair") {
  ModelBundle dom = build_model("perturbed_acs");
  ModelBundle tar = build_model("complex_hyperbolic");
  Rng rng(21);
  SmoothMap u = random_polynomial_map(rng, 4, 4, 0.5);
  Vec p = dom.chart.sample_many(rng, 1)[0];
  DiffConfig cfg;
  MapJet jet = make_jet(u, dom.chart, tar.chart, p, cfg);
  DifferentialSplit s = split_differential(jet.du, jet.jd, jet.jt);
  CHECK((s.sigma + s.sigma_prime - jet.du).cwiseAbs().maxCoeff() < 1e-12);
  // sigma anti-commutes, sigma' commutes with the structures
  CHECK((jet.jt * s.sigma + s.sigma * jet.jd).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((jet.jt * s.sigma_prime - s.sigma_prime * jet.jd).cwiseAbs().maxCoeff() <
        1e-12);
  // energy densities add up
  CHECK(std::abs(energy_density(jet) -
                 (dbar_energy_density(jet) + del_energy_density(jet))) <
        1e-12);
}

TEST_CASE("conjugation has constant conjugate energy two") {
  ModelBundle flat = build_model("flat_complex");
  MapBundle b = build_map("conjugation_flat");
  Rng rng(22);
  DiffConfig cfg;
  Vec p = flat.chart.sample_many(rng, 1)[0];
  MapJet jet = make_jet(b.map, flat.chart, flat.chart, p, cfg);
  CHECK(std::abs(dbar_energy_density(jet) - 2.0) < 1e-12);
  DifferentialSplit s = split_differential(jet.du, jet.jd, jet.jt);
  CHECK((s.sigma - jet.du).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("harmonic polynomial into a rank-one flat target has zero tension") {
  Chart tar = flat_chart_m1();
  ModelBundle dom = build_model("flat_complex");
  SmoothMap u;
  u.name = "saddle_pair";
  u.value = [](const Vec& p) {
    Vec q(2);
    q << p(0) * p(0) - p(1) * p(1), p(2);
    return q;
  };
  Vec p(4);
  p << 0.3, -0.2, 0.5, 0.1;
  DiffConfig cfg;
  MapJet jet = make_jet(u, dom.chart, tar, p, cfg);
  Vec tau = tension_of(hessian_levi_civita(u, dom.chart, tar, jet, cfg), jet.gi);
  CHECK(tau.cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("defect is invariant under the structure rotation of both slots") {
  MapBundle b = build_map("mixed_nonholomorphic");
  ModelBundle dom = build_model(b.domain_model);
  ModelBundle tar = build_model(b.target_model);
  Rng rng(23);
  DiffConfig cfg;
  Vec p = b.sample ? b.sample(rng) : dom.chart.sample_many(rng, 1)[0];
  MapJet jet = make_jet(b.map, dom.chart, tar.chart, p, cfg);
  Tensor3 pd = pluriharmonic_defect(b.map, dom.chart, tar.chart, jet, cfg);
  Vec x = rng.normal_vec(4), y = rng.normal_vec(4);
  Vec a = contract2(pd, x, y);
  Vec bb = contract2(pd, Vec(jet.jd * x), Vec(jet.jd * y));
  CHECK((a - bb).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("mixed map's defect is large and stable under step refinement") {
  MapBundle b = build_map("mixed_nonholomorphic");
  ModelBundle dom = build_model(b.domain_model);
  ModelBundle tar = build_model(b.target_model);
  Vec p(4);
  p << 0.2, 0.1, -0.15, 0.25;
  DiffConfig cfg;
  MapJet jet = make_jet(b.map, dom.chart, tar.chart, p, cfg);
  double v1 = pluriharmonic_defect(b.map, dom.chart, tar.chart, jet, cfg).max_abs();
  DiffConfig half = cfg;
  half.step *= 0.5;
  half.step_second *= 0.5;
  MapJet jet2 = make_jet(b.map, dom.chart, tar.chart, p, half);
  double v2 =
      pluriharmonic_defect(b.map, dom.chart, tar.chart, jet2, half).max_abs();
  CHECK(v1 > 1e-4);
  CHECK(std::abs(v1 - v2) < 1e-4 * v1);
}

TEST_CASE("structure-reversing maps satisfy the flipped-structure equation") {
  MapBundle b = build_map("conjugation_ball_flat");
  ModelBundle dom = build_model(b.domain_model);
  ModelBundle tar = build_model(b.target_model);
  Chart tflip = tar.chart;
  {
    auto base = tflip.acs;
    tflip.acs = [base](const Vec& p) { return Mat(-base(p)); };
  }
  Rng rng(24);
  DiffConfig cfg;
  Vec p = dom.chart.sample_many(rng, 1)[0];
  MapJet jet = make_jet(b.map, dom.chart, tar.chart, p, cfg);
  CHECK(antiholomorphy_residual(jet) < 1e-12);
  MapJet jf = make_jet(b.map, dom.chart, tflip, p, cfg);
  CHECK(pluriharmonic_defect(b.map, dom.chart, tflip, jf, cfg).max_abs() < 1e-6);
}

TEST_CASE("defect equals the pushed Nijenhuis difference for holomorphic maps") {
  MapBundle b = build_map("identity_perturbed");
  ModelBundle dom = build_model(b.domain_model);
  ModelBundle tar = build_model(b.target_model);
  Rng rng(25);
  DiffConfig cfg;
  Vec p = dom.chart.sample_many(rng, 1)[0];
  MapJet jet = make_jet(b.map, dom.chart, tar.chart, p, cfg);
  REQUIRE(holomorphy_residual(jet) < 1e-10);
  Tensor3 pd = pluriharmonic_defect(b.map, dom.chart, tar.chart, jet, cfg);
  Tensor3 nd = nijenhuis(dom.chart, p, cfg);
  Tensor3 nt = nijenhuis(tar.chart, jet.q, cfg);
  REQUIRE(nd.max_abs() > 1e-3);  // the bracket terms are individually nonzero
  Tensor3 nf = defect_nijenhuis_form(jet, nd, nt);
  double worst = 0.0;
  for (int c = 0; c < 4; ++c)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        worst = std::max(worst, std::abs(pd(c, i, j) - nf(c, i, j)));
  CHECK(worst < 1e-6);
}

TEST_CASE("connection gap form is symmetric and vanishes when parallel") {
  DiffConfig cfg;
  ModelBundle pb = build_model("perturbed_acs");
  Rng rng(26);
  Vec p = pb.chart.sample_many(rng, 1)[0];
  Tensor3 a = connection_gap_form(pb.chart, p, cfg);
  CHECK(a.max_abs() > 1e-3);
  double asym = 0.0;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        asym = std::max(asym, std::abs(a(k, i, j) - a(k, j, i)));
  CHECK(asym < 1e-9);
  ModelBundle fb = build_model("complex_hyperbolic");
  Vec q = fb.chart.sample_many(rng, 1)[0];
  CHECK(connection_gap_form(fb.chart, q, cfg).max_abs() < 1e-6);
}

TEST_CASE("hessian gap identities close for random maps") {
  ModelBundle dom = build_model("perturbed_acs");
  ModelBundle tar = build_model("flat_complex");
  Rng rng(27);
  DiffConfig cfg;
  for (int t = 0; t < 5; ++t) {
    SmoothMap u = random_polynomial_map(rng, 4, 4);
    Vec p = dom.chart.sample_many(rng, 1)[0];
    MapJet jet = make_jet(u, dom.chart, tar.chart, p, cfg);
    CHECK(kaehler_target_defect_gap_residual(u, dom.chart, tar.chart, jet, cfg) <
          1e-6);
    CHECK(tension_gap_residual(u, dom.chart, tar.chart, jet, cfg) < 1e-6);
  }
}

TEST_CASE("stress tensor has the exact trace and conjugation normal form") {
  ModelBundle flat = build_model("flat_complex");
  MapBundle cb = build_map("conjugation_flat");
  Rng rng(28);
  DiffConfig cfg;
  Vec p = flat.chart.sample_many(rng, 1)[0];
  MapJet jet = make_jet(cb.map, flat.chart, flat.chart, p, cfg);
  Mat sigma = form_value(FormKind::sigma_part, jet);
  Mat s = stress_tensor(sigma, jet);
  CHECK((s - jet.g).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs((jet.gi * s).trace() - 1.0 * form_norm_sq(sigma, jet)) <
        1e-12);
}

TEST_CASE("divergence identity holds pointwise with no map hypotheses") {
  ModelBundle dom = build_model("hopf_type");
  ModelBundle tar = build_model("complex_hyperbolic");
  Rng rng(29);
  DiffConfig cfg;
  SmoothMap u = random_polynomial_map(rng, 4, 4, 0.5);
  Vec p = dom.chart.sample_many(rng, 1)[0];
  Vec x = rng.normal_vec(4);
  for (FormKind k : {FormKind::differential, FormKind::sigma_part,
                     FormKind::sigma_prime_part}) {
    DivergenceCheck dc =
        divergence_identity_check(k, u, dom.chart, tar.chart, p, x, cfg);
    CHECK(dc.residual() < 1e-6);
  }
}

TEST_CASE("codifferential and exterior identities close on curved domains") {
  MapBundle b = build_map("conjugation_conformal_flat");
  ModelBundle dom = build_model(b.domain_model);
  Rng rng(30);
  DiffConfig cfg;
  ModelBundle tar = build_model(b.target_model);
  for (int t = 0; t < 3; ++t) {
    Vec p = dom.chart.sample_many(rng, 1)[0];
    CHECK(sigma_codifferential_residual(b.map, dom.chart, tar.chart, p, cfg) <
          1e-6);
    CHECK(sigma_exterior_residual(b.map, dom.chart, tar.chart, p, cfg) < 1e-6);
  }
}

TEST_CASE("adapted tensor bound meets equality at the metric") {
  ModelBundle flat = build_model("flat_complex");
  MapBundle cb = build_map("conjugation_flat");
  Rng rng(31);
  DiffConfig cfg;
  Vec p = flat.chart.sample_many(rng, 1)[0];
  MapJet jet = make_jet(cb.map, flat.chart, flat.chart, p, cfg);
  AdaptedBoundTrial unit = adapted_bound_trial(jet, {1.0, 1.0, 1.0, 1.0});
  CHECK(std::abs(unit.inner - unit.bound) < 1e-12);
  CHECK(std::abs(unit.inner - 2.0 * unit.dbar_density) < 1e-12);
  // the bound stays below the pairing for random admissible eigenvalues
  for (int t = 0; t < 50; ++t) {
    std::vector<double> ev(4);
    for (double& e : ev) e = rng.uniform(0.05, 2.5);
    AdaptedBoundTrial trial = adapted_bound_trial(jet, ev);
    CHECK(trial.margin() >= -1e-10);
  }
}

TEST_CASE("adapted tensor rejects the wrong eigenvalue count") {
  ModelBundle flat = build_model("flat_complex");
  Mat g = Mat::Identity(4, 4);
  Mat j = standard_acs(2);
  CHECK_THROWS_AS(adapted_symmetric_tensor(g, j, {1.0, 2.0, 3.0}), ConfigError);
  (void)flat;
}

TEST_CASE("jet construction rejects points outside the chart") {
  ModelBundle ball = build_model("complex_hyperbolic");
  MapBundle cb = build_map("conjugation_flat");
  Vec p(4);
  p << 2.0, 0.0, 0.0, 0.0;
  DiffConfig cfg;
  ModelBundle flat = build_model("flat_complex");
  CHECK_THROWS_AS(make_jet(cb.map, ball.chart, flat.chart, p, cfg),
                  DomainError);
}
