#include <catch2/catch_amalgamated.hpp>

#include "ahm/models.hpp"
#include "ahm/monotonicity.hpp"
#include "oracles.hpp"

using namespace ahm;

namespace {

struct NamedCurve {
  MapBundle bundle;
  ModelBundle dom, tar;
};

NamedCurve load(const std::string& map_name) {
  NamedCurve n;
  n.bundle = build_map(map_name);
  n.dom = build_model(n.bundle.domain_model);
  n.tar = build_model(n.bundle.target_model);
  return n;
}

}  // namespace

TEST_CASE("flat conjugation curve hits its closed forms") {
  NamedCurve n = load("conjugation_flat");
  CurveSpec spec;
  spec.regime = RadialCase::nonpositive;
  spec.m = 2;
  QuadratureOptions q;
  DiffConfig cfg;
  Rng rng(41);
  MonotonicityCurve curve =
      run_curve(n.bundle.map, *n.dom.pole, n.tar.chart, spec,
                {0.25, 0.5, 1.0, 2.0}, q, cfg, rng);
  REQUIRE(curve.points.size() == 4);
  for (const CurvePoint& pt : curve.points) {
    CHECK(std::abs(pt.weighted_integral - oracle::conj_ball_integral(pt.r)) <
          1e-6 * oracle::conj_ball_integral(pt.r));
    CHECK(std::abs(pt.ratio - oracle::conj_ratio(pt.r)) <
          1e-6 * oracle::conj_ratio(pt.r));
    CHECK(std::abs(pt.boundary_integral -
                   oracle::conj_boundary_integral(pt.r)) <
          1e-6 * oracle::conj_boundary_integral(pt.r));
  }
  CHECK(curve.worst_ratio_margin >= 0.0);
  CHECK(curve.hypothesis.certified());
  CHECK(curve.spec.c_torsion < 1e-9);  // flat domain carries no torsion
}

TEST_CASE("hyperbolic conjugation curve is monotone with certified hypotheses") {
  NamedCurve n = load("conjugation_ball_flat");
  CurveSpec spec;
  spec.regime = RadialCase::constant_negative;
  spec.m = 2;
  spec.par.beta = 1.0;
  QuadratureOptions q;
  DiffConfig cfg;
  Rng rng(42);
  std::vector<double> radii;
  for (int k = 0; k < 10; ++k) radii.push_back(0.2 + 1.8 * k / 9.0);
  MonotonicityCurve curve = run_curve(n.bundle.map, *n.dom.pole, n.tar.chart,
                                      spec, radii, q, cfg, rng);
  CHECK(curve.hypothesis.certified());
  CHECK(curve.spec.c_torsion < 1e-9);  // the domain is coclosed
  CHECK(curve.worst_ratio_margin >= -1e-6);
  CHECK(curve.worst_inequality_margin >= -1e-6);
  // normalizer follows the declared hyperbolic shape, sinh(beta r)^(2(m-1))
  // up to the measured torsion correction
  double expo = curve.spec.normalizer_exponent();
  CHECK(std::abs(expo - (2.0 - 2.0 * curve.spec.c_torsion)) < 1e-12);
  for (const CurvePoint& pt : curve.points)
    CHECK(std::abs(pt.normalizer - curve.spec.normalizer(pt.r)) < 1e-12);
}

TEST_CASE("holomorphic maps produce the identically zero curve") {
  NamedCurve n = load("identity_flat");
  CurveSpec spec;
  spec.regime = RadialCase::nonpositive;
  spec.m = 2;
  QuadratureOptions q;
  DiffConfig cfg;
  Rng rng(43);
  MonotonicityCurve curve =
      run_curve(n.bundle.map, *n.dom.pole, n.tar.chart, spec,
                {0.5, 1.0, 1.5, 2.0}, q, cfg, rng);
  for (const CurvePoint& pt : curve.points)
    CHECK(std::abs(pt.weighted_integral) < 1e-12);
}

TEST_CASE("annulus accumulation equals the difference of ball integrals") {
  NamedCurve n = load("conjugation_ball_flat");
  CurveSpec spec;
  spec.regime = RadialCase::constant_negative;
  spec.m = 2;
  QuadratureOptions q;
  DiffConfig cfg;
  std::vector<double> full_radii = {0.1, 0.4, 0.8, 1.2};
  Rng r1(44);
  MonotonicityCurve full = run_curve(n.bundle.map, *n.dom.pole, n.tar.chart,
                                     spec, full_radii, q, cfg, r1);
  CurveSpec aspec = spec;
  aspec.annulus = true;
  aspec.inner_radius = 0.1;
  Rng r2(44);
  MonotonicityCurve ann = run_curve(n.bundle.map, *n.dom.pole, n.tar.chart,
                                    aspec, {0.4, 0.8, 1.2}, q, cfg, r2);
  for (size_t k = 0; k < ann.points.size(); ++k) {
    double expect = full.points[k + 1].weighted_integral -
                    full.points[0].weighted_integral;
    CHECK(std::abs(ann.points[k].weighted_integral - expect) <
          1e-9 * std::max(1.0, expect));
  }
  CHECK(ann.worst_ratio_margin >= -1e-6);
}

TEST_CASE("annulus spec validates its inner radius") {
  NamedCurve n = load("conjugation_ball_flat");
  CurveSpec spec;
  spec.regime = RadialCase::constant_negative;
  spec.m = 2;
  spec.annulus = true;
  spec.inner_radius = 0.5;  // not below the grid
  QuadratureOptions q;
  DiffConfig cfg;
  Rng rng(45);
  CHECK_THROWS_AS(run_curve(n.bundle.map, *n.dom.pole, n.tar.chart, spec,
                            {0.4, 0.8}, q, cfg, rng),
                  ConfigError);
}

TEST_CASE("radius grids beyond the usable chart range are rejected") {
  NamedCurve n = load("conjugation_ball_flat");
  CurveSpec spec;
  spec.regime = RadialCase::constant_negative;
  spec.m = 2;
  QuadratureOptions q;
  DiffConfig cfg;
  Rng rng(46);
  CHECK_THROWS_AS(run_curve(n.bundle.map, *n.dom.pole, n.tar.chart, spec,
                            {1.0, 3.5}, q, cfg, rng),
                  ConfigError);
}

TEST_CASE("growth diagnostic recovers the conjugation's quartic rate") {
  NamedCurve n = load("conjugation_flat");
  CurveSpec spec;
  spec.regime = RadialCase::nonpositive;
  spec.m = 2;
  QuadratureOptions q;
  DiffConfig cfg;
  Rng rng(47);
  std::vector<double> radii;
  for (int k = 0; k < 10; ++k) radii.push_back(0.25 + 1.75 * k / 9.0);
  MonotonicityCurve curve = run_curve(n.bundle.map, *n.dom.pole, n.tar.chart,
                                      spec, radii, q, cfg, rng);
  Rng rng2(48);
  GrowthDiagnostic d = growth_diagnostic(curve, n.bundle.map, *n.dom.pole,
                                         n.tar.chart, rng2, 100, cfg);
  CHECK(std::abs(d.fitted_slope - 4.0) < 0.05);
  CHECK(std::abs(d.threshold - 2.0) < 1e-12);
  CHECK_FALSE(d.hypothesis_consistent);
  CHECK_FALSE(d.conclusion_checked);
}

TEST_CASE("growth diagnostic certifies the degenerate holomorphic case") {
  NamedCurve n = load("identity_flat");
  CurveSpec spec;
  spec.regime = RadialCase::nonpositive;
  spec.m = 2;
  QuadratureOptions q;
  DiffConfig cfg;
  Rng rng(49);
  std::vector<double> radii;
  for (int k = 0; k < 8; ++k) radii.push_back(0.25 + 1.75 * k / 7.0);
  MonotonicityCurve curve = run_curve(n.bundle.map, *n.dom.pole, n.tar.chart,
                                      spec, radii, q, cfg, rng);
  Rng rng2(50);
  GrowthDiagnostic d = growth_diagnostic(curve, n.bundle.map, *n.dom.pole,
                                         n.tar.chart, rng2, 100, cfg);
  CHECK(d.energy_identically_zero);
  CHECK(d.hypothesis_consistent);
  CHECK(d.conclusion_checked);
  CHECK(d.max_dbar_density <= 1e-9);
}

TEST_CASE("growth diagnostic refuses underresolved curves") {
  NamedCurve n = load("conjugation_flat");
  CurveSpec spec;
  spec.regime = RadialCase::nonpositive;
  spec.m = 2;
  QuadratureOptions q;
  DiffConfig cfg;
  Rng rng(51);
  MonotonicityCurve curve = run_curve(n.bundle.map, *n.dom.pole, n.tar.chart,
                                      spec, {0.5, 1.0, 1.5}, q, cfg, rng);
  Rng rng2(52);
  CHECK_THROWS_AS(growth_diagnostic(curve, n.bundle.map, *n.dom.pole,
                                    n.tar.chart, rng2, 10, cfg),
                  ConfigError);
}

TEST_CASE("hypothesis measurement flags maps that are not pluriharmonic") {
  NamedCurve n = load("mixed_nonholomorphic");
  CurveSpec spec;
  spec.regime = RadialCase::nonpositive;
  spec.m = 2;
  DiffConfig cfg;
  Rng rng(53);
  HypothesisReport rep = measure_hypotheses(n.bundle.map, *n.dom.pole,
                                            n.tar.chart, spec, 0.3, rng, 32,
                                            cfg);
  CHECK_FALSE(rep.pluriharmonic);
  CHECK_FALSE(rep.certified());
  CHECK(rep.max_defect > 1e-4);
}

TEST_CASE("measured torsion constant feeds the exponent") {
  // Conformal factor phi(rho) = 1/(1 + rho^2/10): smooth at the pole, fully
  // closed-form polar data, and a torsion vector of length 0.4 rho, so the
  // flat-regime hypothesis constant is strictly positive and lowers the
  // growth exponent.
  const double k = 0.1, rt = std::sqrt(10.0);
  auto phi = [=](double rho) { return 1.0 / (1.0 + k * rho * rho); };
  PoleModel pole;
  pole.name = "conformal_arc";
  Chart& c = pole.chart;
  c.name = "conformal_arc";
  c.m = 2;
  c.metric = [=](const Vec& p) {
    double f = phi(p.norm());
    return Mat(f * f * Mat::Identity(4, 4));
  };
  Mat j0 = standard_acs(2);
  c.acs = [j0](const Vec&) { return j0; };
  c.sample = box_sampler(4, 1.0);
  pole.exponential = [=](double s, const Vec& dir) {
    return Vec(rt * std::tan(s / rt) * dir);
  };
  pole.radius = [=](const Vec& p) { return rt * std::atan(p.norm() / rt); };
  pole.density = [=](double s) {
    double rho = rt * std::tan(s / rt);
    double t = rho * phi(rho);
    return t * t * t;
  };
  pole.r_limit = 3.0;

  DiffConfig cfg;
  // torsion closed form first: |V| = 2(m-1)|phi'|/phi^2 = 0.4 rho
  for (double rho : {0.7, 1.5, 2.4}) {
    Vec p(4);
    p << rho * 0.48, rho * 0.64, rho * 0.6, 0.0;
    Vec v = torsion_vector(c, p, cfg);
    Mat g = c.metric_at(p);
    CHECK(std::abs(std::sqrt(v.dot(g * v)) - 0.4 * rho) < 1e-5);
  }

  SmoothMap idm;
  idm.name = "identity";
  idm.value = [](const Vec& p) { return p; };
  idm.jacobian_exact = [](const Vec& p) {
    return Mat(Mat::Identity(p.size(), p.size()));
  };
  CurveSpec spec;
  spec.regime = RadialCase::nonpositive;
  spec.m = 2;
  QuadratureOptions q;
  Rng rng(54);
  MonotonicityCurve curve =
      run_curve(idm, pole, c, spec, {0.8, 1.4, 2.0}, q, cfg, rng);
  CHECK(curve.hypothesis.certified());
  CHECK(curve.spec.c_torsion > 0.5);
  CHECK(curve.spec.lambda() < 1.0);
}
