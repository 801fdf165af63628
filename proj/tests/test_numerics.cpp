#include <catch2/catch_amalgamated.hpp>

#include "ahm/fd.hpp"
#include "ahm/quadrature.hpp"
#include "oracles.hpp"

using namespace ahm;

TEST_CASE("central differences hit smooth fields at the expected order") {
  MatFn f = [](const Vec& p) {
    Mat m(2, 2);
    m << std::sin(p(0)) * std::cos(p(1)), std::exp(0.3 * p(0)),
        p(0) * p(0) * p(1), std::cos(p(1));
    return m;
  };
  Vec p(2);
  p << 0.4, -0.7;
  DiffConfig cfg;

  Mat d0 = partial_derivative(f, p, 0, cfg);
  Mat exact(2, 2);
  exact << std::cos(p(0)) * std::cos(p(1)), 0.3 * std::exp(0.3 * p(0)),
      2.0 * p(0) * p(1), 0.0;
  CHECK((d0 - exact).cwiseAbs().maxCoeff() < 1e-9);

  cfg.scheme = FdScheme::central4;
  Mat d4 = partial_derivative(f, p, 0, cfg);
  CHECK((d4 - exact).cwiseAbs().maxCoeff() < 1e-10);

  cfg.scheme = FdScheme::central2;
  Mat dd = second_partial(f, p, 0, 1, cfg);
  Mat exact2(2, 2);
  exact2 << -std::cos(p(0)) * std::sin(p(1)), 0.0, 2.0 * p(0), 0.0;
  CHECK((dd - exact2).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("second differences agree with Richardson extrapolation") {
  auto f = [](double x) { return std::sin(3.0 * x) * std::exp(0.5 * x); };
  MatFn mf = [&](const Vec& p) {
    Mat m(1, 1);
    m(0, 0) = f(p(0));
    return m;
  };
  Vec p(1);
  p << 0.3;
  DiffConfig cfg;
  double lib = second_partial(mf, p, 0, 0, cfg)(0, 0);
  double ref = oracle::richardson_second(f, 0.3, 1e-4);
  CHECK(std::abs(lib - ref) < 5e-6);
}

TEST_CASE("stencils that would cross a domain wall are refused") {
  DomainFn dom = [](const Vec& p) { return p(0) < 1.0; };
  MatFn f = [](const Vec& p) {
    Mat m(1, 1);
    m(0, 0) = p(0) * p(0);
    return m;
  };
  DiffConfig cfg;
  Vec p(1);
  p << 1.0 - 2e-6;  // closer to the wall than the step
  CHECK_THROWS_AS(partial_derivative(f, p, 0, cfg, dom), DomainError);
  p << 1.0 - 1e-4;  // safe margin: full accuracy, no silent clipping
  double d = partial_derivative(f, p, 0, cfg, dom)(0, 0);
  CHECK(std::abs(d - 2.0 * p(0)) < 1e-9);
}

TEST_CASE("Gauss-Legendre integrates polynomials of matching degree exactly") {
  GaussLegendre gl(10);
  std::vector<double> x, w;
  gl.map_to(0.0, 2.0, x, w);
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i)
    s += w[i] * std::pow(x[i], 19);  // degree 2n-1
  double exact = std::pow(2.0, 20) / 20.0;
  CHECK(std::abs(s - exact) / exact < 1e-13);
}

TEST_CASE("sphere rule reproduces areas and simple moments") {
  for (int d : {2, 3, 4}) {
    SphereRule r = SphereRule::product(d, 16);
    CHECK(std::abs(r.total - oracle::sphere_area(d)) /
              oracle::sphere_area(d) <
          1e-12);
    // first moments vanish, second moments are area/d on the diagonal
    Vec m1 = Vec::Zero(d);
    Mat m2 = Mat::Zero(d, d);
    for (size_t i = 0; i < r.dirs.size(); ++i) {
      m1 += r.w[i] * r.dirs[i];
      m2 += r.w[i] * r.dirs[i] * r.dirs[i].transpose();
    }
    CHECK(m1.cwiseAbs().maxCoeff() < 1e-12);
    CHECK((m2 - (r.total / d) * Mat::Identity(d, d)).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("ball quadrature cross-checks against adaptive Simpson") {
  // radially symmetric integrand in R^4: both paths reduce to 1D
  auto f = [](double s, const Vec&) { return std::exp(-s * s); };
  SphereRule sph = SphereRule::product(4, 12);
  double lib = ball_quadrature(f, 1.5, 12, sph,
                               [](double s) { return s * s * s; });
  double ref = oracle::sphere_area(4) *
               oracle::integrate(
                   [](double s) { return s * s * s * std::exp(-s * s); }, 0.0,
                   1.5);
  CHECK(std::abs(lib - ref) / ref < 1e-10);
}

TEST_CASE("cumulative ball quadrature telescopes exactly") {
  auto f = [](double s, const Vec& d) { return 1.0 + s * d(0) * d(0); };
  SphereRule sph = SphereRule::product(4, 10);
  auto jac = [](double s) { return s * s * s; };
  std::vector<double> radii = {0.5, 1.0, 1.5, 2.0};
  std::vector<double> cum = cumulative_ball_quadrature(f, radii, 10, sph, jac);
  for (size_t k = 0; k < radii.size(); ++k) {
    double direct = ball_quadrature(f, radii[k], 40, sph, jac);
    CHECK(std::abs(cum[k] - direct) / direct < 1e-10);
  }
  // starting the accumulation above zero integrates the annulus only
  std::vector<double> ann =
      cumulative_ball_quadrature(f, {1.0, 2.0}, 10, sph, jac, 0.5);
  CHECK(std::abs(ann[1] - (cum[3] - cum[0])) < 1e-10 * cum[3]);
}

TEST_CASE("boundary quadrature differentiates the ball integral") {
  auto f = [](double s, const Vec& d) { return 1.0 + 0.3 * s * d(1); };
  SphereRule sph = SphereRule::product(4, 12);
  auto jac = [](double s) { return s * s * s; };
  double h = 1e-5;
  double dball = (ball_quadrature(f, 1.0 + h, 30, sph, jac) -
                  ball_quadrature(f, 1.0 - h, 30, sph, jac)) /
                 (2.0 * h);
  double bdry = boundary_quadrature(f, 1.0, sph, jac);
  CHECK(std::abs(dball - bdry) < 1e-8);
}

TEST_CASE("seeded rng streams are deterministic and mix salts apart") {
  Rng a(mix_seed(7, 3)), b(mix_seed(7, 3)), c(mix_seed(7, 4));
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 64; ++i) {
    double x = a.uniform(), y = b.uniform(), z = c.uniform();
    all_equal = all_equal && x == y;
    any_diff = any_diff || x != z;
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("parallel_for covers every index exactly once at any width") {
  for (int threads : {1, 3}) {
    std::vector<int> hits(103, 0);
    parallel_for(103, threads, [&](int i) { hits[i] += 1; });
    bool ok = true;
    for (int h : hits) ok = ok && h == 1;
    CHECK(ok);
  }
}

TEST_CASE("domain guard never samples the field outside the chart") {
  DomainFn dom = [](const Vec& p) { return p.norm() < 1.0; };
  MatFn f = [&](const Vec& p) {
    REQUIRE(p.norm() < 1.0);  // the guard must keep stencils inside
    Mat m(1, 1);
    m(0, 0) = p(0);
    return m;
  };
  DiffConfig cfg;
  Vec p(2);
  p << 0.999995, 0.0;  // stencil would poke through the sphere
  CHECK_THROWS_AS(partial_derivative(f, p, 0, cfg, dom), DomainError);
  p << 0.9999, 0.0;
  CHECK_NOTHROW(partial_derivative(f, p, 0, cfg, dom));
}
