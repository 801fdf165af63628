#pragma once

#include "ahm/monotonicity.hpp"

#include <json.hpp>

#include <map>

namespace ahm {

// Standard structure on R^{2m} with coordinates interleaved as
// (x_1, y_1, ..., x_m, y_m): multiplication by i on each pair.
inline Mat standard_acs(int m) {
  Mat j = Mat::Zero(2 * m, 2 * m);
  for (int a = 0; a < m; ++a) {
    j(2 * a, 2 * a + 1) = -1.0;
    j(2 * a + 1, 2 * a) = 1.0;
  }
  return j;
}

// Complex hermitian m x m matrix to its real 2m x 2m form in the interleaved
// ordering: entry A + iB becomes the 2x2 block [[A, B], [-B, A]].
inline Mat hermitian_to_real(const Eigen::MatrixXcd& s) {
  int m = static_cast<int>(s.rows());
  Mat g(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double a = s(i, j).real(), b = s(i, j).imag();
      g(2 * i, 2 * j) = a;
      g(2 * i, 2 * j + 1) = b;
      g(2 * i + 1, 2 * j) = -b;
      g(2 * i + 1, 2 * j + 1) = a;
    }
  return g;
}

inline Eigen::Vector2cd complex_pair(const Vec& p) {
  return Eigen::Vector2cd(std::complex<double>(p(0), p(1)),
                          std::complex<double>(p(2), p(3)));
}

// Ball model of the complex hyperbolic plane: holomorphic sectional
// curvature -4, radial sectional curvatures in [-4, -1], geodesic radius
// arctanh |z| from the origin.
inline Mat ball_metric(const Vec& p) {
  Eigen::Vector2cd z = complex_pair(p);
  double d = 1.0 - z.squaredNorm();
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Identity() / d +
                       (z.conjugate() * z.transpose()) / (d * d);
  return hermitian_to_real(s);
}

// d_k of the ball metric. d d/d p_k = -2 p_k, and the conversion to real
// form is linear, so the complex product rule carries over directly.
inline Tensor3 ball_metric_d1(const Vec& p) {
  Eigen::Vector2cd z = complex_pair(p);
  double d = 1.0 - z.squaredNorm();
  Eigen::Matrix2cd zz = z.conjugate() * z.transpose();
  Tensor3 out(4, 4, 4);
  for (int k = 0; k < 4; ++k) {
    Eigen::Vector2cd dz = Eigen::Vector2cd::Zero();
    dz(k / 2) = k % 2 == 0 ? std::complex<double>(1.0, 0.0)
                           : std::complex<double>(0.0, 1.0);
    Eigen::Matrix2cd ds =
        (2.0 * p(k) / (d * d)) * Eigen::Matrix2cd::Identity() +
        (dz.conjugate() * z.transpose() + z.conjugate() * dz.transpose()) /
            (d * d) +
        (4.0 * p(k) / (d * d * d)) * zz;
    Mat dm = hermitian_to_real(ds);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out(k, i, j) = dm(i, j);
  }
  return out;
}

// Pointwise rotation field feeding the perturbed structure.
inline Mat perturbation_skew(const Vec& p) {
  Mat s = Mat::Zero(4, 4);
  s(0, 1) = std::sin(p(0) + 0.3 * p(1));
  s(0, 2) = std::cos(p(1) - p(2));
  s(0, 3) = std::sin(p(2) + 0.5 * p(3));
  s(1, 2) = std::cos(p(3) + 0.2 * p(0));
  s(1, 3) = std::sin(0.7 * p(0) - p(3));
  s(2, 3) = std::cos(p(0) + p(2));
  return 0.15 * (s - s.transpose());
}

// Orthogonal polar factor of a skew perturbation of the standard structure.
// Skew plus orthogonal forces the square to be -I, so the result is a
// genuine structure compatible with the flat metric, with nonzero Nijenhuis
// tensor wherever the perturbation varies.
inline Mat perturbed_acs_field(const Vec& p) {
  Mat k = standard_acs(2) + perturbation_skew(p);
  k = 0.5 * (k - k.transpose());
  Eigen::JacobiSVD<Mat> svd(k, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

// Radial conformal profile: constant 1 inside, the decaying power branch
// (1 + (3C/2)(r-1))^{-1/3} outside, joined by a quintic C^2 blend on
// [0.9, 1.1] so the chart stays twice differentiable across the seam.
class ConformalProfile {
 public:
  explicit ConformalProfile(double c = 1.0) : c_(c) {
    double h = hi_ - lo_;
    double p1 = outer(hi_), m1 = outer_slope(hi_) * h, q1 = outer_curve(hi_) * h * h;
    // Left state is the constant: value 1, flat to second order.
    a0_ = 1.0;
    a1_ = 0.0;
    a2_ = 0.0;
    a3_ = 10 * (p1 - 1.0) - 4 * m1 + 0.5 * q1;
    a4_ = -15 * (p1 - 1.0) + 7 * m1 - q1;
    a5_ = 6 * (p1 - 1.0) - 3 * m1 + 0.5 * q1;
  }

  double value(double r) const {
    if (r <= lo_) return 1.0;
    if (r >= hi_) return outer(r);
    double t = (r - lo_) / (hi_ - lo_);
    return a0_ + t * (a1_ + t * (a2_ + t * (a3_ + t * (a4_ + t * a5_))));
  }

  double slope(double r) const {
    if (r <= lo_) return 0.0;
    if (r >= hi_) return outer_slope(r);
    double h = hi_ - lo_;
    double t = (r - lo_) / h;
    return (a1_ + t * (2 * a2_ + t * (3 * a3_ + t * (4 * a4_ + t * 5 * a5_)))) / h;
  }

  double blend_lo() const { return lo_; }
  double blend_hi() const { return hi_; }

 private:
  double outer(double r) const { return std::pow(base(r), -1.0 / 3.0); }
  double outer_slope(double r) const {
    return -0.5 * c_ * std::pow(base(r), -4.0 / 3.0);
  }
  double outer_curve(double r) const {
    return c_ * c_ * std::pow(base(r), -7.0 / 3.0);
  }
  double base(double r) const { return 1.0 + 1.5 * c_ * (r - 1.0); }

  double c_;
  double lo_ = 0.9, hi_ = 1.1;
  double a0_, a1_, a2_, a3_, a4_, a5_;
};

// Shear diffeomorphism of R^4 with an explicit inverse; pushing the flat
// structure forward through it yields a curved-looking chart that is
// secretly flat Kaehler.
inline Vec shear_forward(const Vec& x) {
  Vec y = x;
  y(2) += 0.3 * std::sin(x(0)) + 0.2 * x(1) * x(1);
  y(3) += 0.25 * x(0) * x(1);
  return y;
}

inline Vec shear_inverse(const Vec& y) {
  Vec x = y;
  x(2) -= 0.3 * std::sin(y(0)) + 0.2 * y(1) * y(1);
  x(3) -= 0.25 * y(0) * y(1);
  return x;
}

inline Mat shear_jacobian(const Vec& x) {
  Mat b = Mat::Identity(4, 4);
  b(2, 0) = 0.3 * std::cos(x(0));
  b(2, 1) = 0.4 * x(1);
  b(3, 0) = 0.25 * x(1);
  b(3, 1) = 0.25 * x(0);
  return b;
}

inline Tensor3 shear_second(const Vec& x) {
  Tensor3 h(4, 4, 4);
  h(2, 0, 0) = -0.3 * std::sin(x(0));
  h(2, 1, 1) = 0.4;
  h(3, 0, 1) = 0.25;
  h(3, 1, 0) = 0.25;
  return h;
}

// A chart plus everything the suites need to know about it.
struct ModelBundle {
  Chart chart;
  bool hermitian = true;  // false for the Riemannian-only radial models
  std::vector<std::string> expected_classes;  // flags expected true
  std::optional<RadialModel> radial;
  std::optional<PoleModel> pole;
};

inline std::function<Vec(Rng&)> box_sampler(int n, double half_width) {
  return [n, half_width](Rng& rng) { return rng.vector(n, -half_width, half_width); };
}

inline std::function<Vec(Rng&)> shell_sampler(int n, double r_lo, double r_hi) {
  return [n, r_lo, r_hi](Rng& rng) {
    Vec dir = rng.normal_vec(n);
    dir.normalize();
    return Vec((r_lo + (r_hi - r_lo) * rng.uniform()) * dir);
  };
}

inline ModelBundle make_flat_model() {
  ModelBundle b;
  Chart& c = b.chart;
  c.name = "flat_complex";
  c.m = 2;
  c.contains = [](const Vec&) { return true; };
  c.metric = [](const Vec& p) { return Mat::Identity(p.size(), p.size()); };
  Mat j0 = standard_acs(2);
  c.acs = [j0](const Vec&) { return j0; };
  c.metric_d1 = [](const Vec& p) {
    int n = static_cast<int>(p.size());
    return Tensor3(n, n, n);
  };
  c.acs_d1 = [](const Vec& p) {
    int n = static_cast<int>(p.size());
    return Tensor3(n, n, n);
  };
  c.sample = box_sampler(4, 0.8);
  b.expected_classes = {"kaehler", "almost_kaehler", "nearly_kaehler",
                        "quasi_kaehler", "semi_kaehler", "hermitian"};
  PoleModel pm;
  pm.name = "flat_complex";
  pm.chart = c;
  pm.exponential = [](double s, const Vec& dir) { return Vec(s * dir); };
  pm.density = [](double s) { return s * s * s; };
  pm.radius = [](const Vec& p) { return p.norm(); };
  pm.r_limit = 50.0;
  b.pole = pm;
  return b;
}

inline ModelBundle make_ball_model() {
  ModelBundle b;
  Chart& c = b.chart;
  c.name = "complex_hyperbolic";
  c.m = 2;
  c.contains = [](const Vec& p) { return p.norm() < 0.9975; };
  c.metric = ball_metric;
  c.metric_d1 = ball_metric_d1;
  Mat j0 = standard_acs(2);
  c.acs = [j0](const Vec&) { return j0; };
  c.acs_d1 = [](const Vec& p) {
    int n = static_cast<int>(p.size());
    return Tensor3(n, n, n);
  };
  c.sample = shell_sampler(4, 0.05, 0.7);
  b.expected_classes = {"kaehler", "almost_kaehler", "nearly_kaehler",
                        "quasi_kaehler", "semi_kaehler", "hermitian"};
  PoleModel pm;
  pm.name = "complex_hyperbolic";
  pm.chart = c;
  pm.exponential = [](double s, const Vec& dir) { return Vec(std::tanh(s) * dir); };
  pm.density = [](double s) {
    double sh = std::sinh(s);
    return sh * sh * sh * std::cosh(s);
  };
  pm.radius = [](const Vec& p) {
    double t = p.norm();
    return 0.5 * std::log((1.0 + t) / (1.0 - t));
  };
  pm.r_limit = 2.9;
  b.pole = pm;
  return b;
}

inline ModelBundle make_hopf_model() {
  ModelBundle b;
  Chart& c = b.chart;
  c.name = "hopf_type";
  c.m = 2;
  c.contains = [](const Vec& p) {
    double r = p.norm();
    return r > 0.15 && r < 3.0;
  };
  c.metric = [](const Vec& p) {
    return Mat(Mat::Identity(4, 4) / p.squaredNorm());
  };
  c.metric_d1 = [](const Vec& p) {
    double r2 = p.squaredNorm();
    Tensor3 t(4, 4, 4);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i) t(k, i, i) = -2.0 * p(k) / (r2 * r2);
    return t;
  };
  Mat j0 = standard_acs(2);
  c.acs = [j0](const Vec&) { return j0; };
  c.acs_d1 = [](const Vec& p) {
    int n = static_cast<int>(p.size());
    return Tensor3(n, n, n);
  };
  c.sample = shell_sampler(4, 0.3, 1.5);
  b.expected_classes = {"hermitian"};
  return b;
}

inline ModelBundle make_perturbed_model() {
  ModelBundle b;
  Chart& c = b.chart;
  c.name = "perturbed_acs";
  c.m = 2;
  c.contains = [](const Vec&) { return true; };
  c.metric = [](const Vec& p) { return Mat::Identity(p.size(), p.size()); };
  c.metric_d1 = [](const Vec& p) {
    int n = static_cast<int>(p.size());
    return Tensor3(n, n, n);
  };
  c.acs = perturbed_acs_field;
  c.sample = box_sampler(4, 1.0);
  b.expected_classes = {};
  return b;
}

inline ModelBundle make_perturbed_conformal_model() {
  ModelBundle b;
  Chart& c = b.chart;
  c.name = "perturbed_conformal";
  c.m = 2;
  c.contains = [](const Vec&) { return true; };
  auto factor = [](const Vec& p) {
    return std::exp(0.4 * std::sin(p(0)) * std::cos(p(1)) +
                    0.3 * std::sin(p(2) + p(3)));
  };
  c.metric = [factor](const Vec& p) {
    return Mat(factor(p) * Mat::Identity(4, 4));
  };
  c.metric_d1 = [factor](const Vec& p) {
    double f = factor(p);
    Vec df(4);
    df(0) = 0.4 * std::cos(p(0)) * std::cos(p(1)) * f;
    df(1) = -0.4 * std::sin(p(0)) * std::sin(p(1)) * f;
    df(2) = 0.3 * std::cos(p(2) + p(3)) * f;
    df(3) = df(2);
    Tensor3 t(4, 4, 4);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i) t(k, i, i) = df(k);
    return t;
  };
  c.acs = perturbed_acs_field;
  c.sample = box_sampler(4, 1.0);
  b.expected_classes = {};
  return b;
}

inline ModelBundle make_conformal_model() {
  ModelBundle b;
  Chart& c = b.chart;
  c.name = "conformal_deformation";
  c.m = 2;
  ConformalProfile prof;
  c.contains = [](const Vec& p) { return p.norm() < 2.8; };
  c.metric = [prof](const Vec& p) {
    double f = prof.value(p.norm());
    return Mat(f * f * Mat::Identity(4, 4));
  };
  c.metric_d1 = [prof](const Vec& p) {
    Tensor3 t(4, 4, 4);
    double r = p.norm();
    if (r <= prof.blend_lo()) return t;
    double f = prof.value(r), df = prof.slope(r);
    for (int k = 0; k < 4; ++k) {
      double v = 2.0 * f * df * p(k) / r;
      for (int i = 0; i < 4; ++i) t(k, i, i) = v;
    }
    return t;
  };
  Mat j0 = standard_acs(2);
  c.acs = [j0](const Vec&) { return j0; };
  c.acs_d1 = [](const Vec& p) {
    int n = static_cast<int>(p.size());
    return Tensor3(n, n, n);
  };
  c.sample = shell_sampler(4, 0.3, 2.2);
  b.expected_classes = {"hermitian"};
  return b;
}

inline ModelBundle make_sheared_model() {
  ModelBundle b;
  Chart& c = b.chart;
  c.name = "sheared_flat";
  c.m = 2;
  c.contains = [](const Vec&) { return true; };
  Mat j0 = standard_acs(2);
  c.metric = [](const Vec& y) {
    Mat binv = shear_jacobian(shear_inverse(y)).inverse();
    return Mat(binv.transpose() * binv);
  };
  c.acs = [j0](const Vec& y) {
    Mat bjac = shear_jacobian(shear_inverse(y));
    return Mat(bjac * j0 * bjac.inverse());
  };
  c.sample = box_sampler(4, 0.8);
  b.expected_classes = {"kaehler", "almost_kaehler", "nearly_kaehler",
                        "quasi_kaehler", "semi_kaehler", "hermitian"};
  return b;
}

inline ModelBundle make_radial_model_bundle(RadialCase tag) {
  RadialParams par;
  RadialModel model(tag, 2, par);
  ModelBundle b;
  b.chart = model.chart();
  b.hermitian = false;
  b.radial = model;
  PoleModel pm;
  pm.name = b.chart.name;
  pm.chart = b.chart;
  pm.exponential = [](double s, const Vec& dir) { return Vec(s * dir); };
  RadialModel copy = model;
  pm.density = [copy](double s) {
    double ps = copy.psi(s);
    return ps * ps * ps;
  };
  pm.radius = [](const Vec& p) { return p.norm(); };
  pm.r_limit = model.r_max() - 0.1;
  b.pole = pm;
  return b;
}

inline const std::vector<std::string>& hermitian_zoo_names() {
  static const std::vector<std::string> names = {
      "flat_complex",  "complex_hyperbolic",   "hopf_type",
      "perturbed_acs", "perturbed_conformal",  "conformal_deformation",
      "sheared_flat"};
  return names;
}

inline const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names = {
      "flat_complex",       "complex_hyperbolic", "hopf_type",
      "perturbed_acs",      "perturbed_conformal", "conformal_deformation",
      "sheared_flat",       "radial_flat",         "radial_inverse_sq_positive",
      "radial_power_decay_positive", "radial_constant_negative",
      "radial_inverse_sq_negative"};
  return names;
}

inline ModelBundle build_model(const std::string& name) {
  if (name == "flat_complex") return make_flat_model();
  if (name == "complex_hyperbolic") return make_ball_model();
  if (name == "hopf_type") return make_hopf_model();
  if (name == "perturbed_acs") return make_perturbed_model();
  if (name == "perturbed_conformal") return make_perturbed_conformal_model();
  if (name == "conformal_deformation") return make_conformal_model();
  if (name == "sheared_flat") return make_sheared_model();
  if (name == "radial_flat")
    return make_radial_model_bundle(RadialCase::nonpositive);
  if (name == "radial_inverse_sq_positive")
    return make_radial_model_bundle(RadialCase::inverse_sq_positive);
  if (name == "radial_power_decay_positive")
    return make_radial_model_bundle(RadialCase::power_decay_positive);
  if (name == "radial_constant_negative")
    return make_radial_model_bundle(RadialCase::constant_negative);
  if (name == "radial_inverse_sq_negative")
    return make_radial_model_bundle(RadialCase::inverse_sq_negative);
  throw ConfigError("unknown model '" + name + "'");
}

// Maps. Each bundle names its endpoint models; samplers may restrict the
// domain chart's own region when the image must stay inside the target.
struct MapBundle {
  SmoothMap map;
  std::string domain_model;
  std::string target_model;
  std::function<Vec(Rng&)> sample;  // defaults to the domain chart's sampler
};

inline SmoothMap linear_map(const std::string& name, const Mat& a,
                            bool holo, bool anti) {
  SmoothMap u;
  u.name = name;
  u.value = [a](const Vec& p) { return Vec(a * p); };
  u.jacobian_exact = [a](const Vec&) { return a; };
  u.hessian_exact = [a](const Vec&) {
    int n = static_cast<int>(a.rows());
    return Tensor3(n, static_cast<int>(a.cols()), static_cast<int>(a.cols()));
  };
  u.declared_holomorphic = holo;
  u.declared_antiholomorphic = anti;
  return u;
}

inline Mat conjugation_matrix() {
  Mat c = Mat::Identity(4, 4);
  c(1, 1) = -1.0;
  c(3, 3) = -1.0;
  return c;
}

// (z1, z2) -> (z1^2, z1 z2) in real components.
inline SmoothMap square_complex_map() {
  SmoothMap u;
  u.name = "square_complex";
  u.value = [](const Vec& p) {
    Vec q(4);
    q(0) = p(0) * p(0) - p(1) * p(1);
    q(1) = 2.0 * p(0) * p(1);
    q(2) = p(0) * p(2) - p(1) * p(3);
    q(3) = p(0) * p(3) + p(1) * p(2);
    return q;
  };
  u.jacobian_exact = [](const Vec& p) {
    Mat d = Mat::Zero(4, 4);
    d(0, 0) = 2 * p(0);
    d(0, 1) = -2 * p(1);
    d(1, 0) = 2 * p(1);
    d(1, 1) = 2 * p(0);
    d(2, 0) = p(2);
    d(2, 1) = -p(3);
    d(2, 2) = p(0);
    d(2, 3) = -p(1);
    d(3, 0) = p(3);
    d(3, 1) = p(2);
    d(3, 2) = p(1);
    d(3, 3) = p(0);
    return d;
  };
  u.hessian_exact = [](const Vec&) {
    Tensor3 h(4, 4, 4);
    h(0, 0, 0) = 2;
    h(0, 1, 1) = -2;
    h(1, 0, 1) = 2;
    h(1, 1, 0) = 2;
    h(2, 0, 2) = 1;
    h(2, 2, 0) = 1;
    h(2, 1, 3) = -1;
    h(2, 3, 1) = -1;
    h(3, 0, 3) = 1;
    h(3, 3, 0) = 1;
    h(3, 1, 2) = 1;
    h(3, 2, 1) = 1;
    return h;
  };
  u.declared_holomorphic = true;
  return u;
}

// Holomorphic polynomial with image inside the unit ball on the sample box:
// (0.35 z1 + 0.15 z2^2 - 0.1, 0.3 z2 + 0.1 z1 z2 + 0.05).
inline SmoothMap ball_polynomial_map() {
  SmoothMap u;
  u.name = "ball_polynomial";
  u.value = [](const Vec& p) {
    std::complex<double> z1(p(0), p(1)), z2(p(2), p(3));
    std::complex<double> w1 = 0.35 * z1 + 0.15 * z2 * z2 - 0.1;
    std::complex<double> w2 = 0.3 * z2 + 0.1 * z1 * z2 + 0.05;
    Vec q(4);
    q << w1.real(), w1.imag(), w2.real(), w2.imag();
    return q;
  };
  u.jacobian_exact = [](const Vec& p) {
    // dw1/dz1 = 0.35, dw1/dz2 = 0.3 z2, dw2/dz1 = 0.1 z2, dw2/dz2 = 0.3 + 0.1 z1
    std::complex<double> z1(p(0), p(1)), z2(p(2), p(3));
    auto block = [](std::complex<double> w) {
      Eigen::Matrix2d b;
      b << w.real(), -w.imag(), w.imag(), w.real();
      return b;
    };
    Mat d(4, 4);
    d.block<2, 2>(0, 0) = block(0.35);
    d.block<2, 2>(0, 2) = block(0.3 * z2);
    d.block<2, 2>(2, 0) = block(0.1 * z2);
    d.block<2, 2>(2, 2) = block(0.3 + 0.1 * z1);
    return d;
  };
  u.hessian_exact = [](const Vec&) {
    Tensor3 h(4, 4, 4);
    h(0, 2, 2) = 0.3;
    h(0, 3, 3) = -0.3;
    h(1, 2, 3) = 0.3;
    h(1, 3, 2) = 0.3;
    h(2, 0, 2) = 0.1;
    h(2, 2, 0) = 0.1;
    h(2, 1, 3) = -0.1;
    h(2, 3, 1) = -0.1;
    h(3, 0, 3) = 0.1;
    h(3, 3, 0) = 0.1;
    h(3, 1, 2) = 0.1;
    h(3, 2, 1) = 0.1;
    return h;
  };
  u.declared_holomorphic = true;
  return u;
}

// (z1, z2) -> (conj(z1) + z1^2, z2): neither holomorphic nor
// anti-holomorphic; the defect suite needs a genuine failure case.
inline SmoothMap mixed_map() {
  SmoothMap u;
  u.name = "mixed_nonholomorphic";
  u.value = [](const Vec& p) {
    Vec q(4);
    q(0) = p(0) + p(0) * p(0) - p(1) * p(1);
    q(1) = -p(1) + 2.0 * p(0) * p(1);
    q(2) = p(2);
    q(3) = p(3);
    return q;
  };
  u.jacobian_exact = [](const Vec& p) {
    Mat d = Mat::Identity(4, 4);
    d(0, 0) = 1.0 + 2.0 * p(0);
    d(0, 1) = -2.0 * p(1);
    d(1, 0) = 2.0 * p(1);
    d(1, 1) = -1.0 + 2.0 * p(0);
    return d;
  };
  u.hessian_exact = [](const Vec&) {
    Tensor3 h(4, 4, 4);
    h(0, 0, 0) = 2;
    h(0, 1, 1) = -2;
    h(1, 0, 1) = 2;
    h(1, 1, 0) = 2;
    return h;
  };
  return u;
}

inline SmoothMap shear_map() {
  SmoothMap u;
  u.name = "shear_pushforward";
  u.value = shear_forward;
  u.jacobian_exact = shear_jacobian;
  u.hessian_exact = shear_second;
  u.declared_holomorphic = true;
  return u;
}

inline const std::vector<std::string>& map_names() {
  static const std::vector<std::string> names = {
      "identity_flat",    "conjugation_flat",   "square_complex",
      "ball_polynomial",  "identity_perturbed", "conjugation_ball_flat",
      "conjugation_hopf_flat", "conjugation_conformal_flat",
      "shear_pushforward", "mixed_nonholomorphic"};
  return names;
}

inline MapBundle build_map(const std::string& name) {
  MapBundle b;
  if (name == "identity_flat") {
    b.map = linear_map(name, Mat::Identity(4, 4), true, false);
    b.domain_model = "flat_complex";
    b.target_model = "flat_complex";
    return b;
  }
  if (name == "conjugation_flat") {
    b.map = linear_map(name, conjugation_matrix(), false, true);
    b.domain_model = "flat_complex";
    b.target_model = "flat_complex";
    return b;
  }
  if (name == "square_complex") {
    b.map = square_complex_map();
    b.domain_model = "flat_complex";
    b.target_model = "flat_complex";
    return b;
  }
  if (name == "ball_polynomial") {
    b.map = ball_polynomial_map();
    b.domain_model = "flat_complex";
    b.target_model = "complex_hyperbolic";
    return b;
  }
  if (name == "identity_perturbed") {
    b.map = linear_map(name, Mat::Identity(4, 4), true, false);
    b.domain_model = "perturbed_acs";
    b.target_model = "perturbed_conformal";
    return b;
  }
  if (name == "conjugation_ball_flat") {
    b.map = linear_map(name, conjugation_matrix(), false, true);
    b.domain_model = "complex_hyperbolic";
    b.target_model = "flat_complex";
    return b;
  }
  if (name == "conjugation_hopf_flat") {
    b.map = linear_map(name, conjugation_matrix(), false, true);
    b.domain_model = "hopf_type";
    b.target_model = "flat_complex";
    return b;
  }
  if (name == "conjugation_conformal_flat") {
    b.map = linear_map(name, conjugation_matrix(), false, true);
    b.domain_model = "conformal_deformation";
    b.target_model = "flat_complex";
    return b;
  }
  if (name == "shear_pushforward") {
    b.map = shear_map();
    b.domain_model = "flat_complex";
    b.target_model = "sheared_flat";
    return b;
  }
  if (name == "mixed_nonholomorphic") {
    b.map = mixed_map();
    b.domain_model = "flat_complex";
    b.target_model = "complex_hyperbolic";
    b.sample = box_sampler(4, 0.35);
    return b;
  }
  throw ConfigError("unknown map '" + name + "'");
}

// Random polynomial map with exact derivatives: affine plus quadratic with
// coefficients scaled to keep the image inside the unit ball on any sample
// region of radius <= 1.6, so curved targets are always admissible.
inline SmoothMap random_polynomial_map(Rng& rng, int dom_dim = 4,
                                       int tar_dim = 4, double scale = 1.0) {
  Mat lin(tar_dim, dom_dim);
  Vec base(tar_dim);
  std::vector<Mat> quad(tar_dim, Mat::Zero(dom_dim, dom_dim));
  for (int c = 0; c < tar_dim; ++c) {
    base(c) = scale * rng.uniform(-0.08, 0.08);
    for (int i = 0; i < dom_dim; ++i)
      lin(c, i) = scale * rng.uniform(-0.05, 0.05);
    for (int i = 0; i < dom_dim; ++i)
      for (int j = i; j < dom_dim; ++j) {
        double v = scale * rng.uniform(-0.02, 0.02);
        quad[c](i, j) += 0.5 * v;
        quad[c](j, i) += 0.5 * v;
      }
  }
  SmoothMap u;
  u.name = "random_polynomial";
  u.value = [base, lin, quad, tar_dim](const Vec& p) {
    Vec q = base + lin * p;
    for (int c = 0; c < tar_dim; ++c) q(c) += p.dot(quad[c] * p);
    return q;
  };
  u.jacobian_exact = [lin, quad, tar_dim](const Vec& p) {
    Mat d = lin;
    for (int c = 0; c < tar_dim; ++c) d.row(c) += 2.0 * (quad[c] * p).transpose();
    return d;
  };
  u.hessian_exact = [quad, tar_dim, dom_dim](const Vec&) {
    Tensor3 h(tar_dim, dom_dim, dom_dim);
    for (int c = 0; c < tar_dim; ++c)
      for (int i = 0; i < dom_dim; ++i)
        for (int j = 0; j < dom_dim; ++j) h(c, i, j) = 2.0 * quad[c](i, j);
    return h;
  };
  return u;
}

// Config-driven construction: kind plus parameters. Built-in names remain
// the canonical instances; this entry point exists for CLI experiments.
inline ModelBundle model_from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "warped_radial") {
    std::string tag = j.at("case").get<std::string>();
    RadialParams par;
    if (j.contains("b")) par.b = j["b"].get<double>();
    if (j.contains("B")) par.B = j["B"].get<double>();
    if (j.contains("eps")) par.eps = j["eps"].get<double>();
    if (j.contains("beta")) par.beta = j["beta"].get<double>();
    if (j.contains("a")) par.a = j["a"].get<double>();
    RadialCase rc;
    if (tag == "flat") rc = RadialCase::nonpositive;
    else if (tag == "inverse_sq_positive") rc = RadialCase::inverse_sq_positive;
    else if (tag == "power_decay_positive") rc = RadialCase::power_decay_positive;
    else if (tag == "constant_negative") rc = RadialCase::constant_negative;
    else if (tag == "inverse_sq_negative") rc = RadialCase::inverse_sq_negative;
    else throw ConfigError("unknown radial case '" + tag + "'");
    int m = j.value("m", 2);
    double r_max = j.value("r_max", 6.0);
    RadialModel model(rc, m, par, r_max);
    ModelBundle b;
    b.chart = model.chart();
    b.hermitian = false;
    b.radial = model;
    return b;
  }
  return build_model(j.at("kind").get<std::string>());
}

inline MapBundle map_from_json(const nlohmann::json& j) {
  if (j.contains("name")) return build_map(j.at("name").get<std::string>());
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "random_polynomial") {
    Rng rng(j.value("seed", std::uint64_t{1}));
    MapBundle b;
    b.domain_model = j.value("domain", std::string("flat_complex"));
    b.target_model = j.value("target", std::string("flat_complex"));
    ModelBundle dom = build_model(b.domain_model);
    ModelBundle tar = build_model(b.target_model);
    b.map = random_polynomial_map(rng, dom.chart.dim(), tar.chart.dim(),
                                  j.value("scale", 1.0));
    return b;
  }
  throw ConfigError("unknown map kind '" + kind + "'");
}

}  // namespace ahm
