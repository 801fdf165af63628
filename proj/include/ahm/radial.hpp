#pragma once

#include "ahm/geometry.hpp"

namespace ahm {

// Radial curvature regimes for rotationally symmetric pole models, keyed by
// the curvature profile each one realizes with equality:
//   nonpositive             K = 0
//   inverse_sq_positive     K =  b^2 / (1+r^2),  b^2 <= 1/4
//   power_decay_positive    K =  B / (1+r^2)^{1+eps},  0 <= B < 2 eps
//   constant_negative       K = -beta^2
//   inverse_sq_negative     K = -a^2 / (1+r^2)
enum class RadialCase {
  nonpositive,
  inverse_sq_positive,
  power_decay_positive,
  constant_negative,
  inverse_sq_negative,
};

inline const char* to_string(RadialCase c) {
  switch (c) {
    case RadialCase::nonpositive: return "flat";
    case RadialCase::inverse_sq_positive: return "inverse_sq_positive";
    case RadialCase::power_decay_positive: return "power_decay_positive";
    case RadialCase::constant_negative: return "constant_negative";
    case RadialCase::inverse_sq_negative: return "inverse_sq_negative";
  }
  return "?";
}

struct RadialParams {
  double b = 0.5;     // inverse_sq_positive, b^2 <= 1/4
  double B = 0.4;     // power_decay_positive, B < 2 eps
  double eps = 0.5;   // power_decay_positive
  double beta = 1.0;  // constant_negative
  double a = 1.0;     // inverse_sq_negative
  double growth_exponent() const { return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * a * a)); }
};

// Warping function of g = dr^2 + psi(r)^2 g_{sphere}, from the Jacobi
// equation psi'' = -K(r) psi, psi(0) = 0, psi'(0) = 1. Closed forms where
// available, otherwise a fixed-step 4th order table with quintic Hermite
// interpolation (endpoint values, slopes, and ODE curvatures).
class WarpingFunction {
 public:
  WarpingFunction() = default;
  WarpingFunction(std::function<double(double)> curvature, double r_max,
                  double step = 1e-3)
      : curvature_(std::move(curvature)), step_(step) {
    int n = static_cast<int>(std::ceil(r_max / step_)) + 1;
    val_.resize(n + 1);
    slope_.resize(n + 1);
    val_[0] = 0.0;
    slope_[0] = 1.0;
    double y0 = 0.0, y1 = 1.0, r = 0.0;
    for (int i = 0; i < n; ++i) {
      auto f = [&](double rr, double a, double b_) {
        return std::pair<double, double>(b_, -curvature_(rr) * a);
      };
      auto [k1a, k1b] = f(r, y0, y1);
      auto [k2a, k2b] = f(r + 0.5 * step_, y0 + 0.5 * step_ * k1a, y1 + 0.5 * step_ * k1b);
      auto [k3a, k3b] = f(r + 0.5 * step_, y0 + 0.5 * step_ * k2a, y1 + 0.5 * step_ * k2b);
      auto [k4a, k4b] = f(r + step_, y0 + step_ * k3a, y1 + step_ * k3b);
      y0 += step_ / 6.0 * (k1a + 2 * k2a + 2 * k3a + k4a);
      y1 += step_ / 6.0 * (k1b + 2 * k2b + 2 * k3b + k4b);
      r += step_;
      val_[i + 1] = y0;
      slope_[i + 1] = y1;
    }
    r_max_ = n * step_;
  }

  bool tabulated() const { return !val_.empty(); }
  double r_max() const { return r_max_; }

  double value(double r) const { return hermite(r, 0); }
  double slope(double r) const { return hermite(r, 1); }

 private:
  // Quintic Hermite on the enclosing segment; derivative data at the two
  // endpoints comes from the table and the ODE itself.
  double hermite(double r, int deriv) const {
    if (r < 0.0 || r > r_max_ + 1e-12)
      throw DomainError("warping function queried outside its table");
    int i = std::min(static_cast<int>(r / step_),
                     static_cast<int>(val_.size()) - 2);
    double t = (r - i * step_) / step_;
    double p0 = val_[i], p1 = val_[i + 1];
    double m0 = slope_[i] * step_, m1 = slope_[i + 1] * step_;
    double c0 = -curvature_(i * step_) * p0 * step_ * step_;
    double c1 = -curvature_((i + 1) * step_) * p1 * step_ * step_;
    // Quintic with value, first, second derivative matched at t = 0, 1.
    double a0 = p0;
    double a1 = m0;
    double a2 = 0.5 * c0;
    double a3 = -10 * p0 + 10 * p1 - 6 * m0 - 4 * m1 - 1.5 * c0 + 0.5 * c1;
    double a4 = 15 * p0 - 15 * p1 + 8 * m0 + 7 * m1 + 1.5 * c0 - c1;
    double a5 = -6 * p0 + 6 * p1 - 3 * m0 - 3 * m1 - 0.5 * c0 + 0.5 * c1;
    if (deriv == 0)
      return a0 + t * (a1 + t * (a2 + t * (a3 + t * (a4 + t * a5))));
    double d = a1 + t * (2 * a2 + t * (3 * a3 + t * (4 * a4 + t * 5 * a5)));
    return d / step_;
  }

  std::function<double(double)> curvature_;
  double step_ = 1e-3;
  double r_max_ = 0.0;
  std::vector<double> val_, slope_;
};

// Rotationally symmetric model with a pole at the origin, realized as a
// normal-coordinate chart g = (psi^2/r^2)(delta - rhat rhat^T) + rhat rhat^T.
class RadialModel {
 public:
  RadialModel(RadialCase tag, int m, RadialParams par, double r_max = 6.0)
      : tag_(tag), m_(m), par_(par), r_max_(r_max) {
    switch (tag_) {
      case RadialCase::nonpositive:
        break;
      case RadialCase::inverse_sq_positive:
        if (par_.b * par_.b > 0.25)
          throw ConfigError("inverse_sq_positive needs b^2 <= 1/4");
        break;
      case RadialCase::power_decay_positive:
        if (par_.B < 0.0 || par_.B >= 2.0 * par_.eps)
          throw ConfigError("power_decay_positive needs 0 <= B < 2 eps");
        break;
      case RadialCase::constant_negative:
        if (par_.beta <= 0.0) throw ConfigError("constant_negative needs beta > 0");
        break;
      case RadialCase::inverse_sq_negative:
        if (par_.a <= 0.0) throw ConfigError("inverse_sq_negative needs a > 0");
        break;
    }
    if (!closed_form()) warp_ = WarpingFunction(curvature_profile(), r_max_);
  }

  RadialCase tag() const { return tag_; }
  int m() const { return m_; }
  int dim() const { return 2 * m_; }
  const RadialParams& params() const { return par_; }
  double r_max() const { return r_max_; }

  std::function<double(double)> curvature_profile() const {
    RadialParams p = par_;
    switch (tag_) {
      case RadialCase::nonpositive:
        return [](double) { return 0.0; };
      case RadialCase::inverse_sq_positive:
        return [p](double r) { return p.b * p.b / (1.0 + r * r); };
      case RadialCase::power_decay_positive:
        return [p](double r) { return p.B * std::pow(1.0 + r * r, -1.0 - p.eps); };
      case RadialCase::constant_negative:
        return [p](double r) { return -p.beta * p.beta; };
      case RadialCase::inverse_sq_negative:
        return [p](double r) { return -p.a * p.a / (1.0 + r * r); };
    }
    throw ConfigError("unknown radial case");
  }

  double psi(double r) const {
    switch (tag_) {
      case RadialCase::nonpositive: return r;
      case RadialCase::constant_negative: return std::sinh(par_.beta * r) / par_.beta;
      default: return warp_.value(r);
    }
  }

  double psi_slope(double r) const {
    switch (tag_) {
      case RadialCase::nonpositive: return 1.0;
      case RadialCase::constant_negative: return std::cosh(par_.beta * r);
      default: return warp_.slope(r);
    }
  }

  // Nonradial Hess r eigenvalue of the model itself.
  double shape_ratio(double r) const {
    if (r <= 0.0) throw DomainError("shape ratio undefined at the pole");
    return psi_slope(r) / psi(r);
  }

  // Case lower bound on the nonradial Hess r eigenvalue.
  double shape_bound(double r) const {
    if (r <= 0.0) throw DomainError("shape bound undefined at the pole");
    switch (tag_) {
      case RadialCase::nonpositive:
        return 1.0 / r;
      case RadialCase::inverse_sq_positive:
        return (1.0 + std::sqrt(1.0 - 4.0 * par_.b * par_.b)) / (2.0 * r);
      case RadialCase::power_decay_positive:
        return (1.0 - par_.B / (2.0 * par_.eps)) / r;
      case RadialCase::constant_negative:
        return par_.beta / std::tanh(par_.beta * r);
      case RadialCase::inverse_sq_negative: {
        double A = par_.growth_exponent();
        return std::max(A / (1.0 + r), 1.0 / r);
      }
    }
    throw ConfigError("unknown radial case");
  }

  // The chart is Riemannian only: rotationally symmetric warped metrics on
  // R^{2m} carry no compatible constant structure away from psi = r, so no
  // acs is exposed and the Hermitian invariant checks do not apply here.
  Chart chart() const {
    Chart c;
    c.name = std::string("radial_") + to_string(tag_);
    c.m = m_;
    double rmax = r_max_;
    c.contains = [rmax](const Vec& p) {
      double r = p.norm();
      return r > 1e-8 && r < rmax - 0.05;
    };
    auto self = *this;
    c.metric = [self](const Vec& p) {
      int n = static_cast<int>(p.size());
      double r = p.norm();
      double ps = self.psi(r);
      double w = ps * ps / (r * r);
      Mat g = w * Mat::Identity(n, n);
      g += (1.0 - w) * (p * p.transpose()) / (r * r);
      return g;
    };
    c.metric_d1 = [self](const Vec& p) {
      int n = static_cast<int>(p.size());
      double r = p.norm();
      double ps = self.psi(r);
      double dps = self.psi_slope(r);
      double w = ps * ps / (r * r);
      double dw = 2.0 * ps * dps / (r * r) - 2.0 * ps * ps / (r * r * r);
      Tensor3 out(n, n, n);
      for (int k = 0; k < n; ++k) {
        double rk = p(k) / r;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            double v = dw * rk * ((i == j ? 1.0 : 0.0) - p(i) * p(j) / (r * r));
            double dproj = (i == k ? p(j) : 0.0) / (r * r) +
                           (j == k ? p(i) : 0.0) / (r * r) -
                           2.0 * p(i) * p(j) * p(k) / (r * r * r * r);
            v += (1.0 - w) * dproj;
            out(k, i, j) = v;
          }
      }
      return out;
    };
    int n = dim();
    c.sample = [rmax, n](Rng& rng) {
      Vec dir(n);
      for (int i = 0; i < n; ++i) dir(i) = rng.normal();
      dir.normalize();
      double r = 0.2 + 0.8 * (rmax * 0.5 - 0.2) * rng.uniform();
      return Vec(r * dir);
    };
    return c;
  }

 private:
  bool closed_form() const {
    return tag_ == RadialCase::nonpositive ||
           tag_ == RadialCase::constant_negative;
  }

  RadialCase tag_;
  int m_;
  RadialParams par_;
  double r_max_;
  WarpingFunction warp_;
};

// Hess r in chart components, Hess_{ij} = d_i d_j r - Gamma^k_{ij} d_k r.
inline Mat distance_hessian(const Chart& c, const Vec& p, const DiffConfig& cfg) {
  int n = c.dim();
  double r = p.norm();
  if (r < 1e-10) throw DomainError("distance hessian undefined at the pole");
  Tensor3 gamma = christoffel(c, p, cfg);
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v = ((i == j ? 1.0 : 0.0) - p(i) * p(j) / (r * r)) / r;
      for (int k = 0; k < n; ++k) v -= gamma(k, i, j) * p(k) / r;
      out(i, j) = v;
    }
  return 0.5 * (out + out.transpose());
}

// Eigenvalues of Hess r relative to g, ascending. Model prediction: a single
// zero on the radial line and psi'/psi with multiplicity 2m-1.
inline Vec distance_hessian_spectrum(const Chart& c, const Vec& p,
                                     const DiffConfig& cfg) {
  Mat h = distance_hessian(c, p, cfg);
  Mat g = c.metric_at(p);
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(h, g);
  if (es.info() != Eigen::Success)
    throw NumericalError("generalized eigensolver failed on Hess r");
  return es.eigenvalues();
}

struct ComparisonRow {
  double r = 0.0;
  double model_value = 0.0;  // psi'/psi
  double bound = 0.0;        // case lower bound
  double margin = 0.0;       // model_value - bound
  double chart_value = 0.0;  // nonradial eigenvalue recovered from the chart
  double chart_gap = 0.0;    // |chart_value - model_value|
};

// Case bound check at a list of radii, with an independent recovery of the
// nonradial eigenvalue from the chart realization at one point per radius.
inline std::vector<ComparisonRow> comparison_check(const RadialModel& model,
                                                   const std::vector<double>& radii,
                                                   const DiffConfig& cfg) {
  Chart c = model.chart();
  int n = model.dim();
  std::vector<ComparisonRow> rows;
  for (double r : radii) {
    ComparisonRow row;
    row.r = r;
    row.model_value = model.shape_ratio(r);
    row.bound = model.shape_bound(r);
    row.margin = row.model_value - row.bound;
    Vec dir = Vec::Zero(n);
    dir(0) = 3.0 / 5.0;
    dir(1) = 4.0 / 5.0;
    Vec spec = distance_hessian_spectrum(c, Vec(r * dir), cfg);
    row.chart_value = spec(n - 1);
    row.chart_gap = std::abs(row.chart_value - row.model_value);
    rows.push_back(row);
  }
  return rows;
}

// Residual of -psi''/psi against the declared curvature profile. psi'' is
// recovered from the warping data by symmetric differencing at table scale,
// keeping the check independent of the interpolant's own second derivative.
inline double riccati_residual(const RadialModel& model, double r) {
  double h = 1e-3;
  if (r < 2 * h || r > model.r_max() - 2 * h)
    throw DomainError("riccati check needs interior radius");
  double p2 = (-model.psi(r + 2 * h) + 16 * model.psi(r + h) - 30 * model.psi(r) +
               16 * model.psi(r - h) - model.psi(r - 2 * h)) /
              (12 * h * h);
  double k = model.curvature_profile()(r);
  return std::abs(-p2 / model.psi(r) - k);
}

// Weights f(r) used against Hess r: the three convex non-decreasing choices.
enum class WeightKind { half_r_squared, cosh_beta_r, power_growth };

struct WeightFunction {
  WeightKind kind = WeightKind::half_r_squared;
  double beta = 1.0;
  double A = 1.6180339887498949;  // (1 + sqrt(1 + 4 a^2)) / 2 at a = 1

  double value(double r) const {
    switch (kind) {
      case WeightKind::half_r_squared: return 0.5 * r * r;
      case WeightKind::cosh_beta_r: return std::cosh(beta * r);
      case WeightKind::power_growth: return std::pow(1.0 + r, A + 1.0) / (A + 1.0);
    }
    return 0.0;
  }
  double slope(double r) const {
    switch (kind) {
      case WeightKind::half_r_squared: return r;
      case WeightKind::cosh_beta_r: return beta * std::sinh(beta * r);
      case WeightKind::power_growth: return std::pow(1.0 + r, A);
    }
    return 0.0;
  }
  double curvature(double r) const {
    switch (kind) {
      case WeightKind::half_r_squared: return 1.0;
      case WeightKind::cosh_beta_r: return beta * beta * std::cosh(beta * r);
      case WeightKind::power_growth: return A * std::pow(1.0 + r, A - 1.0);
    }
    return 0.0;
  }
};

// Sum of the two smallest eigenvalue pairs of Hess f(r): with the spectrum
// sorted ascending, sum_{i=1}^{m-1} (lambda_i + lambda_{m+i}), which equals
// the total minus lambda_m minus lambda_{2m}.
inline double sorted_pair_sum(std::vector<double> spectrum) {
  int n = static_cast<int>(spectrum.size());
  int m = n / 2;
  std::sort(spectrum.begin(), spectrum.end());
  double total = 0.0;
  for (double v : spectrum) total += v;
  return total - spectrum[m - 1] - spectrum[n - 1];
}

// Pair sum of Hess f for a two-value spectrum {f'', f' h x(2m-1)}:
// f'' + (2m-3) f' h when f' h >= f'', otherwise 2(m-1) f' h.
inline double pair_sum_branch(double f2, double f1h, int m) {
  if (f1h >= f2) return f2 + (2 * m - 3) * f1h;
  return 2 * (m - 1) * f1h;
}

struct PairSumResult {
  double sum = 0.0;    // from the model's actual Hess r eigenvalue
  double bound = 0.0;  // from the case's lower bound
  std::vector<double> spectrum;
};

inline PairSumResult eigen_pair_sum(const RadialModel& model,
                                    const WeightFunction& w, double r) {
  int n = model.dim();
  PairSumResult out;
  double h = model.shape_ratio(r);
  out.spectrum.assign(n, w.slope(r) * h);
  out.spectrum[0] = w.curvature(r);
  out.sum = sorted_pair_sum(out.spectrum);
  out.bound = pair_sum_branch(w.curvature(r), w.slope(r) * model.shape_bound(r),
                              model.m());
  return out;
}

}  // namespace ahm
