#pragma once

#include "ahm/core.hpp"

#include <cmath>

namespace ahm {

// Gauss-Legendre nodes and weights on [-1,1], Newton iteration on the
// Legendre recurrence. Nodes are symmetric; weights sum to 2.
struct GaussLegendre {
  std::vector<double> x, w;

  explicit GaussLegendre(int n) {
    if (n < 1) throw ConfigError("quadrature needs at least one node");
    x.resize(n);
    w.resize(n);
    const double pi = 3.14159265358979323846;
    int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
      double t = std::cos(pi * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (t * p0 - p1) / (t * t - 1.0);
        double dt = p0 / pp;
        t -= dt;
        if (std::abs(dt) < 1e-15) break;
      }
      x[i] = -t;
      x[n - 1 - i] = t;
      w[i] = 2.0 / ((1.0 - t * t) * pp * pp);
      w[n - 1 - i] = w[i];
    }
  }

  // affine image on [a,b]
  void map_to(double a, double b, std::vector<double>& xs,
              std::vector<double>& ws) const {
    xs.resize(x.size());
    ws.resize(w.size());
    for (size_t i = 0; i < x.size(); ++i) {
      xs[i] = 0.5 * (b - a) * x[i] + 0.5 * (a + b);
      ws[i] = 0.5 * (b - a) * w[i];
    }
  }
};

// Product rule on the unit sphere S^{d-1} in hyperspherical angles: Gauss-
// Legendre on each polar angle with its sin-power weight folded in, uniform
// nodes on the periodic azimuth. Weights sum to the sphere area.
struct SphereRule {
  std::vector<Vec> dirs;
  std::vector<double> w;
  double total = 0.0;

  static double area(int d) {
    // surface area of S^{d-1}
    return 2.0 * std::pow(3.14159265358979323846, d / 2.0) / std::tgamma(d / 2.0);
  }

  static SphereRule product(int d, int nodes_per_angle) {
    if (d < 2) throw ConfigError("sphere rule needs ambient dimension >= 2");
    const double pi = 3.14159265358979323846;
    SphereRule r;
    int n = nodes_per_angle;
    if (d == 2) {
      for (int k = 0; k < n; ++k) {
        double th = 2.0 * pi * k / n;
        Vec v(2);
        v << std::cos(th), std::sin(th);
        r.dirs.push_back(v);
        r.w.push_back(2.0 * pi / n);
      }
    } else {
      GaussLegendre gl(n);
      std::vector<double> th, wth;
      gl.map_to(0.0, pi, th, wth);
      // polar angles th_1..th_{d-2} with weights sin^{d-1-k}, azimuth uniform
      std::vector<int> idx(d - 2, 0);
      std::vector<double> az(n), waz(n, 2.0 * pi / n);
      for (int k = 0; k < n; ++k) az[k] = 2.0 * pi * k / n;
      while (true) {
        double wpolar = 1.0;
        for (int k = 0; k < d - 2; ++k) {
          int p = d - 2 - k;  // sin power for angle k
          wpolar *= wth[idx[k]] * std::pow(std::sin(th[idx[k]]), p);
        }
        for (int k = 0; k < n; ++k) {
          Vec v(d);
          double s = 1.0;
          for (int a = 0; a < d - 2; ++a) {
            v(a) = s * std::cos(th[idx[a]]);
            s *= std::sin(th[idx[a]]);
          }
          v(d - 2) = s * std::cos(az[k]);
          v(d - 1) = s * std::sin(az[k]);
          r.dirs.push_back(v);
          r.w.push_back(wpolar * waz[k]);
        }
        int pos = d - 3;
        while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
        if (pos < 0) break;
      }
    }
    for (double ww : r.w) r.total += ww;
    return r;
  }
};

inline double sphere_integral(const SphereRule& rule,
                              const std::function<double(const Vec&)>& f) {
  double s = 0.0;
  for (size_t i = 0; i < rule.dirs.size(); ++i) s += rule.w[i] * f(rule.dirs[i]);
  return s;
}

// Integral over a geodesic ball of radius R in polar form:
//   int_0^R radial_jacobian(s) * int_{S^{d-1}} f(s, theta) dtheta ds
// f receives the geodesic radius and the unit direction.
inline double ball_quadrature(const std::function<double(double, const Vec&)>& f,
                              double R, int radial_nodes, const SphereRule& sph,
                              const std::function<double(double)>& radial_jacobian) {
  if (!(R > 0)) throw ConfigError("ball radius must be positive");
  GaussLegendre gl(radial_nodes);
  std::vector<double> s, ws;
  gl.map_to(0.0, R, s, ws);
  double tot = 0.0;
  for (size_t i = 0; i < s.size(); ++i) {
    double shell = 0.0;
    for (size_t k = 0; k < sph.dirs.size(); ++k)
      shell += sph.w[k] * f(s[i], sph.dirs[k]);
    tot += ws[i] * radial_jacobian(s[i]) * shell;
  }
  return tot;
}

// Boundary integral over the geodesic sphere of radius R:
//   radial_jacobian(R) * int_{S^{d-1}} f(R, theta) dtheta
inline double boundary_quadrature(
    const std::function<double(double, const Vec&)>& f, double R,
    const SphereRule& sph, const std::function<double(double)>& radial_jacobian) {
  double shell = 0.0;
  for (size_t k = 0; k < sph.dirs.size(); ++k)
    shell += sph.w[k] * f(R, sph.dirs[k]);
  return radial_jacobian(R) * shell;
}

// Cumulative ball integrals over an ascending radius grid. Each annulus
// [r_{k-1}, r_k] is integrated once with its own Gauss-Legendre segment and
// accumulated in radius order, so results are deterministic and shells are
// never recomputed.
inline std::vector<double> cumulative_ball_quadrature(
    const std::function<double(double, const Vec&)>& f,
    const std::vector<double>& radii, int nodes_per_segment,
    const SphereRule& sph, const std::function<double(double)>& radial_jacobian,
    double start = 0.0) {
  std::vector<double> out;
  out.reserve(radii.size());
  double acc = 0.0;
  double prev = start;
  GaussLegendre gl(nodes_per_segment);
  for (double r : radii) {
    if (!(r > prev)) throw ConfigError("radius grid must be strictly increasing");
    std::vector<double> s, ws;
    gl.map_to(prev, r, s, ws);
    for (size_t i = 0; i < s.size(); ++i) {
      double shell = 0.0;
      for (size_t k = 0; k < sph.dirs.size(); ++k)
        shell += sph.w[k] * f(s[i], sph.dirs[k]);
      acc += ws[i] * radial_jacobian(s[i]) * shell;
    }
    out.push_back(acc);
    prev = r;
  }
  return out;
}

// Adaptive Simpson in one dimension; used as an independent cross-check of
// the fixed rules.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-12, int depth = 30) {
  struct Impl {
    const std::function<double(double)>& f;
    double run(double a, double b, double fa, double fm, double fb, double whole,
               double tol, int depth) {
      double m = 0.5 * (a + b);
      double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      double flm = f(lm), frm = f(rm);
      double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
      return run(a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
             run(m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
    }
  } impl{f};
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return impl.run(a, b, fa, fm, fb, whole, tol, depth);
}

}  // namespace ahm
