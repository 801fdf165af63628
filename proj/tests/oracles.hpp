#pragma once

// Independent reference implementations and frozen constants used to pin the
// library's numerics. Everything here is deliberately primitive: different
// algorithms, closed forms worked out by hand, and values computed once with
// extended-precision arithmetic, so agreement is evidence rather than
// tautology.

#include "ahm/core.hpp"

#include <cmath>
#include <functional>

namespace oracle {

using ahm::Mat;
using ahm::Vec;

// Adaptive Simpson with explicit error control; shares no code with the
// Gauss-Legendre rules under test.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, double fa, double fm, double fb, double tol,
                      int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
         simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12) {
  double m = 0.5 * (a + b);
  return simpson(f, a, b, f(a), f(m), f(b), tol, 40);
}

// pi and friends to the last representable digit.
constexpr double kPi = 3.141592653589793;
constexpr double kPiSq = 9.869604401089358;

// Area of the unit sphere S^{d-1}.
inline double sphere_area(int d) {
  return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
}

// Christoffel symbols of a conformally flat metric g = e^{2f} delta:
//   Gamma^k_{ij} = delta_ik d_j f + delta_jk d_i f - delta_ij d_k f.
// Hand derivation from the Koszul formula; used to pin the library's
// Levi-Civita assembly on an analytically known field.
inline double conformal_christoffel(int k, int i, int j, const Vec& df) {
  double out = 0.0;
  if (i == k) out += df(j);
  if (j == k) out += df(i);
  if (i == j) out -= df(k);
  return out;
}

// Complex-space-form distance Hessian for curvature pinched in [-4, -1]
// (unit-disc model scaled to curvature -4 on holomorphic planes): acting on
// the unit sphere of the orthogonal complement of the radial direction, the
// eigenvalues are coth(r) on the totally real plane (twice), coth(r) +
// tanh(r) on the rotated radial direction, and 0 radially.
inline void ball_hessian_spectrum(double r, double out[4]) {
  out[0] = 0.0;
  out[1] = 1.0 / std::tanh(r);
  out[2] = out[1];
  out[3] = out[1] + std::tanh(r);
}

// Frozen values for the coordinate conjugation on C^2 with the flat metric:
// the conjugate-linear part of du has constant squared norm 4, the
// conjugate energy density is 2, and integrating over the Euclidean ball
// B_r in R^4 (volume pi^2 r^4 / 2) gives:
//   integral of |dbar u|^2 over B_r          = pi^2 r^4
//   normalizer r^2 (flat regime, m = 2)     -> ratio = pi^2 r^2
//   boundary integral of |dbar u|^2 over S_r = 4 pi^2 r^3  (= d/dr above)
inline double conj_ball_integral(double r) { return kPiSq * r * r * r * r; }
inline double conj_ratio(double r) { return kPiSq * r * r; }
inline double conj_boundary_integral(double r) {
  return 4.0 * kPiSq * r * r * r;
}

// Quadratic-exponent weight on a radially symmetric model: the Hessian of
// f(rho) = rho^2/2 in a warped metric with profile psi has eigenvalue 1
// radially and rho * psi'/psi on the sphere. Direct differentiation, no
// connection machinery.
inline double parabolic_weight_sphere_eigenvalue(double rho, double psi,
                                                 double dpsi) {
  return rho * dpsi / psi;
}

// Reference second derivative via Richardson-extrapolated central
// differences, for calibrating the plain scheme's error against an
// independent one.
inline double richardson_second(const std::function<double(double)>& f,
                                double x, double h) {
  auto d2 = [&](double step) {
    return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
  };
  double a = d2(h), b = d2(0.5 * h);
  return (4.0 * b - a) / 3.0;
}

}  // namespace oracle
