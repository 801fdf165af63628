#pragma once

#include "ahm/core.hpp"

namespace ahm {

using MatFn = std::function<Mat(const Vec&)>;
using VecFn = std::function<Vec(const Vec&)>;
using DomainFn = std::function<bool(const Vec&)>;

namespace detail {

inline void require_inside(const DomainFn& dom, const Vec& q) {
  if (dom && !dom(q)) {
    throw DomainError("finite-difference stencil point left the chart domain");
  }
}

inline Mat central2_d1(const MatFn& f, const Vec& p, int i, double h,
                       const DomainFn& dom) {
  Vec a = p, b = p;
  a(i) += h;
  b(i) -= h;
  require_inside(dom, a);
  require_inside(dom, b);
  return (f(a) - f(b)) / (2.0 * h);
}

inline Mat central4_d1(const MatFn& f, const Vec& p, int i, double h,
                       const DomainFn& dom) {
  Vec p2 = p, p1 = p, m1 = p, m2 = p;
  p2(i) += 2 * h;
  p1(i) += h;
  m1(i) -= h;
  m2(i) -= 2 * h;
  require_inside(dom, p2);
  require_inside(dom, m2);
  require_inside(dom, p1);
  require_inside(dom, m1);
  return (-f(p2) + 8.0 * f(p1) - 8.0 * f(m1) + f(m2)) / (12.0 * h);
}

inline Mat central2_d2(const MatFn& f, const Vec& p, int i, int j, double h,
                       const DomainFn& dom) {
  if (i == j) {
    Vec a = p, b = p;
    a(i) += h;
    b(i) -= h;
    require_inside(dom, a);
    require_inside(dom, b);
    return (f(a) - 2.0 * f(p) + f(b)) / (h * h);
  }
  Vec pp = p, pm = p, mp = p, mm = p;
  pp(i) += h; pp(j) += h;
  pm(i) += h; pm(j) -= h;
  mp(i) -= h; mp(j) += h;
  mm(i) -= h; mm(j) -= h;
  require_inside(dom, pp);
  require_inside(dom, pm);
  require_inside(dom, mp);
  require_inside(dom, mm);
  return (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
}

inline Mat central4_d2(const MatFn& f, const Vec& p, int i, int j, double h,
                       const DomainFn& dom) {
  if (i == j) {
    Vec p2 = p, p1 = p, m1 = p, m2 = p;
    p2(i) += 2 * h;
    p1(i) += h;
    m1(i) -= h;
    m2(i) -= 2 * h;
    require_inside(dom, p2);
    require_inside(dom, m2);
    return (-f(p2) + 16.0 * f(p1) - 30.0 * f(p) + 16.0 * f(m1) - f(m2)) /
           (12.0 * h * h);
  }
  // composition of two 4th-order first-derivative stencils; symmetric in (i,j)
  static const double c[4] = {-1.0 / 12, 8.0 / 12, -8.0 / 12, 1.0 / 12};
  static const double s[4] = {2.0, 1.0, -1.0, -2.0};
  Mat acc;
  bool first = true;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      Vec q = p;
      q(i) += s[a] * h;
      q(j) += s[b] * h;
      require_inside(dom, q);
      Mat term = (c[a] * c[b] / (h * h)) * f(q);
      if (first) {
        acc = term;
        first = false;
      } else {
        acc += term;
      }
    }
  }
  return acc;
}

}  // namespace detail

// d_i f at p for a matrix-valued field. Vectors go through as n x 1.
inline Mat partial_derivative(const MatFn& f, const Vec& p, int i,
                              const DiffConfig& cfg,
                              const DomainFn& dom = nullptr) {
  if (!(cfg.step > 0)) throw ConfigError("finite-difference step must be positive");
  switch (cfg.scheme) {
    case FdScheme::central2:
      return detail::central2_d1(f, p, i, cfg.step, dom);
    case FdScheme::central4:
      return detail::central4_d1(f, p, i, cfg.step, dom);
    case FdScheme::richardson: {
      Mat dh = detail::central2_d1(f, p, i, cfg.step, dom);
      Mat dh2 = detail::central2_d1(f, p, i, cfg.step / 2.0, dom);
      return (4.0 * dh2 - dh) / 3.0;
    }
  }
  throw ConfigError("unknown differentiation scheme");
}

// d_i d_j f at p. The stencils are symmetric in (i,j) by construction.
inline Mat second_partial(const MatFn& f, const Vec& p, int i, int j,
                          const DiffConfig& cfg,
                          const DomainFn& dom = nullptr) {
  if (!(cfg.step_second > 0)) throw ConfigError("finite-difference step must be positive");
  switch (cfg.scheme) {
    case FdScheme::central2:
      return detail::central2_d2(f, p, i, j, cfg.step_second, dom);
    case FdScheme::central4:
      return detail::central4_d2(f, p, i, j, cfg.step_second, dom);
    case FdScheme::richardson: {
      Mat dh = detail::central2_d2(f, p, i, j, cfg.step_second, dom);
      Mat dh2 = detail::central2_d2(f, p, i, j, cfg.step_second / 2.0, dom);
      return (4.0 * dh2 - dh) / 3.0;
    }
  }
  throw ConfigError("unknown differentiation scheme");
}

inline Vec partial_derivative_vec(const VecFn& f, const Vec& p, int i,
                                  const DiffConfig& cfg,
                                  const DomainFn& dom = nullptr) {
  MatFn g = [&f](const Vec& q) -> Mat { return f(q); };
  return partial_derivative(g, p, i, cfg, dom).col(0);
}

inline Vec second_partial_vec(const VecFn& f, const Vec& p, int i, int j,
                              const DiffConfig& cfg,
                              const DomainFn& dom = nullptr) {
  MatFn g = [&f](const Vec& q) -> Mat { return f(q); };
  return second_partial(g, p, i, j, cfg, dom).col(0);
}

// All first partials of a matrix field: D(k) = d_k f, returned as a vector of
// matrices in coordinate order.
inline std::vector<Mat> gradient_all(const MatFn& f, const Vec& p,
                                     const DiffConfig& cfg,
                                     const DomainFn& dom = nullptr) {
  std::vector<Mat> out;
  out.reserve(p.size());
  for (int k = 0; k < p.size(); ++k) out.push_back(partial_derivative(f, p, k, cfg, dom));
  return out;
}

}  // namespace ahm
