#pragma once

#include "ahm/geometry.hpp"

namespace ahm {

// Smooth map between chart domains. Exact derivative callbacks, when present,
// bypass nested differencing in every identity that differentiates the map.
struct SmoothMap {
  std::string name;
  VecFn value;
  std::function<Mat(const Vec&)> jacobian_exact;      // optional, du(k,i) = d_i u^k
  std::function<Tensor3(const Vec&)> hessian_exact;   // optional, H(c,i,j) = d_i d_j u^c
  bool declared_holomorphic = false;
  bool declared_antiholomorphic = false;

  Vec at(const Vec& p) const { return value(p); }

  Mat jacobian(const Vec& p, const DiffConfig& cfg,
               const DomainFn& dom = nullptr) const {
    if (cfg.prefer_exact && jacobian_exact) return jacobian_exact(p);
    int n = static_cast<int>(p.size());
    Vec u0 = value(p);
    Mat out(u0.size(), n);
    for (int i = 0; i < n; ++i)
      out.col(i) = partial_derivative_vec(value, p, i, cfg, dom);
    return out;
  }

  Tensor3 hessian(const Vec& p, const DiffConfig& cfg,
                  const DomainFn& dom = nullptr) const {
    if (cfg.prefer_exact && hessian_exact) return hessian_exact(p);
    int n = static_cast<int>(p.size());
    int nc = static_cast<int>(value(p).size());
    Tensor3 out(nc, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Vec d = second_partial_vec(value, p, i, j, cfg, dom);
        for (int c = 0; c < nc; ++c) {
          out(c, i, j) = d(c);
          out(c, j, i) = d(c);
        }
      }
    return out;
  }
};

// Everything identity checks need at a single point, computed once.
struct MapJet {
  Vec p;       // domain point
  Vec q;       // image point
  Mat du;      // differential
  Tensor3 d2u; // coordinate second derivatives
  Mat g;       // domain metric at p
  Mat gi;      // its inverse
  Mat jd;      // domain structure at p
  Mat h;       // target metric at q
  Mat jt;      // target structure at q
};

inline MapJet make_jet(const SmoothMap& u, const Chart& dom, const Chart& tar,
                       const Vec& p, const DiffConfig& cfg) {
  MapJet jet;
  jet.p = p;
  jet.q = u.at(p);
  tar.require_point(jet.q);
  jet.du = u.jacobian(p, cfg, dom.contains);
  jet.d2u = u.hessian(p, cfg, dom.contains);
  jet.g = dom.metric_at(p);
  jet.gi = jet.g.inverse();
  jet.jd = dom.acs_at(p);
  jet.h = tar.metric_at(jet.q);
  jet.jt = tar.acs_at(jet.q);
  return jet;
}

inline double holomorphy_residual(const MapJet& j) {
  return (j.du * j.jd - j.jt * j.du).cwiseAbs().maxCoeff();
}

inline double antiholomorphy_residual(const MapJet& j) {
  return (j.du * j.jd + j.jt * j.du).cwiseAbs().maxCoeff();
}

// du = sigma_prime + sigma with sigma the conjugate-linear half:
// sigma(J X) = -J' sigma(X) holds as matrix algebra, no differentiation.
struct DifferentialSplit {
  Mat sigma;
  Mat sigma_prime;
};

inline DifferentialSplit split_differential(const Mat& du, const Mat& j_dom,
                                            const Mat& j_tar) {
  DifferentialSplit s;
  s.sigma = 0.5 * (du + j_tar * du * j_dom);
  s.sigma_prime = 0.5 * (du - j_tar * du * j_dom);
  return s;
}

// Full Hilbert-Schmidt square of a (1,1)-slot bundle map, tr(g^-1 A^T h A).
inline double bundle_norm_sq(const Mat& a, const Mat& gi, const Mat& h) {
  return (gi * a.transpose() * h * a).trace();
}

inline double energy_density(const MapJet& j) {
  return 0.5 * bundle_norm_sq(j.du, j.gi, j.h);
}

// |dbar u|^2 = 1/2 |sigma|^2.
inline double dbar_energy_density(const MapJet& j) {
  DifferentialSplit s = split_differential(j.du, j.jd, j.jt);
  return 0.5 * bundle_norm_sq(s.sigma, j.gi, j.h);
}

inline double del_energy_density(const MapJet& j) {
  DifferentialSplit s = split_differential(j.du, j.jd, j.jt);
  return 0.5 * bundle_norm_sq(s.sigma_prime, j.gi, j.h);
}

// Second fundamental form in a chosen pair of connections:
// H(c,i,j) = d_i d_j u^c + G'(c,a,b) du(a,i) du(b,j) - G(k,i,j) du(c,k),
// with the first lower slot of each connection the differentiation direction.
inline Tensor3 map_hessian(const MapJet& jet, const Tensor3& gamma_dom,
                           const Tensor3& gamma_tar) {
  int n = static_cast<int>(jet.p.size());
  int nc = static_cast<int>(jet.q.size());
  Tensor3 out(nc, n, n);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = jet.d2u(c, i, j);
        for (int a = 0; a < nc; ++a)
          for (int b = 0; b < nc; ++b)
            s += gamma_tar(c, a, b) * jet.du(a, i) * jet.du(b, j);
        for (int k = 0; k < n; ++k) s -= gamma_dom(k, i, j) * jet.du(c, k);
        out(c, i, j) = s;
      }
  return out;
}

inline Tensor3 hessian_levi_civita(const SmoothMap& u, const Chart& dom,
                                   const Chart& tar, const MapJet& jet,
                                   const DiffConfig& cfg) {
  (void)u;
  Tensor3 gd = christoffel(dom, jet.p, cfg);
  Tensor3 gt = christoffel(tar, jet.q, cfg);
  return map_hessian(jet, gd, gt);
}

inline Tensor3 hessian_canonical(const SmoothMap& u, const Chart& dom,
                                 const Chart& tar, const MapJet& jet,
                                 const DiffConfig& cfg) {
  (void)u;
  Tensor3 gd = second_canonical(dom, jet.p, cfg);
  Tensor3 gt = second_canonical(tar, jet.q, cfg);
  return map_hessian(jet, gd, gt);
}

// P(X,Y) = H(X,Y) + H(JX,JY) with the domain structure in both slots.
inline Tensor3 j_symmetrized(const Tensor3& hess, const Mat& j_dom) {
  int nc = hess.dim0();
  int n = hess.dim1();
  Tensor3 out(nc, n, n);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) {
        double s = hess(c, i, jj);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            s += j_dom(a, i) * j_dom(b, jj) * hess(c, a, b);
        out(c, i, jj) = s;
      }
  return out;
}

// Defect whose vanishing defines the pluriharmonic property in the canonical
// connections. Unchanged when the target structure flips sign.
inline Tensor3 pluriharmonic_defect(const SmoothMap& u, const Chart& dom,
                                    const Chart& tar, const MapJet& jet,
                                    const DiffConfig& cfg) {
  Tensor3 ht = hessian_canonical(u, dom, tar, jet, cfg);
  return j_symmetrized(ht, jet.jd);
}

// For holomorphic maps the defect collapses to Nijenhuis data alone:
// P(X,Y) = 2 { du(N(X,Y)) - N'(du X, du Y) }.
inline Tensor3 defect_nijenhuis_form(const MapJet& jet, const Tensor3& n_dom,
                                     const Tensor3& n_tar) {
  int n = static_cast<int>(jet.p.size());
  int nc = static_cast<int>(jet.q.size());
  Tensor3 out(nc, n, n);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += jet.du(c, k) * n_dom(k, i, j);
        for (int a = 0; a < nc; ++a)
          for (int b = 0; b < nc; ++b)
            s -= n_tar(c, a, b) * jet.du(a, i) * jet.du(b, j);
        out(c, i, j) = 2.0 * s;
      }
  return out;
}

// alpha(X,Y) = 1/2 J { (nabla_X J)Y + (nabla_{JX} J)(JY)
//                    + (nabla_Y J)X + (nabla_{JY} J)(JX) },
// a symmetric vector-valued form on the domain alone.
inline Tensor3 connection_gap_form(const Chart& c, const Vec& p,
                                   const DiffConfig& cfg) {
  int n = c.dim();
  Mat j = c.acs_at(p);
  Tensor3 nj = nabla_acs(c, p, cfg);
  Tensor3 out(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      Vec w = Vec::Zero(n);
      for (int s = 0; s < n; ++s) {
        double t = nj(s, i, jj) + nj(s, jj, i);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            t += (j(a, i) * j(b, jj) + j(a, jj) * j(b, i)) * nj(s, a, b);
        w(s) = t;
      }
      Vec jw = j * w;
      for (int k = 0; k < n; ++k) out(k, i, jj) = 0.5 * jw(k);
    }
  return out;
}

inline Vec tension_of(const Tensor3& hess, const Mat& gi) {
  int nc = hess.dim0();
  int n = hess.dim1();
  Vec out = Vec::Zero(nc);
  for (int c = 0; c < nc; ++c) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += gi(i, j) * hess(c, i, j);
    out(c) = s;
  }
  return out;
}

// With a Kaehler target the canonical and Levi-Civita defects differ by a
// zeroth-order term carried by the domain alone:
//   Ht(X,Y) + Ht(JX,JY) = Hl(X,Y) + Hl(JX,JY) + du(alpha(X,Y)).
inline double kaehler_target_defect_gap_residual(const SmoothMap& u,
                                                 const Chart& dom,
                                                 const Chart& tar,
                                                 const MapJet& jet,
                                                 const DiffConfig& cfg) {
  Tensor3 lhs = j_symmetrized(hessian_canonical(u, dom, tar, jet, cfg), jet.jd);
  Tensor3 rhs = j_symmetrized(hessian_levi_civita(u, dom, tar, jet, cfg), jet.jd);
  Tensor3 alpha = connection_gap_form(dom, jet.p, cfg);
  int n = static_cast<int>(jet.p.size());
  int nc = static_cast<int>(jet.q.size());
  double worst = 0.0;
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = rhs(c, i, j);
        for (int k = 0; k < n; ++k) s += jet.du(c, k) * alpha(k, i, j);
        worst = std::max(worst, std::abs(lhs(c, i, j) - s));
      }
  return worst;
}

// Tension fields in the two connection pairs differ by du(V), V = -J deltaJ.
inline double tension_gap_residual(const SmoothMap& u, const Chart& dom,
                                   const Chart& tar, const MapJet& jet,
                                   const DiffConfig& cfg) {
  Vec tau_t = tension_of(hessian_canonical(u, dom, tar, jet, cfg), jet.gi);
  Vec tau_l = tension_of(hessian_levi_civita(u, dom, tar, jet, cfg), jet.gi);
  Vec v = torsion_vector(dom, jet.p, cfg);
  Vec gap = tau_t - tau_l - jet.du * v;
  return gap.cwiseAbs().maxCoeff();
}

}  // namespace ahm
