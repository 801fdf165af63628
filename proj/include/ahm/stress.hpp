#pragma once

#include "ahm/maps.hpp"

namespace ahm {

// One-forms valued in the pulled-back target tangent bundle, stored as
// component matrices omega(gamma, i). The three cases every identity here
// consumes are the differential and its two J-split halves.
enum class FormKind { differential, sigma_part, sigma_prime_part };

inline const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::differential: return "du";
    case FormKind::sigma_part: return "sigma";
    case FormKind::sigma_prime_part: return "sigma_prime";
  }
  return "?";
}

inline Mat form_value(FormKind k, const MapJet& jet) {
  if (k == FormKind::differential) return jet.du;
  DifferentialSplit s = split_differential(jet.du, jet.jd, jet.jt);
  return k == FormKind::sigma_part ? s.sigma : s.sigma_prime;
}

inline double form_norm_sq(const Mat& omega, const MapJet& jet) {
  return bundle_norm_sq(omega, jet.gi, jet.h);
}

// S_ij = 1/2 |omega|^2 g_ij - h_{ab} omega^a_i omega^b_j.
inline Mat stress_tensor(const Mat& omega, const MapJet& jet) {
  return 0.5 * form_norm_sq(omega, jet) * jet.g -
         omega.transpose() * jet.h * omega;
}

// Inner product of two symmetric 2-tensors with both slots raised by g.
inline double tensor2_inner(const Mat& s, const Mat& t, const Mat& gi) {
  return (gi * s * gi * t).trace();
}

// Covariant data of a form field along the map, all in Levi-Civita
// connections with the target side pulled back through u.
struct FormDerivatives {
  Tensor3 covariant;   // C(gamma,i,j) = (nabla_i omega)^gamma_j
  Vec codifferential;  // (delta omega)^gamma = -g^{ij} C(gamma,i,j)
  Tensor3 exterior;    // E(gamma,i,j) = C(gamma,i,j) - C(gamma,j,i)
};

inline FormDerivatives form_derivatives(FormKind kind, const SmoothMap& u,
                                        const Chart& dom, const Chart& tar,
                                        const Vec& p, const DiffConfig& cfg) {
  MapJet jet = make_jet(u, dom, tar, p, cfg);
  int n = dom.dim();
  int nc = tar.dim();
  MatFn field = [&](const Vec& q) {
    return form_value(kind, make_jet(u, dom, tar, q, cfg));
  };
  std::vector<Mat> dpart = gradient_all(field, p, cfg, dom.contains);
  Tensor3 gd = christoffel(dom, p, cfg);
  Tensor3 gt = christoffel(tar, jet.q, cfg);
  Mat omega = form_value(kind, jet);

  FormDerivatives out{Tensor3(nc, n, n), Vec::Zero(nc), Tensor3(nc, n, n)};
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = dpart[i](c, j);
        for (int a = 0; a < nc; ++a)
          for (int b = 0; b < nc; ++b)
            s += gt(c, a, b) * jet.du(a, i) * omega(b, j);
        for (int k = 0; k < n; ++k) s -= gd(k, i, j) * omega(c, k);
        out.covariant(c, i, j) = s;
      }
  for (int c = 0; c < nc; ++c) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += jet.gi(i, j) * out.covariant(c, i, j);
    out.codifferential(c) = -s;
  }
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out.exterior(c, i, j) = out.covariant(c, i, j) - out.covariant(c, j, i);
  return out;
}

// Divergence of the stress field as a covector, D_j = g^{ki} (nabla_k S)_{ij}.
// The only differencing is of the S field itself; with exact map jacobians
// its stencil values carry no nested finite-difference error.
inline Vec stress_divergence(FormKind kind, const SmoothMap& u,
                             const Chart& dom, const Chart& tar, const Vec& p,
                             const DiffConfig& cfg) {
  int n = dom.dim();
  MapJet jet = make_jet(u, dom, tar, p, cfg);
  MatFn sfield = [&](const Vec& q) {
    MapJet jq = make_jet(u, dom, tar, q, cfg);
    return stress_tensor(form_value(kind, jq), jq);
  };
  std::vector<Mat> ds = gradient_all(sfield, p, cfg, dom.contains);
  Mat s0 = sfield(p);
  Tensor3 gd = christoffel(dom, p, cfg);
  Vec out = Vec::Zero(n);
  for (int j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        double cov = ds[k](i, j);
        for (int l = 0; l < n; ++l)
          cov -= gd(l, k, i) * s0(l, j) + gd(l, k, j) * s0(i, l);
        acc += jet.gi(k, i) * cov;
      }
    out(j) = acc;
  }
  return out;
}

// (div S_omega)(X) = <delta omega, omega(X)> + <i_X d omega, omega>.
// Holds for any smooth map and any of the three form kinds.
struct DivergenceCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual() const { return std::abs(lhs - rhs); }
};

inline DivergenceCheck divergence_identity_check(FormKind kind,
                                                 const SmoothMap& u,
                                                 const Chart& dom,
                                                 const Chart& tar,
                                                 const Vec& p, const Vec& x,
                                                 const DiffConfig& cfg) {
  MapJet jet = make_jet(u, dom, tar, p, cfg);
  int n = dom.dim();
  int nc = tar.dim();
  Mat omega = form_value(kind, jet);
  FormDerivatives fd = form_derivatives(kind, u, dom, tar, p, cfg);
  Vec div = stress_divergence(kind, u, dom, tar, p, cfg);

  DivergenceCheck out;
  out.lhs = div.dot(x);
  Vec omx = omega * x;
  out.rhs = fd.codifferential.dot(jet.h * omx);
  Mat contracted(nc, n);  // (i_X d omega)^gamma_j
  for (int c = 0; c < nc; ++c)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += fd.exterior(c, i, j) * x(i);
      contracted(c, j) = s;
    }
  out.rhs += (jet.gi * contracted.transpose() * jet.h * omega).trace();
  return out;
}

// delta sigma = sigma(V) for anti-holomorphic maps into Kaehler targets.
inline double sigma_codifferential_residual(const SmoothMap& u,
                                            const Chart& dom, const Chart& tar,
                                            const Vec& p,
                                            const DiffConfig& cfg) {
  MapJet jet = make_jet(u, dom, tar, p, cfg);
  Mat sigma = form_value(FormKind::sigma_part, jet);
  FormDerivatives fd = form_derivatives(FormKind::sigma_part, u, dom, tar, p, cfg);
  Vec v = torsion_vector(dom, p, cfg);
  return (fd.codifferential - sigma * v).cwiseAbs().maxCoeff();
}

// d sigma(X,Y) = J' du N(X,Y) for the same map class, with the quarter
// normalization of N used throughout.
inline double sigma_exterior_residual(const SmoothMap& u, const Chart& dom,
                                      const Chart& tar, const Vec& p,
                                      const DiffConfig& cfg) {
  MapJet jet = make_jet(u, dom, tar, p, cfg);
  int n = dom.dim();
  int nc = tar.dim();
  FormDerivatives fd = form_derivatives(FormKind::sigma_part, u, dom, tar, p, cfg);
  Tensor3 nd = nijenhuis(dom, p, cfg);
  double worst = 0.0;
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double rhs = 0.0;
        for (int a = 0; a < nc; ++a)
          for (int k = 0; k < n; ++k)
            rhs += jet.jt(c, a) * jet.du(a, k) * nd(k, i, j);
        worst = std::max(worst, std::abs(fd.exterior(c, i, j) - rhs));
      }
  return worst;
}

// Symmetric 2-tensor diagonal in a J-paired orthonormal frame. Eigenvalues
// come sorted ascending; the first m sit on the e half, the last m on the
// J e half. Returned in coordinate components.
inline Mat adapted_symmetric_tensor(const Mat& g, const Mat& j,
                                    const std::vector<double>& eigenvalues) {
  Mat frame = j_paired_frame(g, j);
  int n = static_cast<int>(g.rows());
  if (static_cast<int>(eigenvalues.size()) != n)
    throw ConfigError("adapted tensor needs one eigenvalue per dimension");
  Mat out = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    Vec flat = g * Vec(frame.row(a).transpose());
    out += eigenvalues[a] * flat * flat.transpose();
  }
  return out;
}

// <S_sigma, H> against its eigenvalue lower bound
// sum_{a=1}^{m-1} (lambda_a + lambda_{m+a}) |dbar u|^2.
struct AdaptedBoundTrial {
  double inner = 0.0;
  double bound = 0.0;
  double dbar_density = 0.0;
  double margin() const { return inner - bound; }
};

inline AdaptedBoundTrial adapted_bound_trial(const MapJet& jet,
                                             std::vector<double> eigenvalues) {
  int n = static_cast<int>(jet.g.rows());
  int m = n / 2;
  std::sort(eigenvalues.begin(), eigenvalues.end());
  Mat hmat = adapted_symmetric_tensor(jet.g, jet.jd, eigenvalues);
  Mat sigma = form_value(FormKind::sigma_part, jet);
  Mat s = stress_tensor(sigma, jet);
  AdaptedBoundTrial out;
  out.inner = tensor2_inner(s, hmat, jet.gi);
  out.dbar_density = 0.5 * form_norm_sq(sigma, jet);
  double lam = 0.0;
  for (int a = 0; a + 1 <= m - 1; ++a) lam += eigenvalues[a] + eigenvalues[m + a];
  out.bound = lam * out.dbar_density;
  return out;
}

}  // namespace ahm
