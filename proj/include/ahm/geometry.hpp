#pragma once

#include "ahm/chart.hpp"

namespace ahm {

// First partials of the metric, exact callback preferred.
inline std::vector<Mat> metric_partials(const Chart& c, const Vec& p,
                                        const DiffConfig& cfg) {
  int n = c.dim();
  std::vector<Mat> dg;
  dg.reserve(n);
  if (cfg.prefer_exact && c.metric_d1) {
    Tensor3 t = c.metric_d1(p);
    for (int k = 0; k < n; ++k) dg.push_back(t.slice0(k));
  } else {
    for (int k = 0; k < n; ++k)
      dg.push_back(partial_derivative(c.metric, p, k, cfg, c.contains));
  }
  return dg;
}

inline std::vector<Mat> acs_partials(const Chart& c, const Vec& p,
                                     const DiffConfig& cfg) {
  int n = c.dim();
  std::vector<Mat> dj;
  dj.reserve(n);
  if (cfg.prefer_exact && c.acs_d1) {
    Tensor3 t = c.acs_d1(p);
    for (int k = 0; k < n; ++k) dj.push_back(t.slice0(k));
  } else {
    for (int k = 0; k < n; ++k)
      dj.push_back(partial_derivative(c.acs, p, k, cfg, c.contains));
  }
  return dj;
}

// Levi-Civita Christoffel symbols, G(k,i,j) = Gamma^k_{ij}.
inline Tensor3 christoffel(const Chart& c, const Vec& p, const DiffConfig& cfg) {
  int n = c.dim();
  Mat g = c.metric_at(p);
  Mat gi = g.inverse();
  std::vector<Mat> dg = metric_partials(c, p, cfg);
  Tensor3 out(n, n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += gi(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        out(k, i, j) = 0.5 * s;
      }
  return out;
}

// Covariant derivative of J in the Levi-Civita connection,
// D(k,i,j) = (nabla_i J)^k_j.
inline Tensor3 nabla_acs(const Chart& c, const Vec& p, const DiffConfig& cfg) {
  int n = c.dim();
  Mat j = c.acs_at(p);
  Tensor3 gamma = christoffel(c, p, cfg);
  std::vector<Mat> dj = acs_partials(c, p, cfg);
  Tensor3 out(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int jj = 0; jj < n; ++jj) {
        double s = dj[i](k, jj);
        for (int l = 0; l < n; ++l)
          s += gamma(k, i, l) * j(l, jj) - gamma(l, i, jj) * j(k, l);
        out(k, i, jj) = s;
      }
  return out;
}

// Nijenhuis tensor from coordinate derivatives of J alone,
// N(k,i,j) = N_J(e_i, e_j)^k with the 1/4 normalization:
// 4N(X,Y) = [X,Y] + J[X,JY] + J[JX,Y] - [JX,JY].
inline Tensor3 nijenhuis(const Chart& c, const Vec& p, const DiffConfig& cfg) {
  int n = c.dim();
  Mat j = c.acs_at(p);
  std::vector<Mat> dj = acs_partials(c, p, cfg);
  Tensor3 out(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      Vec v = j * dj[i].col(jj) - j * dj[jj].col(i);
      for (int a = 0; a < n; ++a) v -= j(a, i) * dj[a].col(jj) - j(a, jj) * dj[a].col(i);
      for (int k = 0; k < n; ++k) out(k, i, jj) = 0.25 * v(k);
    }
  return out;
}

// Second canonical connection: the unique connection with parallel g and J
// whose torsion has no J-invariant part. Defined through
//   <D_X Y, Z> = <nabla_X Y, Z> - 1/2 <J (nabla_X J) Y, Z>
//                + 1/4 { <X, (nabla_{JY} J) Z + J (nabla_Y J) Z>
//                      - <X, (nabla_{JZ} J) Y + J (nabla_Z J) Y> }.
// Returns G(k,i,j) with i the differentiation direction.
inline Tensor3 second_canonical(const Chart& c, const Vec& p,
                                const DiffConfig& cfg) {
  int n = c.dim();
  Mat g = c.metric_at(p);
  Mat gi = g.inverse();
  Mat j = c.acs_at(p);
  Tensor3 gamma = christoffel(c, p, cfg);
  Tensor3 nj = nabla_acs(c, p, cfg);
  Tensor3 lower(n, n, n);  // lower(i,j,z) = <D_{e_i} e_j, e_z>
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int z = 0; z < n; ++z) {
        double t = 0.0;
        for (int s = 0; s < n; ++s) t += gamma(s, i, jj) * g(s, z);
        double acc = 0.0;
        for (int s = 0; s < n; ++s) {
          double jnj = 0.0;  // (J (nabla_i J) e_j)^s
          for (int l = 0; l < n; ++l) jnj += j(s, l) * nj(l, i, jj);
          acc += jnj * g(s, z);
        }
        t -= 0.5 * acc;
        auto pair_term = [&](int arg1, int arg2) {
          // <e_i, (nabla_{J e_{arg1}} J) e_{arg2} + J (nabla_{arg1} J) e_{arg2}>
          double r = 0.0;
          for (int s = 0; s < n; ++s) {
            double w = 0.0;
            for (int a = 0; a < n; ++a) w += j(a, arg1) * nj(s, a, arg2);
            for (int l = 0; l < n; ++l) w += j(s, l) * nj(l, arg1, arg2);
            r += w * g(s, i);
          }
          return r;
        };
        t += 0.25 * (pair_term(jj, z) - pair_term(z, jj));
        lower(i, jj, z) = t;
      }
  Tensor3 out(n, n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) {
        double s = 0.0;
        for (int z = 0; z < n; ++z) s += gi(k, z) * lower(i, jj, z);
        out(k, i, jj) = s;
      }
  return out;
}

// Torsion of a coordinate-frame connection, T(k,i,j) = G(k,i,j) - G(k,j,i).
inline Tensor3 connection_torsion(const Tensor3& gamma) {
  int n = gamma.dim0();
  Tensor3 t(n, n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(k, i, j) = gamma(k, i, j) - gamma(k, j, i);
  return t;
}

// J-invariant ((1,1)) part of a vector-valued 2-form:
// P(X,Y) = 1/2 [ T(X,Y) + T(JX,JY) ].
inline Tensor3 torsion_invariant_part(const Tensor3& t, const Mat& j) {
  int n = t.dim0();
  Tensor3 out(n, n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) {
        double s = t(k, i, jj);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) s += j(a, i) * j(b, jj) * t(k, a, b);
        out(k, i, jj) = 0.5 * s;
      }
  return out;
}

// Value-twisted projection 1/4 [ T(X,Y) + J T(JX,Y) + J T(X,JY) - T(JX,JY) ].
// For any connection preserving J this extracts the (0,2) component of the
// torsion, which equals -N_J; it vanishes exactly on integrable charts.
inline Tensor3 torsion_anti_invariant_02(const Tensor3& t, const Mat& j) {
  int n = t.dim0();
  Tensor3 out(n, n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) {
        double s = t(k, i, jj);
        for (int a = 0; a < n; ++a) {
          for (int s2 = 0; s2 < n; ++s2) {
            s += j(k, s2) * t(s2, a, jj) * j(a, i);
            s += j(k, s2) * t(s2, i, a) * j(a, jj);
          }
        }
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) s -= j(a, i) * j(b, jj) * t(k, a, b);
        out(k, i, jj) = 0.25 * s;
      }
  return out;
}

// Residual of metric parallelism for a connection: R(k,i,j) = (D_k g)_{ij}.
inline Tensor3 metric_parallel_residual(const Chart& c, const Tensor3& gamma,
                                        const Vec& p, const DiffConfig& cfg) {
  int n = c.dim();
  Mat g = c.metric_at(p);
  std::vector<Mat> dg = metric_partials(c, p, cfg);
  Tensor3 out(n, n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = dg[k](i, j);
        for (int l = 0; l < n; ++l)
          s -= gamma(l, k, i) * g(l, j) + gamma(l, k, j) * g(i, l);
        out(k, i, j) = s;
      }
  return out;
}

// Residual of J parallelism: R(k,i,j) = (D_k J)^i_j.
inline Tensor3 acs_parallel_residual(const Chart& c, const Tensor3& gamma,
                                     const Vec& p, const DiffConfig& cfg) {
  int n = c.dim();
  Mat j = c.acs_at(p);
  std::vector<Mat> dj = acs_partials(c, p, cfg);
  Tensor3 out(n, n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) {
        double s = dj[k](i, jj);
        for (int l = 0; l < n; ++l)
          s += gamma(i, k, l) * j(l, jj) - gamma(l, k, jj) * j(i, l);
        out(k, i, jj) = s;
      }
  return out;
}

// Codifferential of J: (delta J)^k = -g^{ab} (nabla_a J)^k_b.
inline Vec delta_acs(const Chart& c, const Vec& p, const DiffConfig& cfg) {
  int n = c.dim();
  Mat gi = c.metric_at(p).inverse();
  Tensor3 nj = nabla_acs(c, p, cfg);
  Vec out = Vec::Zero(n);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) s += gi(a, b) * nj(k, a, b);
    out(k) = -s;
  }
  return out;
}

// Torsion vector V = -J (delta J); vanishes exactly on semi-Kaehler charts.
inline Vec torsion_vector(const Chart& c, const Vec& p, const DiffConfig& cfg) {
  return -c.acs_at(p) * delta_acs(c, p, cfg);
}

// Fundamental 2-form, omega_{ij} = g(J e_i, e_j).
inline Mat fundamental_form(const Chart& c, const Vec& p) {
  Mat g = c.metric_at(p);
  Mat j = c.acs_at(p);
  return j.transpose() * g;
}

// Coordinate exterior derivative of omega:
// (d omega)_{kij} = d_k omega_{ij} - d_i omega_{kj} + d_j omega_{ki}.
inline Tensor3 fundamental_form_exterior_d(const Chart& c, const Vec& p,
                                           const DiffConfig& cfg) {
  int n = c.dim();
  MatFn om = [&c](const Vec& q) { return fundamental_form(c, q); };
  std::vector<Mat> dom = gradient_all(om, p, cfg, c.contains);
  Tensor3 out(n, n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out(k, i, j) = dom[k](i, j) - dom[i](k, j) + dom[j](k, i);
  return out;
}

// Pointwise class residuals. Flags are assigned by comparing each residual
// against a tolerance; the implication structure of the class lattice is then
// checked on the flags and any violation reported, never silently repaired.
struct ClassificationFlags {
  double r_kaehler = 0.0;        // ||nabla J||
  double r_almost_kaehler = 0.0; // ||d omega||
  double r_nearly_kaehler = 0.0; // ||sym part of nabla J||
  double r_quasi_kaehler = 0.0;  // ||(nabla_X J)Y + (nabla_{JX} J)(JY)||
  double r_semi_kaehler = 0.0;   // ||delta J||
  double r_hermitian = 0.0;      // ||N_J||
  bool kaehler = false, almost_kaehler = false, nearly_kaehler = false,
       quasi_kaehler = false, semi_kaehler = false, hermitian = false;
  std::vector<std::string> implication_violations;
  bool consistent() const { return implication_violations.empty(); }
};

inline ClassificationFlags classify(const Chart& c,
                                    const std::vector<Vec>& points,
                                    const DiffConfig& cfg, double tol) {
  ClassificationFlags f;
  int n = c.dim();
  for (const Vec& p : points) {
    Mat j = c.acs_at(p);
    Tensor3 nj = nabla_acs(c, p, cfg);
    Tensor3 nt = nijenhuis(c, p, cfg);
    Tensor3 dom = fundamental_form_exterior_d(c, p, cfg);
    Vec dj = delta_acs(c, p, cfg);
    f.r_kaehler = std::max(f.r_kaehler, nj.max_abs());
    f.r_almost_kaehler = std::max(f.r_almost_kaehler, dom.max_abs());
    f.r_hermitian = std::max(f.r_hermitian, nt.max_abs());
    f.r_semi_kaehler = std::max(f.r_semi_kaehler, dj.cwiseAbs().maxCoeff());
    double rnk = 0.0, rqk = 0.0;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
          rnk = std::max(rnk, std::abs(nj(k, i, jj) + nj(k, jj, i)));
          double q = nj(k, i, jj);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              q += j(a, i) * nj(k, a, b) * j(b, jj);
          rqk = std::max(rqk, std::abs(q));
        }
    f.r_nearly_kaehler = std::max(f.r_nearly_kaehler, rnk);
    f.r_quasi_kaehler = std::max(f.r_quasi_kaehler, rqk);
  }
  f.kaehler = f.r_kaehler <= tol;
  f.almost_kaehler = f.r_almost_kaehler <= tol;
  f.nearly_kaehler = f.r_nearly_kaehler <= tol;
  f.quasi_kaehler = f.r_quasi_kaehler <= tol;
  f.semi_kaehler = f.r_semi_kaehler <= tol;
  f.hermitian = f.r_hermitian <= tol;

  auto implies = [&](bool a, bool b, const char* msg) {
    if (a && !b) f.implication_violations.push_back(msg);
  };
  implies(f.kaehler, f.hermitian, "kaehler without integrable structure");
  implies(f.kaehler, f.almost_kaehler, "kaehler without closed fundamental form");
  implies(f.kaehler, f.nearly_kaehler, "kaehler without symmetric-part vanishing");
  implies(f.kaehler, f.quasi_kaehler, "kaehler without quasi-kaehler identity");
  implies(f.kaehler, f.semi_kaehler, "kaehler without coclosed fundamental form");
  implies(f.almost_kaehler, f.quasi_kaehler, "almost kaehler outside quasi-kaehler");
  implies(f.nearly_kaehler, f.quasi_kaehler, "nearly kaehler outside quasi-kaehler");
  implies(f.quasi_kaehler, f.semi_kaehler, "quasi-kaehler not semi-kaehler");
  implies(f.hermitian && f.quasi_kaehler, f.kaehler,
          "integrable quasi-kaehler chart not flagged kaehler");
  implies(f.almost_kaehler && f.nearly_kaehler, f.kaehler,
          "almost kaehler and nearly kaehler but not kaehler");
  return f;
}

}  // namespace ahm
