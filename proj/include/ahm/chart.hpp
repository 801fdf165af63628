#pragma once

#include "ahm/fd.hpp"

namespace ahm {

// A coordinate chart of an almost Hermitian manifold of real dimension 2m.
// metric returns the 2m x 2m Gram matrix, acs the almost complex structure J
// as a matrix field. Exact first-derivative callbacks are optional; when
// present they are preferred over finite differences.
//   metric_d1: D(k,i,j) = d_k g_{ij}
//   acs_d1:    D(k,i,j) = d_k J^i_j
struct Chart {
  std::string name;
  int m = 2;  // complex dimension
  DomainFn contains;
  MatFn metric;
  MatFn acs;
  std::function<Tensor3(const Vec&)> metric_d1;  // optional
  std::function<Tensor3(const Vec&)> acs_d1;     // optional
  std::function<Vec(Rng&)> sample;  // interior points clear of the boundary

  int dim() const { return 2 * m; }

  std::vector<Vec> sample_many(Rng& rng, int count) const {
    if (!sample) throw ConfigError("chart '" + name + "' has no sampler");
    std::vector<Vec> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) pts.push_back(sample(rng));
    return pts;
  }

  Mat metric_at(const Vec& p) const {
    require_point(p);
    return metric(p);
  }
  Mat acs_at(const Vec& p) const {
    require_point(p);
    return acs(p);
  }
  void require_point(const Vec& p) const {
    if (p.size() != dim())
      throw DomainError("point dimension does not match chart dimension");
    if (contains && !contains(p))
      throw DomainError("point outside chart domain: " + name);
  }
};

struct ChartPointCheck {
  double acs_square_residual = 0.0;   // ||J^2 + I||
  double compatibility_residual = 0.0;  // ||J^T g J - g||
  double symmetry_residual = 0.0;     // ||g - g^T||
  double min_eigenvalue = 0.0;        // of sym(g)
  bool ok(double tol) const {
    return acs_square_residual <= tol && compatibility_residual <= tol &&
           symmetry_residual <= tol && min_eigenvalue > 0.0;
  }
};

// Pointwise chart invariants: J^2 = -I, g symmetric positive definite,
// g(J.,J.) = g.
inline ChartPointCheck check_chart_point(const Chart& c, const Vec& p) {
  Mat g = c.metric_at(p);
  Mat j = c.acs_at(p);
  int n = c.dim();
  ChartPointCheck out;
  out.acs_square_residual = (j * j + Mat::Identity(n, n)).cwiseAbs().maxCoeff();
  out.compatibility_residual = (j.transpose() * g * j - g).cwiseAbs().maxCoeff();
  out.symmetry_residual = (g - g.transpose()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (g + g.transpose()));
  out.min_eigenvalue = es.eigenvalues().minCoeff();
  return out;
}

// Gram-Schmidt of the coordinate basis against G. Rows of the result are the
// frame vectors.
inline Mat orthonormal_frame(const Mat& g) {
  int n = g.rows();
  Mat frame(n, n);
  int r = 0;
  for (int i = 0; i < n && r < n; ++i) {
    Vec v = Vec::Zero(n);
    v(i) = 1.0;
    for (int k = 0; k < r; ++k) {
      Vec w = frame.row(k).transpose();
      v -= (w.dot(g * v)) * w;
    }
    double nrm = std::sqrt(v.dot(g * v));
    if (nrm < 1e-10) continue;
    frame.row(r++) = v / nrm;
  }
  if (r < n) throw NumericalError("coordinate basis failed to span under Gram-Schmidt");
  return frame;
}

// J-adapted orthonormal frame {e_1..e_m, J e_1..J e_m}: each new e_a is a
// coordinate vector orthogonalized against the span of the previous pairs.
// Rows 0..m-1 hold e_a, rows m..2m-1 hold J e_a.
inline Mat j_paired_frame(const Mat& g, const Mat& j) {
  int n = g.rows();
  int m = n / 2;
  Mat frame = Mat::Zero(n, n);
  int pairs = 0;
  for (int i = 0; i < n && pairs < m; ++i) {
    Vec v = Vec::Zero(n);
    v(i) = 1.0;
    for (int k = 0; k < pairs; ++k) {
      Vec e = frame.row(k).transpose();
      Vec je = frame.row(m + k).transpose();
      v -= (e.dot(g * v)) * e;
      v -= (je.dot(g * v)) * je;
    }
    double nrm = std::sqrt(v.dot(g * v));
    if (nrm < 1e-8) continue;
    v /= nrm;
    frame.row(pairs) = v;
    frame.row(m + pairs) = j * v;
    ++pairs;
  }
  if (pairs < m) throw NumericalError("failed to build a J-adapted frame");
  return frame;
}

}  // namespace ahm
