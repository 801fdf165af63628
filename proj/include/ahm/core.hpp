#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ahm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Rank-3 tensor with the value index first: T(c,i,j).
// Conventions used throughout:
//   christoffel      G(k,i,j)  = Gamma^k_{ij}, i the differentiation direction
//   nabla_acs        D(k,i,j)  = (nabla_i J)^k_j
//   nijenhuis        N(k,i,j)  = N(e_i,e_j)^k
//   map hessians     H(c,i,j)  = (nabla du)(e_i,e_j)^c, i the direction
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int n0, int n1, int n2)
      : n0_(n0), n1_(n1), n2_(n2),
        v_(static_cast<size_t>(n0) * n1 * n2, 0.0) {}

  double& operator()(int a, int b, int c) {
    return v_[(static_cast<size_t>(a) * n1_ + b) * n2_ + c];
  }
  double operator()(int a, int b, int c) const {
    return v_[(static_cast<size_t>(a) * n1_ + b) * n2_ + c];
  }

  int dim0() const { return n0_; }
  int dim1() const { return n1_; }
  int dim2() const { return n2_; }

  double max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
  }

  Tensor3& operator+=(const Tensor3& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  Tensor3& operator-=(const Tensor3& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  Tensor3& operator*=(double s) {
    for (double& x : v_) x *= s;
    return *this;
  }

  // slice with fixed first index: M(i,j) = T(c,i,j)
  Mat slice0(int c) const {
    Mat m(n1_, n2_);
    for (int i = 0; i < n1_; ++i)
      for (int j = 0; j < n2_; ++j) m(i, j) = (*this)(c, i, j);
    return m;
  }

 private:
  int n0_ = 0, n1_ = 0, n2_ = 0;
  std::vector<double> v_;
};

// T(c,i,j) X^i Y^j
inline Vec contract2(const Tensor3& t, const Vec& x, const Vec& y) {
  Vec out = Vec::Zero(t.dim0());
  for (int c = 0; c < t.dim0(); ++c) {
    double s = 0.0;
    for (int i = 0; i < t.dim1(); ++i)
      for (int j = 0; j < t.dim2(); ++j) s += t(c, i, j) * x(i) * y(j);
    out(c) = s;
  }
  return out;
}

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FdScheme { central2, central4, richardson };

inline const char* to_string(FdScheme s) {
  switch (s) {
    case FdScheme::central2: return "central2";
    case FdScheme::central4: return "central4";
    case FdScheme::richardson: return "richardson";
  }
  return "?";
}

struct DiffConfig {
  FdScheme scheme = FdScheme::central2;
  double step = 1e-5;         // first derivatives
  double step_second = 1e-4;  // second derivatives (rounding floor is eps/h^2)
  bool prefer_exact = true;   // use chart/map exact-derivative callbacks when present
};

// Residual tolerance as a function of the finite-difference step.
// The constant is calibrated once per suite by comparing the workhorse
// scheme against Richardson extrapolation on a reference field.
struct ToleranceModel {
  double floor = 1e-6;
  double calibration = 25.0;
  double at(double h) const { return std::max(floor, calibration * h * h); }
};

// splitmix64: used to derive independent seeds for sub-streams.
inline uint64_t mix_seed(uint64_t state, uint64_t salt) {
  uint64_t z = state + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic random source. Uniforms are produced from raw engine output
// so streams are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0,1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal() {
    // Box-Muller, one value per call; pairs are not cached so the
    // consumption pattern stays obvious and reproducible.
    double u1 = uniform(), u2 = uniform();
    u1 = std::max(u1, 0x1.0p-60);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  Vec vector(int n, double a = -1.0, double b = 1.0) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = uniform(a, b);
    return v;
  }

  Vec normal_vec(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = normal();
    return v;
  }

  uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// Index-deterministic parallel loop: each index writes only its own slot, so
// results are identical for every thread count.
inline void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  int t = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int k = 0; k < t; ++k) {
    pool.emplace_back([&, k] {
      for (int i = k; i < n; i += t) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline int default_thread_count() {
  if (const char* env = std::getenv("AHM_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

}  // namespace ahm
