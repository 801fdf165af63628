#pragma once

#include "ahm/monotonicity.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace ahm {

// One verified statement with its worst observed residual. `statement` is a
// human-readable description of what was measured, not how.
struct CheckRecord {
  std::string name;
  std::string statement;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double tolerance = 0.0;
  long samples = 0;
  bool pass = false;
  nlohmann::json detail;  // optional per-case table

  static CheckRecord from_samples(std::string name, std::string statement,
                                  const std::vector<double>& residuals,
                                  double tolerance) {
    CheckRecord r;
    r.name = std::move(name);
    r.statement = std::move(statement);
    r.tolerance = tolerance;
    r.samples = static_cast<long>(residuals.size());
    double sum = 0.0;
    for (double v : residuals) {
      r.max_residual = std::max(r.max_residual, v);
      sum += v;
    }
    r.mean_residual = residuals.empty() ? 0.0 : sum / residuals.size();
    r.pass = r.max_residual <= tolerance;
    return r;
  }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  double wall_seconds = 0.0;  // serialized only on request

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerificationReport {
  std::string tool = "ahm-verify";
  std::string version = "0.1.0";
  std::uint64_t seed = 0;
  int threads = 1;
  DiffConfig diff;
  bool include_timings = false;
  std::vector<SuiteReport> suites;

  bool pass() const {
    for (const auto& s : suites)
      if (!s.pass()) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["tool"] = tool;
    j["version"] = version;
    j["seed"] = seed;
    j["threads"] = threads;
    j["fd"] = {{"scheme", diff.scheme == FdScheme::central2   ? "central2"
                          : diff.scheme == FdScheme::central4 ? "central4"
                                                              : "richardson"},
               {"step", diff.step},
               {"step_second", diff.step_second}};
    j["pass"] = pass();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : suites) {
      nlohmann::json js;
      js["suite"] = s.suite;
      js["pass"] = s.pass();
      if (include_timings) js["wall_seconds"] = s.wall_seconds;
      nlohmann::json ca = nlohmann::json::array();
      for (const auto& c : s.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["statement"] = c.statement;
        jc["max_residual"] = c.max_residual;
        jc["mean_residual"] = c.mean_residual;
        jc["tolerance"] = c.tolerance;
        jc["samples"] = c.samples;
        jc["pass"] = c.pass;
        if (!c.detail.is_null()) jc["detail"] = c.detail;
        ca.push_back(jc);
      }
      js["checks"] = ca;
      arr.push_back(js);
    }
    j["suites"] = arr;
    return j;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << tool << " " << version << " seed=" << seed << "\n";
    for (const auto& s : suites) {
      out << "suite " << s.suite << ": " << (s.pass() ? "PASS" : "FAIL");
      if (include_timings) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), " (%.2fs)", s.wall_seconds);
        out << buf;
      }
      out << "\n";
      for (const auto& c : s.checks) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "  [%s] %-28s max=%.3e mean=%.3e tol=%.1e n=%ld\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.max_residual,
                      c.mean_residual, c.tolerance, c.samples);
        out << buf;
        out << "         " << c.statement << "\n";
      }
    }
    out << "overall: " << (pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
  }
};

// Single serialization entry point; callers pick the wire format by name so
// output selection stays data-driven.
inline std::string emit_report(const VerificationReport& rep,
                               const std::string& format) {
  if (format == "json") return rep.to_json().dump(2) + "\n";
  if (format == "text") return rep.to_text();
  throw ConfigError("unknown report format '" + format + "'");
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Fixed-column curve output; consumers depend on this exact header.
inline std::string curve_to_csv(const MonotonicityCurve& curve) {
  std::ostringstream out;
  out << "r,weighted_integral,normalizer,ratio,boundary_integral,margin\n";
  for (const auto& p : curve.points) {
    out << format_double(p.r) << "," << format_double(p.weighted_integral)
        << "," << format_double(p.normalizer) << "," << format_double(p.ratio)
        << "," << format_double(p.boundary_integral) << ","
        << format_double(p.margin) << "\n";
  }
  return out.str();
}

inline nlohmann::json curve_to_json(const MonotonicityCurve& curve) {
  nlohmann::json j;
  j["regime"] = to_string(curve.spec.regime);
  j["annulus"] = curve.spec.annulus;
  if (curve.spec.annulus) j["inner_radius"] = curve.spec.inner_radius;
  j["torsion_constant"] = curve.spec.c_torsion;
  if (curve.spec.flat_family()) {
    j["growth_constant"] = curve.spec.growth_constant();
    j["published_growth_constant"] = curve.spec.published_growth_constant();
  }
  j["normalizer_exponent"] = curve.spec.normalizer_exponent();
  j["hypothesis"] = {{"max_scaled_torsion", curve.hypothesis.max_scaled_torsion},
                     {"max_kernel_gap", curve.hypothesis.max_kernel_gap},
                     {"max_defect", curve.hypothesis.max_defect},
                     {"certified", curve.hypothesis.certified()}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : curve.points)
    rows.push_back({{"r", p.r},
                    {"weighted_integral", p.weighted_integral},
                    {"normalizer", p.normalizer},
                    {"ratio", p.ratio},
                    {"boundary_integral", p.boundary_integral},
                    {"margin", p.margin}});
  j["points"] = rows;
  nlohmann::json ineq = nlohmann::json::array();
  for (const auto& r : curve.inequality)
    ineq.push_back({{"r", r.r}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"margin", r.margin()}});
  j["growth_inequality"] = ineq;
  j["worst_ratio_margin"] = curve.worst_ratio_margin;
  j["worst_inequality_margin"] = curve.worst_inequality_margin;
  return j;
}

inline nlohmann::json classification_to_json(const ClassificationFlags& f) {
  nlohmann::json j;
  j["residuals"] = {{"kaehler", f.r_kaehler},
                    {"almost_kaehler", f.r_almost_kaehler},
                    {"nearly_kaehler", f.r_nearly_kaehler},
                    {"quasi_kaehler", f.r_quasi_kaehler},
                    {"semi_kaehler", f.r_semi_kaehler},
                    {"hermitian", f.r_hermitian}};
  j["flags"] = {{"kaehler", f.kaehler},
                {"almost_kaehler", f.almost_kaehler},
                {"nearly_kaehler", f.nearly_kaehler},
                {"quasi_kaehler", f.quasi_kaehler},
                {"semi_kaehler", f.semi_kaehler},
                {"hermitian", f.hermitian}};
  j["implication_violations"] = f.implication_violations;
  j["consistent"] = f.consistent();
  return j;
}

}  // namespace ahm
