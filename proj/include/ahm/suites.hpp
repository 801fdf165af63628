#pragma once

#include "ahm/models.hpp"
#include "ahm/report.hpp"
#include "ahm/stress.hpp"

#include <chrono>
#include <map>
#include <set>

namespace ahm {

enum class SuiteId {
  connection_axioms,
  lemma32,
  theorem31,
  prop41,
  prop42,
  lemma44_46,
  lemma25_divergence,
  lemma47_bound,
  lemma45_comparison,
  lemma49_411_sums,
  thm410_412_monotonicity,
  thm413_annulus,
  sec5_growth,
  classification_zoo,
};

inline const std::vector<std::pair<SuiteId, std::string>>& suite_table() {
  static const std::vector<std::pair<SuiteId, std::string>> t = {
      {SuiteId::connection_axioms, "connection_axioms"},
      {SuiteId::lemma32, "lemma32"},
      {SuiteId::theorem31, "theorem31"},
      {SuiteId::prop41, "prop41"},
      {SuiteId::prop42, "prop42"},
      {SuiteId::lemma44_46, "lemma44_46"},
      {SuiteId::lemma25_divergence, "lemma25_divergence"},
      {SuiteId::lemma47_bound, "lemma47_bound"},
      {SuiteId::lemma45_comparison, "lemma45_comparison"},
      {SuiteId::lemma49_411_sums, "lemma49_411_sums"},
      {SuiteId::thm410_412_monotonicity, "thm410_412_monotonicity"},
      {SuiteId::thm413_annulus, "thm413_annulus"},
      {SuiteId::sec5_growth, "sec5_growth"},
      {SuiteId::classification_zoo, "classification_zoo"},
  };
  return t;
}

inline std::string to_string(SuiteId id) {
  for (const auto& [k, v] : suite_table())
    if (k == id) return v;
  throw ConfigError("unknown suite id");
}

inline SuiteId suite_from_string(const std::string& s) {
  for (const auto& [k, v] : suite_table())
    if (v == s) return k;
  throw ConfigError("unknown suite '" + s + "'");
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : suite_table()) out.push_back(v);
  return out;
}

struct RunOptions {
  std::uint64_t seed = 20260822ULL;
  DiffConfig diff;
  double tol = 1e-6;
  int threads = 1;
  bool timings = false;
  std::optional<int> samples;  // per-unit sample override
};

inline const std::vector<std::string>& kaehler_target_names() {
  static const std::vector<std::string> names = {"flat_complex",
                                                 "complex_hyperbolic",
                                                 "sheared_flat"};
  return names;
}

inline Chart flipped_acs(Chart c) {
  c.name += "_flipped";
  auto base = c.acs;
  c.acs = [base](const Vec& p) { return Mat(-base(p)); };
  if (c.acs_d1) {
    auto based = c.acs_d1;
    c.acs_d1 = [based](const Vec& p) {
      Tensor3 t = based(p);
      for (int k = 0; k < t.dim0(); ++k)
        for (int i = 0; i < t.dim1(); ++i)
          for (int j = 0; j < t.dim1(); ++j) t(k, i, j) = -t(k, i, j);
      return t;
    };
  }
  return c;
}

inline Vec unit_vector(Rng& rng, int n) {
  Vec v = rng.normal_vec(n);
  v.normalize();
  return v;
}

inline double h_norm(const Vec& v, const Mat& h) {
  return std::sqrt(std::max(0.0, v.dot(h * v)));
}

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

// ---------------------------------------------------------------------------
// Suite runners. Each one is deterministic for a fixed (seed, thread count)
// and never throws on a failing check; construction problems do propagate.
// ---------------------------------------------------------------------------

inline SuiteReport run_connection_axioms(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "connection_axioms";
  int per_chart = o.samples.value_or(100);
  std::vector<double> rg, rj, rt, rn;
  nlohmann::json detail = nlohmann::json::object();
  int idx = 0;
  for (const std::string& name : hermitian_zoo_names()) {
    ModelBundle mb = build_model(name);
    Rng rng(mix_seed(o.seed, 100 + idx++));
    double wg = 0, wj = 0, wt = 0, wn = 0;
    for (int t = 0; t < per_chart; ++t) {
      Vec p = mb.chart.sample_many(rng, 1)[0];
      Tensor3 gamma = second_canonical(mb.chart, p, o.diff);
      Mat j = mb.chart.acs_at(p);
      double a = metric_parallel_residual(mb.chart, gamma, p, o.diff).max_abs();
      double b = acs_parallel_residual(mb.chart, gamma, p, o.diff).max_abs();
      Tensor3 tor = connection_torsion(gamma);
      double c = torsion_invariant_part(tor, j).max_abs();
      Tensor3 anti = torsion_anti_invariant_02(tor, j);
      Tensor3 nj = nijenhuis(mb.chart, p, o.diff);
      double d = 0.0;
      for (int k = 0; k < anti.dim0(); ++k)
        for (int i = 0; i < anti.dim1(); ++i)
          for (int jj = 0; jj < anti.dim1(); ++jj)
            d = std::max(d, std::abs(anti(k, i, jj) + nj(k, i, jj)));
      rg.push_back(a);
      rj.push_back(b);
      rt.push_back(c);
      rn.push_back(d);
      wg = std::max(wg, a);
      wj = std::max(wj, b);
      wt = std::max(wt, c);
      wn = std::max(wn, d);
    }
    detail[name] = {{"metric", wg}, {"structure", wj}, {"torsion_11", wt},
                    {"torsion_02_vs_nijenhuis", wn}};
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "metric_parallel", "canonical connection leaves the metric parallel",
      rg, o.tol));
  rep.checks.push_back(CheckRecord::from_samples(
      "structure_parallel",
      "canonical connection leaves the almost complex structure parallel", rj,
      o.tol));
  rep.checks.push_back(CheckRecord::from_samples(
      "torsion_invariant_part",
      "structure-invariant part of the canonical torsion vanishes", rt, o.tol));
  rep.checks.push_back(CheckRecord::from_samples(
      "torsion_02_part",
      "value-twisted torsion projection reproduces minus the Nijenhuis tensor",
      rn, o.tol));
  rep.checks.back().detail = detail;
  return rep;
}

inline SuiteReport run_lemma32(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "lemma32";
  int per_chart = o.samples.value_or(100);
  std::vector<double> r1, r2, r3;
  int idx = 0;
  for (const std::string& name : hermitian_zoo_names()) {
    ModelBundle mb = build_model(name);
    Chart flip = flipped_acs(mb.chart);
    Rng rng(mix_seed(o.seed, 200 + idx++));
    for (int t = 0; t < per_chart; ++t) {
      Vec p = mb.chart.sample_many(rng, 1)[0];
      int n = mb.chart.dim();
      Vec x = unit_vector(rng, n), y = unit_vector(rng, n);
      Mat j = mb.chart.acs_at(p);
      Tensor3 nt = nijenhuis(mb.chart, p, o.diff);
      Vec nxy = contract2(nt, x, y);
      Vec njxy = contract2(nt, Vec(j * x), y);
      Vec nxjy = contract2(nt, x, Vec(j * y));
      r1.push_back((njxy + j * nxy).cwiseAbs().maxCoeff());
      r2.push_back((nxjy + j * nxy).cwiseAbs().maxCoeff());
      Tensor3 ntf = nijenhuis(flip, p, o.diff);
      Vec fxy = contract2(ntf, x, y);
      r3.push_back((fxy - nxy).cwiseAbs().maxCoeff());
    }
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "first_slot_twist",
      "applying the structure in the first slot equals minus the structure on "
      "the value",
      r1, o.tol));
  rep.checks.push_back(CheckRecord::from_samples(
      "second_slot_twist",
      "applying the structure in the second slot equals minus the structure "
      "on the value",
      r2, o.tol));
  rep.checks.push_back(CheckRecord::from_samples(
      "sign_flip_invariance",
      "negating the structure leaves the Nijenhuis tensor unchanged", r3,
      o.tol));
  return rep;
}

inline SuiteReport run_theorem31(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "theorem31";
  int per_map = o.samples.value_or(200);
  const std::vector<std::string> holo = {"identity_flat", "square_complex",
                                         "ball_polynomial", "identity_perturbed",
                                         "shear_pushforward"};
  const std::vector<std::string> anti = {
      "conjugation_flat", "conjugation_ball_flat", "conjugation_hopf_flat",
      "conjugation_conformal_flat"};

  std::vector<double> sig, defect, jsym, tension;
  nlohmann::json detail = nlohmann::json::object();
  int idx = 0;
  for (const std::string& name : holo) {
    MapBundle b = build_map(name);
    ModelBundle dom = build_model(b.domain_model);
    ModelBundle tar = build_model(b.target_model);
    auto sampler = b.sample ? b.sample : dom.chart.sample;
    Rng rng(mix_seed(o.seed, 300 + idx++));
    double worst = 0.0;
    for (int t = 0; t < per_map; ++t) {
      Vec p = sampler(rng);
      MapJet jet = make_jet(b.map, dom.chart, tar.chart, p, o.diff);
      sig.push_back(holomorphy_residual(jet));
      Tensor3 pd = pluriharmonic_defect(b.map, dom.chart, tar.chart, jet, o.diff);
      double r = pd.max_abs();
      Vec x = unit_vector(rng, dom.chart.dim());
      Vec y = unit_vector(rng, dom.chart.dim());
      r = std::max(r, h_norm(contract2(pd, x, y), jet.h));
      defect.push_back(r);
      worst = std::max(worst, r);
      Vec pxy = contract2(pd, x, y);
      Vec pjj = contract2(pd, Vec(jet.jd * x), Vec(jet.jd * y));
      jsym.push_back((pjj - pxy).cwiseAbs().maxCoeff());
      Vec tt = tension_of(hessian_canonical(b.map, dom.chart, tar.chart, jet, o.diff),
                          jet.gi);
      tension.push_back(h_norm(tt, jet.h));
    }
    detail[name] = worst;
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "holomorphy_verified",
      "declared structure-preserving maps have vanishing conjugate-linear part",
      sig, o.tol));
  CheckRecord cd = CheckRecord::from_samples(
      "holomorphic_defect",
      "structure-preserving maps have vanishing pluriharmonic defect", defect,
      o.tol);
  cd.detail = detail;
  rep.checks.push_back(cd);
  rep.checks.push_back(CheckRecord::from_samples(
      "defect_structure_invariance",
      "defect is unchanged when both arguments rotate by the structure", jsym,
      1e-9));
  rep.checks.push_back(CheckRecord::from_samples(
      "pluriharmonic_implies_harmonic",
      "canonical tension vanishes wherever the defect does", tension,
      4.0 * o.tol));

  std::vector<double> sigp, defm;
  idx = 0;
  for (const std::string& name : anti) {
    MapBundle b = build_map(name);
    ModelBundle dom = build_model(b.domain_model);
    ModelBundle tar = build_model(b.target_model);
    Chart tflip = flipped_acs(tar.chart);
    auto sampler = b.sample ? b.sample : dom.chart.sample;
    Rng rng(mix_seed(o.seed, 340 + idx++));
    for (int t = 0; t < per_map / 2; ++t) {
      Vec p = sampler(rng);
      MapJet jet = make_jet(b.map, dom.chart, tar.chart, p, o.diff);
      sigp.push_back(antiholomorphy_residual(jet));
      MapJet jf = make_jet(b.map, dom.chart, tflip, p, o.diff);
      Tensor3 pd = pluriharmonic_defect(b.map, dom.chart, tflip, jf, o.diff);
      defm.push_back(pd.max_abs());
    }
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "antiholomorphy_verified",
      "declared structure-reversing maps have vanishing complex-linear part",
      sigp, o.tol));
  rep.checks.push_back(CheckRecord::from_samples(
      "antiholomorphic_defect",
      "structure-reversing maps are pluriharmonic for the sign-flipped target "
      "structure",
      defm, o.tol));

  // Negative control: a map that is neither structure-preserving nor
  // structure-reversing must show a defect far above tolerance, stable
  // under step refinement.
  {
    MapBundle b = build_map("mixed_nonholomorphic");
    ModelBundle dom = build_model(b.domain_model);
    ModelBundle tar = build_model(b.target_model);
    Vec p(4);
    p << 0.2, 0.1, -0.15, 0.25;
    MapJet jet = make_jet(b.map, dom.chart, tar.chart, p, o.diff);
    double v1 = pluriharmonic_defect(b.map, dom.chart, tar.chart, jet, o.diff)
                    .max_abs();
    DiffConfig half = o.diff;
    half.step *= 0.5;
    half.step_second *= 0.5;
    MapJet jet2 = make_jet(b.map, dom.chart, tar.chart, p, half);
    double v2 = pluriharmonic_defect(b.map, dom.chart, tar.chart, jet2, half)
                    .max_abs();
    CheckRecord c;
    c.name = "nonexample_detected";
    c.statement =
        "a mixed-type map shows a defect two orders above tolerance, stable "
        "under halving the step";
    c.tolerance = o.tol;
    c.samples = 2;
    c.max_residual = v1 > 100.0 * o.tol ? std::abs(v1 - v2) / v1 : 1.0;
    c.mean_residual = c.max_residual;
    c.pass = v1 > 100.0 * o.tol && std::abs(v1 - v2) <= 1e-4 * v1;
    c.detail = {{"defect", v1}, {"defect_half_step", v2}};
    rep.checks.push_back(c);
  }

  // Defect-versus-Nijenhuis identity on the case with nonvanishing domain
  // Nijenhuis tensor: both assembly paths agree and the two Nijenhuis terms
  // are individually nontrivial.
  {
    MapBundle b = build_map("identity_perturbed");
    ModelBundle dom = build_model(b.domain_model);
    ModelBundle tar = build_model(b.target_model);
    Rng rng(mix_seed(o.seed, 360));
    std::vector<double> res;
    double term_floor = 0.0, sig_pre = 0.0;
    for (int t = 0; t < 50; ++t) {
      Vec p = dom.chart.sample_many(rng, 1)[0];
      MapJet jet = make_jet(b.map, dom.chart, tar.chart, p, o.diff);
      sig_pre = std::max(sig_pre, holomorphy_residual(jet));
      Tensor3 pd = pluriharmonic_defect(b.map, dom.chart, tar.chart, jet, o.diff);
      Tensor3 nd = nijenhuis(dom.chart, p, o.diff);
      Tensor3 nt = nijenhuis(tar.chart, jet.q, o.diff);
      Tensor3 nf = defect_nijenhuis_form(jet, nd, nt);
      double r = 0.0;
      for (int c = 0; c < pd.dim0(); ++c)
        for (int i = 0; i < pd.dim1(); ++i)
          for (int j = 0; j < pd.dim1(); ++j)
            r = std::max(r, std::abs(pd(c, i, j) - nf(c, i, j)));
      res.push_back(r);
      term_floor = std::max(term_floor, nd.max_abs());
    }
    CheckRecord c = CheckRecord::from_samples(
        "defect_nijenhuis_identity",
        "for a structure-preserving map the defect equals twice the pushed "
        "Nijenhuis difference, with both terms individually nonzero",
        res, o.tol);
    c.pass = c.pass && sig_pre <= o.tol && term_floor > 1e-3;
    c.detail = {{"max_domain_nijenhuis", term_floor},
                {"holomorphy_precondition", sig_pre}};
    rep.checks.push_back(c);

    MapBundle fb = build_map("identity_flat");
    ModelBundle fd = build_model(fb.domain_model);
    std::vector<double> triv;
    Rng rng2(mix_seed(o.seed, 361));
    for (int t = 0; t < 20; ++t) {
      Vec p = fd.chart.sample_many(rng2, 1)[0];
      MapJet jet = make_jet(fb.map, fd.chart, fd.chart, p, o.diff);
      Tensor3 pd = pluriharmonic_defect(fb.map, fd.chart, fd.chart, jet, o.diff);
      Tensor3 nd = nijenhuis(fd.chart, p, o.diff);
      Tensor3 nf = defect_nijenhuis_form(jet, nd, nd);
      triv.push_back(std::max(pd.max_abs(), nf.max_abs()));
    }
    rep.checks.push_back(CheckRecord::from_samples(
        "defect_nijenhuis_trivial",
        "both assembly paths vanish identically on flat charts", triv, 1e-9));
  }
  return rep;
}

inline SuiteReport run_prop41(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "prop41";
  int n_maps = o.samples.value_or(100);

  std::vector<double> kres;
  for (const std::string& tn : kaehler_target_names()) {
    ModelBundle tb = build_model(tn);
    Rng rng(mix_seed(o.seed, 400));
    auto pts = tb.chart.sample_many(rng, 20);
    ClassificationFlags f = classify(tb.chart, pts, o.diff, o.tol);
    kres.push_back(f.kaehler ? f.r_kaehler : 1.0);
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "targets_verified_kaehler",
      "every target used below classifies as Kaehler", kres, o.tol));

  std::vector<double> res;
  for (int t = 0; t < n_maps; ++t) {
    Rng rng(mix_seed(o.seed, 410 + t));
    const auto& dn = hermitian_zoo_names()[t % hermitian_zoo_names().size()];
    const auto& tn = kaehler_target_names()[t % kaehler_target_names().size()];
    ModelBundle dom = build_model(dn);
    ModelBundle tar = build_model(tn);
    SmoothMap u = random_polynomial_map(rng, dom.chart.dim(), tar.chart.dim(),
                                        tn == "flat_complex" ? 1.0 : 0.5);
    for (int k = 0; k < 2; ++k) {
      Vec p = dom.chart.sample_many(rng, 1)[0];
      MapJet jet = make_jet(u, dom.chart, tar.chart, p, o.diff);
      res.push_back(
          kaehler_target_defect_gap_residual(u, dom.chart, tar.chart, jet, o.diff));
    }
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "defect_connection_gap",
      "canonical and Levi-Civita defects differ exactly by the differential "
      "applied to the domain gap form",
      res, o.tol));

  std::vector<double> asym, azero;
  {
    ModelBundle pb = build_model("perturbed_acs");
    Rng rng(mix_seed(o.seed, 470));
    for (int t = 0; t < 20; ++t) {
      Vec p = pb.chart.sample_many(rng, 1)[0];
      Tensor3 a = connection_gap_form(pb.chart, p, o.diff);
      double w = 0.0;
      for (int k = 0; k < a.dim0(); ++k)
        for (int i = 0; i < a.dim1(); ++i)
          for (int j = 0; j < a.dim1(); ++j)
            w = std::max(w, std::abs(a(k, i, j) - a(k, j, i)));
      asym.push_back(w);
    }
    for (const std::string& kn : {"flat_complex", "complex_hyperbolic"}) {
      ModelBundle kb = build_model(kn);
      Rng rng2(mix_seed(o.seed, 471));
      for (int t = 0; t < 20; ++t) {
        Vec p = kb.chart.sample_many(rng2, 1)[0];
        azero.push_back(connection_gap_form(kb.chart, p, o.diff).max_abs());
      }
    }
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "gap_form_symmetric", "the gap form is symmetric in its two arguments",
      asym, 1e-9));
  rep.checks.push_back(CheckRecord::from_samples(
      "gap_form_kaehler_zero", "the gap form vanishes on Kaehler charts", azero,
      o.tol));
  return rep;
}

inline SuiteReport run_prop42(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "prop42";
  int n_maps = o.samples.value_or(100);
  std::vector<double> res;
  for (int t = 0; t < n_maps; ++t) {
    Rng rng(mix_seed(o.seed, 500 + t));
    const auto& dn = hermitian_zoo_names()[t % hermitian_zoo_names().size()];
    const auto& tn = kaehler_target_names()[(t + 1) % kaehler_target_names().size()];
    ModelBundle dom = build_model(dn);
    ModelBundle tar = build_model(tn);
    SmoothMap u = random_polynomial_map(rng, dom.chart.dim(), tar.chart.dim(),
                                        tn == "flat_complex" ? 1.0 : 0.5);
    for (int k = 0; k < 2; ++k) {
      Vec p = dom.chart.sample_many(rng, 1)[0];
      MapJet jet = make_jet(u, dom.chart, tar.chart, p, o.diff);
      res.push_back(tension_gap_residual(u, dom.chart, tar.chart, jet, o.diff));
    }
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "tension_gap",
      "the two tension fields differ exactly by the differential applied to "
      "the domain torsion vector",
      res, o.tol));

  std::vector<double> named;
  {
    MapBundle b = build_map("conjugation_hopf_flat");
    ModelBundle dom = build_model(b.domain_model);
    ModelBundle tar = build_model(b.target_model);
    Rng rng(mix_seed(o.seed, 560));
    for (int t = 0; t < 50; ++t) {
      Vec p = dom.chart.sample_many(rng, 1)[0];
      MapJet jet = make_jet(b.map, dom.chart, tar.chart, p, o.diff);
      named.push_back(tension_gap_residual(b.map, dom.chart, tar.chart, jet, o.diff));
    }
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "tension_gap_nonparallel_domain",
      "the gap identity holds on a domain whose torsion vector is nonzero",
      named, o.tol));

  std::vector<double> flat;
  {
    MapBundle b = build_map("square_complex");
    ModelBundle dom = build_model(b.domain_model);
    Rng rng(mix_seed(o.seed, 561));
    for (int t = 0; t < 20; ++t) {
      Vec p = dom.chart.sample_many(rng, 1)[0];
      MapJet jet = make_jet(b.map, dom.chart, dom.chart, p, o.diff);
      Vec tt = tension_of(
          hessian_canonical(b.map, dom.chart, dom.chart, jet, o.diff), jet.gi);
      Vec tl = tension_of(
          hessian_levi_civita(b.map, dom.chart, dom.chart, jet, o.diff), jet.gi);
      flat.push_back((tt - tl).cwiseAbs().maxCoeff());
    }
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "tension_fields_agree_flat",
      "with a parallel domain structure the two tensions coincide", flat, 1e-8));
  return rep;
}

inline SuiteReport run_lemma44_46(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "lemma44_46";
  int per_map = o.samples.value_or(64);
  const std::vector<std::string> anti = {
      "conjugation_flat", "conjugation_ball_flat", "conjugation_hopf_flat",
      "conjugation_conformal_flat"};
  std::vector<double> codif, exter, hopf_lhs;
  int idx = 0;
  for (const std::string& name : anti) {
    MapBundle b = build_map(name);
    ModelBundle dom = build_model(b.domain_model);
    ModelBundle tar = build_model(b.target_model);
    Rng rng(mix_seed(o.seed, 600 + idx++));
    for (int t = 0; t < per_map; ++t) {
      Vec p = dom.chart.sample_many(rng, 1)[0];
      codif.push_back(
          sigma_codifferential_residual(b.map, dom.chart, tar.chart, p, o.diff));
      exter.push_back(
          sigma_exterior_residual(b.map, dom.chart, tar.chart, p, o.diff));
      if (name == "conjugation_hopf_flat") {
        FormDerivatives fdv = form_derivatives(FormKind::sigma_part, b.map,
                                               dom.chart, tar.chart, p, o.diff);
        hopf_lhs.push_back(fdv.exterior.max_abs());
      }
    }
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "codifferential_identity",
      "the codifferential of the conjugate-linear part equals that part "
      "applied to the torsion vector",
      codif, o.tol));
  rep.checks.push_back(CheckRecord::from_samples(
      "exterior_identity",
      "the exterior derivative of the conjugate-linear part factors through "
      "the Nijenhuis tensor",
      exter, o.tol));
  rep.checks.push_back(CheckRecord::from_samples(
      "exterior_vanishes_integrable",
      "on an integrable domain the exterior derivative side vanishes outright",
      hopf_lhs, o.tol));
  return rep;
}

inline SuiteReport run_lemma25_divergence(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "lemma25_divergence";
  int n_trials = o.samples.value_or(500);
  std::vector<double> res(n_trials);
  parallel_for(n_trials, o.threads, [&](int t) {
    Rng rng(mix_seed(o.seed, 700 + t));
    const auto& dn = hermitian_zoo_names()[t % hermitian_zoo_names().size()];
    std::string tn = (t % 2 == 0) ? "flat_complex" : "complex_hyperbolic";
    ModelBundle dom = build_model(dn);
    ModelBundle tar = build_model(tn);
    SmoothMap u = random_polynomial_map(rng, dom.chart.dim(), tar.chart.dim(),
                                        tn == "flat_complex" ? 1.0 : 0.5);
    Vec p = dom.chart.sample_many(rng, 1)[0];
    Vec x = unit_vector(rng, dom.chart.dim());
    FormKind kind = t % 3 == 0   ? FormKind::differential
                    : t % 3 == 1 ? FormKind::sigma_part
                                 : FormKind::sigma_prime_part;
    DivergenceCheck dc =
        divergence_identity_check(kind, u, dom.chart, tar.chart, p, x, o.diff);
    res[t] = dc.residual();
  });
  rep.checks.push_back(CheckRecord::from_samples(
      "divergence_identity",
      "the stress divergence pairs with the codifferential and contracted "
      "exterior derivative, with no hypotheses on the map",
      res, o.tol));

  std::vector<double> psd, trace, conj;
  {
    Rng rng(mix_seed(o.seed, 780));
    ModelBundle dom = build_model("flat_complex");
    ModelBundle tar = build_model("complex_hyperbolic");
    for (int t = 0; t < 100; ++t) {
      SmoothMap u = random_polynomial_map(rng, 4, 4, 0.5);
      Vec p = dom.chart.sample_many(rng, 1)[0];
      MapJet jet = make_jet(u, dom.chart, tar.chart, p, o.diff);
      Mat sigma = form_value(FormKind::sigma_part, jet);
      Mat s = stress_tensor(sigma, jet);
      Vec nu = unit_vector(rng, 4);
      psd.push_back(std::max(0.0, -nu.dot(s * nu)));
      double tr = (jet.gi * s).trace();
      double target = (jet.g.rows() / 2 - 1) * form_norm_sq(sigma, jet);
      trace.push_back(std::abs(tr - target) /
                      std::max(1.0, std::abs(target)));
    }
    MapBundle cb = build_map("conjugation_flat");
    ModelBundle fb = build_model("flat_complex");
    for (int t = 0; t < 20; ++t) {
      Vec p = fb.chart.sample_many(rng, 1)[0];
      MapJet jet = make_jet(cb.map, fb.chart, fb.chart, p, o.diff);
      Mat sigma = form_value(FormKind::sigma_part, jet);
      Mat s = stress_tensor(sigma, jet);
      conj.push_back((s - jet.g).cwiseAbs().maxCoeff());
    }
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "stress_nonnegative_diagonal",
      "the conjugate-part stress is nonnegative on unit directions", psd,
      1e-12));
  rep.checks.push_back(CheckRecord::from_samples(
      "stress_trace_identity",
      "the trace of the conjugate-part stress is (m-1) times its norm", trace,
      1e-10));
  rep.checks.push_back(CheckRecord::from_samples(
      "conjugation_stress_is_metric",
      "for the flat conjugation the conjugate-part stress equals the metric",
      conj, 1e-12));
  return rep;
}

inline SuiteReport run_lemma47_bound(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "lemma47_bound";
  int n_trials = o.samples.value_or(1000);
  std::vector<double> viol(n_trials), eq;
  int general_violations = 0, statement_range_violations = 0;
  ModelBundle fb = build_model("flat_complex");
  ModelBundle bb = build_model("complex_hyperbolic");
  for (int t = 0; t < n_trials; ++t) {
    Rng rng(mix_seed(o.seed, 800 + t));
    const ModelBundle& tar = (t % 2 == 0) ? fb : bb;
    SmoothMap u = random_polynomial_map(rng, 4, 4, t % 2 == 0 ? 1.0 : 0.5);
    Vec p = fb.chart.sample_many(rng, 1)[0];
    MapJet jet = make_jet(u, fb.chart, tar.chart, p, o.diff);
    std::vector<double> ev(4);
    for (double& e : ev) e = rng.uniform(0.05, 2.5);
    AdaptedBoundTrial trial = adapted_bound_trial(jet, ev);
    viol[t] = std::max(0.0, -trial.margin());
    if (t < 200) {
      AdaptedBoundTrial unit = adapted_bound_trial(jet, {1, 1, 1, 1});
      double target = 2.0 * (jet.g.rows() / 2 - 1) * unit.dbar_density;
      eq.push_back(std::abs(unit.inner - target) / std::max(1.0, target));
    }
    // Informational search: arbitrary symmetric H with its own sorted
    // eigenvalues fed to both the implemented range and the wider range.
    Mat r(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = rng.uniform(-1.0, 1.0);
    Mat hgen = 0.5 * (r + r.transpose()) + 2.5 * Mat::Identity(4, 4);
    Eigen::SelfAdjointEigenSolver<Mat> es(hgen);
    Mat sigma = form_value(FormKind::sigma_part, jet);
    Mat s = stress_tensor(sigma, jet);
    double inner = tensor2_inner(s, hgen, jet.gi);
    double dbar = 0.5 * form_norm_sq(sigma, jet);
    std::vector<double> lam(es.eigenvalues().data(), es.eigenvalues().data() + 4);
    std::sort(lam.begin(), lam.end());
    double bound_m1 = (lam[0] + lam[2]) * dbar;
    double bound_m = (lam[0] + lam[2] + lam[1] + lam[3]) * dbar;
    if (inner < bound_m1 - 1e-12) ++general_violations;
    if (inner < bound_m - 1e-12) ++statement_range_violations;
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "adapted_lower_bound",
      "the stress pairing dominates the two smallest adapted eigenvalue pairs "
      "times the conjugate energy",
      viol, 1e-10));
  rep.checks.push_back(CheckRecord::from_samples(
      "metric_equality_case",
      "pairing against the metric itself meets the bound with equality", eq,
      1e-10));

  // With all eigenvalues equal the wider eigenvalue range would demand
  // twice the actual pairing; exhibiting that gap certifies the implemented
  // range is the correct one.
  {
    Rng rng(mix_seed(o.seed, 880));
    MapBundle cb = build_map("conjugation_flat");
    Vec p = fb.chart.sample_many(rng, 1)[0];
    MapJet jet = make_jet(cb.map, fb.chart, fb.chart, p, o.diff);
    AdaptedBoundTrial unit = adapted_bound_trial(jet, {1, 1, 1, 1});
    double bound_wide = 4.0 * unit.dbar_density;
    CheckRecord c;
    c.name = "wider_range_fails";
    c.statement =
        "summing all eigenvalue pairs would overstate the bound; the gap is "
        "exhibited on the flat conjugation";
    c.tolerance = 1.0;
    c.samples = 1;
    c.max_residual = unit.inner < bound_wide - 1.0 ? 0.0 : 2.0;
    c.mean_residual = c.max_residual;
    c.pass = unit.inner < bound_wide - 1.0;
    c.detail = {{"pairing", unit.inner},
                {"wider_range_bound", bound_wide},
                {"general_h_violations_m1", general_violations},
                {"general_h_violations_m", statement_range_violations},
                {"general_h_trials", n_trials}};
    rep.checks.push_back(c);
  }
  return rep;
}

inline SuiteReport run_lemma45_comparison(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "lemma45_comparison";
  const std::vector<std::string> models = {
      "radial_flat", "radial_inverse_sq_positive", "radial_power_decay_positive",
      "radial_constant_negative", "radial_inverse_sq_negative"};
  std::vector<double> margins, gaps, riccati;
  nlohmann::json detail = nlohmann::json::object();
  for (const std::string& name : models) {
    ModelBundle mb = build_model(name);
    const RadialModel& model = *mb.radial;
    std::vector<double> radii = linspace(0.3, model.r_max() - 0.5, 20);
    auto rows = comparison_check(model, radii, o.diff);
    double worst = 0.0;
    for (const auto& row : rows) {
      margins.push_back(std::max(0.0, -row.margin));
      gaps.push_back(row.chart_gap);
      worst = std::min(worst, row.margin);
    }
    for (double r : radii) riccati.push_back(riccati_residual(model, r));
    detail[name] = worst;
  }
  CheckRecord cm = CheckRecord::from_samples(
      "shape_ratio_bound",
      "the radial shape ratio stays above its case bound at every sampled "
      "radius",
      margins, o.tol);
  cm.detail = detail;
  rep.checks.push_back(cm);
  rep.checks.push_back(CheckRecord::from_samples(
      "chart_recovery",
      "the distance Hessian computed from the chart recovers the shape ratio",
      gaps, o.tol));
  rep.checks.push_back(CheckRecord::from_samples(
      "curvature_consistency",
      "the warping profile satisfies its defining second-order equation",
      riccati, 1e-7));
  return rep;
}

inline SuiteReport run_lemma49_411_sums(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "lemma49_411_sums";
  struct Pair {
    const char* model;
    WeightKind weight;
  };
  const std::vector<Pair> pairs = {
      {"radial_flat", WeightKind::half_r_squared},
      {"radial_inverse_sq_positive", WeightKind::half_r_squared},
      {"radial_power_decay_positive", WeightKind::half_r_squared},
      {"radial_constant_negative", WeightKind::cosh_beta_r},
      {"radial_inverse_sq_negative", WeightKind::power_growth}};
  std::vector<double> margins, table;
  nlohmann::json detail = nlohmann::json::object();
  for (const auto& pr : pairs) {
    ModelBundle mb = build_model(pr.model);
    const RadialModel& model = *mb.radial;
    WeightFunction w;
    w.kind = pr.weight;
    w.beta = model.params().beta;
    w.A = model.params().growth_exponent();
    std::vector<double> radii = linspace(0.3, model.r_max() - 0.5, 20);
    double worst = 0.0;
    for (double r : radii) {
      PairSumResult ps = eigen_pair_sum(model, w, r);
      margins.push_back(std::max(0.0, ps.bound - ps.sum));
      worst = std::min(worst, ps.sum - ps.bound);
      if (pr.weight == WeightKind::half_r_squared) {
        CurveSpec cs;
        cs.regime = model.tag();
        cs.m = model.m();
        cs.par = model.params();
        table.push_back(std::abs(ps.bound - cs.growth_constant()));
      }
    }
    detail[pr.model] = worst;
  }
  CheckRecord cm = CheckRecord::from_samples(
      "weighted_pair_sum_bound",
      "the two smallest eigenvalue pairs of each weight Hessian dominate the "
      "case bound at every radius",
      margins, o.tol);
  cm.detail = detail;
  rep.checks.push_back(cm);
  rep.checks.push_back(CheckRecord::from_samples(
      "parabolic_weight_constant",
      "for the parabolic weight the bound is radius-independent and matches "
      "the tabulated growth constant",
      table, 1e-12));
  return rep;
}

struct CurveRun {
  MonotonicityCurve curve;
  SmoothMap map;
  PoleModel pole;
  Chart target;
};

inline CurveRun run_named_curve(const std::string& map_name, CurveSpec spec,
                                const std::vector<double>& radii,
                                const QuadratureOptions& q, const RunOptions& o,
                                std::uint64_t salt) {
  MapBundle b = build_map(map_name);
  ModelBundle dom = build_model(b.domain_model);
  ModelBundle tar = build_model(b.target_model);
  if (!dom.pole) throw ConfigError("domain model has no pole structure");
  Rng rng(mix_seed(o.seed, salt));
  CurveRun out{run_curve(b.map, *dom.pole, tar.chart, spec, radii, q, o.diff, rng),
               b.map, *dom.pole, tar.chart};
  return out;
}

inline SuiteReport run_thm410_412_monotonicity(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "thm410_412_monotonicity";
  QuadratureOptions q;

  // Negatively curved domain, structure-reversing map: the prototypical
  // nonconstant case of the ratio statement.
  {
    CurveSpec spec;
    spec.regime = RadialCase::constant_negative;
    spec.m = 2;
    spec.par.beta = 1.0;
    CurveRun cr = run_named_curve("conjugation_ball_flat", spec,
                                  linspace(0.2, 2.0, 20), q, o, 1100);
    CheckRecord hc;
    hc.name = "hyperbolic_hypotheses";
    hc.statement =
        "torsion, kernel containment, and the defect certify on the "
        "negatively curved domain";
    hc.tolerance = o.tol;
    hc.samples = 64;
    hc.max_residual = std::max(cr.curve.hypothesis.max_kernel_gap,
                               cr.curve.hypothesis.max_defect);
    hc.mean_residual = hc.max_residual;
    hc.pass = cr.curve.hypothesis.certified();
    rep.checks.push_back(hc);

    CheckRecord mc;
    mc.name = "hyperbolic_ratio_monotone";
    mc.statement =
        "the normalized partial energy ratio never decreases across the "
        "radius grid";
    mc.tolerance = o.tol;
    mc.samples = static_cast<long>(cr.curve.points.size());
    mc.max_residual = std::max(0.0, -cr.curve.worst_ratio_margin);
    mc.mean_residual = mc.max_residual;
    mc.pass = cr.curve.worst_ratio_margin >= -o.tol;
    mc.detail = curve_to_json(cr.curve);
    rep.checks.push_back(mc);

    CheckRecord ic;
    ic.name = "hyperbolic_growth_inequality";
    ic.statement =
        "the boundary term dominates the weighted volume term at every radius";
    ic.tolerance = o.tol;
    ic.samples = static_cast<long>(cr.curve.inequality.size());
    ic.max_residual = std::max(0.0, -cr.curve.worst_inequality_margin);
    ic.mean_residual = ic.max_residual;
    ic.pass = cr.curve.worst_inequality_margin >= -o.tol;
    rep.checks.push_back(ic);
  }

  // Flat conjugation: every quantity has a closed form, pinning the
  // quadrature and normalization conventions to four exact numbers.
  {
    CurveSpec spec;
    spec.regime = RadialCase::nonpositive;
    spec.m = 2;
    CurveRun cr = run_named_curve("conjugation_flat", spec,
                                  {0.25, 0.5, 1.0, 2.0}, q, o, 1101);
    const double pi2 = 9.869604401089358;
    std::vector<double> rel;
    for (const auto& pt : cr.curve.points) {
      double expect = pi2 * pt.r * pt.r;
      rel.push_back(std::abs(pt.ratio - expect) / expect);
    }
    rep.checks.push_back(CheckRecord::from_samples(
        "flat_ratio_closed_form",
        "the flat conjugation ratio equals pi^2 r^2 at every checked radius",
        rel, 1e-4));
    CheckRecord bi;
    bi.name = "flat_unit_ball_energy";
    bi.statement =
        "the conjugate energy of the unit ball equals pi^2 for the flat "
        "conjugation";
    bi.tolerance = 1e-3;
    bi.samples = 1;
    bi.max_residual = std::abs(cr.curve.points[2].weighted_integral - pi2);
    bi.mean_residual = bi.max_residual;
    bi.pass = bi.max_residual <= 1e-3;
    rep.checks.push_back(bi);
    CheckRecord mc;
    mc.name = "flat_ratio_monotone";
    mc.statement = "the flat conjugation ratio is non-decreasing";
    mc.tolerance = o.tol;
    mc.samples = static_cast<long>(cr.curve.points.size());
    mc.max_residual = std::max(0.0, -cr.curve.worst_ratio_margin);
    mc.mean_residual = mc.max_residual;
    mc.pass = cr.curve.worst_ratio_margin >= -o.tol;
    rep.checks.push_back(mc);
  }

  // Structure-preserving map: identically zero conjugate energy, the
  // degenerate end of the statement.
  {
    CurveSpec spec;
    spec.regime = RadialCase::nonpositive;
    spec.m = 2;
    CurveRun cr = run_named_curve("identity_flat", spec,
                                  linspace(0.25, 2.0, 8), q, o, 1102);
    std::vector<double> vals;
    for (const auto& pt : cr.curve.points)
      vals.push_back(std::abs(pt.weighted_integral));
    rep.checks.push_back(CheckRecord::from_samples(
        "holomorphic_zero_energy",
        "a structure-preserving map carries no conjugate energy at any radius",
        vals, 1e-12));
  }
  return rep;
}

inline SuiteReport run_thm413_annulus(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "thm413_annulus";
  QuadratureOptions q;
  CurveSpec spec;
  spec.regime = RadialCase::constant_negative;
  spec.m = 2;
  spec.par.beta = 1.0;

  std::vector<double> full_radii;
  for (int i = 1; i <= 20; ++i) full_radii.push_back(0.1 * i);
  CurveRun full = run_named_curve("conjugation_ball_flat", spec, full_radii, q,
                                  o, 1200);

  CurveSpec aspec = spec;
  aspec.annulus = true;
  aspec.inner_radius = 0.1;
  std::vector<double> ann_radii(full_radii.begin() + 1, full_radii.end());
  CurveRun ann = run_named_curve("conjugation_ball_flat", aspec, ann_radii, q,
                                 o, 1200);

  std::vector<double> consistency;
  double inner_mass = full.curve.points[0].weighted_integral;
  for (size_t k = 0; k < ann.curve.points.size(); ++k) {
    double full_val = full.curve.points[k + 1].weighted_integral;
    double ann_val = ann.curve.points[k].weighted_integral;
    consistency.push_back(std::abs(ann_val - (full_val - inner_mass)) /
                          std::max(1.0, std::abs(full_val)));
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "annulus_ball_consistency",
      "annulus integrals equal the difference of ball integrals on a shared "
      "radius grid",
      consistency, 1e-9));

  CheckRecord mc;
  mc.name = "annulus_ratio_monotone";
  mc.statement =
      "the annulus-normalized ratio never decreases across the radius grid";
  mc.tolerance = o.tol;
  mc.samples = static_cast<long>(ann.curve.points.size());
  mc.max_residual = std::max(0.0, -ann.curve.worst_ratio_margin);
  mc.mean_residual = mc.max_residual;
  mc.pass = ann.curve.worst_ratio_margin >= -o.tol;
  mc.detail = curve_to_json(ann.curve);
  rep.checks.push_back(mc);

  CheckRecord ic;
  ic.name = "annulus_growth_inequality";
  ic.statement =
      "the boundary term dominates the weighted annulus term at every radius";
  ic.tolerance = o.tol;
  ic.samples = static_cast<long>(ann.curve.inequality.size());
  ic.max_residual = std::max(0.0, -ann.curve.worst_inequality_margin);
  ic.mean_residual = ic.max_residual;
  ic.pass = ann.curve.worst_inequality_margin >= -o.tol;
  rep.checks.push_back(ic);
  return rep;
}

inline SuiteReport run_sec5_growth(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "sec5_growth";
  QuadratureOptions q;
  CurveSpec spec;
  spec.regime = RadialCase::nonpositive;
  spec.m = 2;
  std::vector<double> radii = linspace(0.25, 2.0, 12);

  {
    CurveRun cr = run_named_curve("identity_flat", spec, radii, q, o, 1300);
    Rng rng(mix_seed(o.seed, 1301));
    GrowthDiagnostic d = growth_diagnostic(cr.curve, cr.map, cr.pole,
                                           cr.target, rng, 200, o.diff);
    CheckRecord c;
    c.name = "subcritical_map_constant_part";
    c.statement =
        "a certified map with subcritical growth has identically vanishing "
        "conjugate energy";
    c.tolerance = 1e-9;
    c.samples = 200;
    c.max_residual = d.max_dbar_density;
    c.mean_residual = d.max_dbar_density;
    c.pass = d.energy_identically_zero && d.conclusion_checked &&
             d.max_dbar_density <= 1e-9;
    c.detail = {{"threshold", d.threshold},
                {"hypothesis_consistent", d.hypothesis_consistent}};
    rep.checks.push_back(c);
  }

  {
    CurveRun cr = run_named_curve("conjugation_flat", spec, radii, q, o, 1302);
    Rng rng(mix_seed(o.seed, 1303));
    GrowthDiagnostic d = growth_diagnostic(cr.curve, cr.map, cr.pole,
                                           cr.target, rng, 200, o.diff);
    CheckRecord c;
    c.name = "supercritical_map_flagged";
    c.statement =
        "the conjugation grows at rate four, above the threshold of two, so "
        "the growth hypothesis is reported violated and no conclusion drawn";
    c.tolerance = 0.1;
    c.samples = static_cast<long>(cr.curve.points.size());
    c.max_residual = std::abs(d.fitted_slope - 4.0);
    c.mean_residual = c.max_residual;
    c.pass = c.max_residual <= 0.1 && !d.hypothesis_consistent &&
             !d.conclusion_checked && std::abs(d.threshold - 2.0) <= 1e-12;
    c.detail = {{"fitted_slope", d.fitted_slope}, {"threshold", d.threshold}};
    rep.checks.push_back(c);
  }
  return rep;
}

inline SuiteReport run_classification_zoo(const RunOptions& o) {
  SuiteReport rep;
  rep.suite = "classification_zoo";
  int per_chart = o.samples.value_or(40);

  std::vector<double> flag_err, consist;
  nlohmann::json detail = nlohmann::json::object();
  int idx = 0;
  for (const std::string& name : hermitian_zoo_names()) {
    ModelBundle mb = build_model(name);
    Rng rng(mix_seed(o.seed, 1400 + idx++));
    auto pts = mb.chart.sample_many(rng, per_chart);
    ClassificationFlags f = classify(mb.chart, pts, o.diff, o.tol);
    std::set<std::string> expected(mb.expected_classes.begin(),
                                   mb.expected_classes.end());
    auto flag = [&](const char* key, bool got) {
      bool want = expected.count(key) > 0;
      if (got != want) flag_err.push_back(1.0);
    };
    flag("kaehler", f.kaehler);
    flag("almost_kaehler", f.almost_kaehler);
    flag("nearly_kaehler", f.nearly_kaehler);
    flag("quasi_kaehler", f.quasi_kaehler);
    flag("semi_kaehler", f.semi_kaehler);
    flag("hermitian", f.hermitian);
    consist.push_back(f.consistent() ? 0.0 : 1.0);
    detail[name] = classification_to_json(f);
  }
  CheckRecord fc = CheckRecord::from_samples(
      "expected_flags", "every chart classifies exactly as constructed",
      flag_err, 0.5);
  fc.samples = static_cast<long>(hermitian_zoo_names().size());
  fc.detail = detail;
  rep.checks.push_back(fc);
  rep.checks.push_back(CheckRecord::from_samples(
      "class_lattice_consistent",
      "no chart violates the inclusion structure of the classes", consist, 0.5));

  // Structure invariants of the perturbed construction.
  std::vector<double> inv, nonint;
  {
    ModelBundle pb = build_model("perturbed_acs");
    Rng rng(mix_seed(o.seed, 1450));
    double worst_n = 0.0;
    for (int t = 0; t < 50; ++t) {
      Vec p = pb.chart.sample_many(rng, 1)[0];
      Mat j = pb.chart.acs_at(p);
      Mat g = pb.chart.metric_at(p);
      int n = pb.chart.dim();
      inv.push_back((j * j + Mat::Identity(n, n)).cwiseAbs().maxCoeff());
      inv.push_back((j.transpose() * g * j - g).cwiseAbs().maxCoeff());
      worst_n = std::max(worst_n, nijenhuis(pb.chart, p, o.diff).max_abs());
    }
    nonint.push_back(worst_n > 100.0 * o.tol ? 0.0 : 1.0);
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "perturbed_chart_invariants",
      "the perturbed structure squares to minus one and preserves the metric",
      inv, 1e-12));
  rep.checks.push_back(CheckRecord::from_samples(
      "perturbed_noninteg",
      "the perturbed structure is genuinely non-integrable somewhere", nonint,
      0.5));

  // Conformal chart: the measured torsion vector against its closed form.
  {
    ModelBundle cb = build_model("conformal_deformation");
    ConformalProfile prof;
    Rng rng(mix_seed(o.seed, 1460));
    std::vector<double> res;
    for (int t = 0; t < 50; ++t) {
      double r = 0.2 + (2.5 - 0.2) * t / 49.0;
      Vec dir = unit_vector(rng, 4);
      Vec p = r * dir;
      Vec v = torsion_vector(cb.chart, p, o.diff);
      Mat g = cb.chart.metric_at(p);
      double measured = std::sqrt(v.dot(g * v));
      double phi = prof.value(r), dphi = prof.slope(r);
      double closed = 2.0 * (2 - 1) * std::abs(dphi) / (phi * phi);
      res.push_back(std::abs(measured - closed));
    }
    rep.checks.push_back(CheckRecord::from_samples(
        "conformal_torsion_closed_form",
        "the conformal chart's torsion vector length matches its closed form "
        "at every radius",
        res, 1e-4));
  }

  // Radial models: smooth pole and declared curvature bound.
  std::vector<double> pole_res, bound_res;
  for (const std::string& name :
       {"radial_flat", "radial_inverse_sq_positive", "radial_power_decay_positive",
        "radial_constant_negative", "radial_inverse_sq_negative"}) {
    ModelBundle mb = build_model(std::string(name));
    const RadialModel& model = *mb.radial;
    pole_res.push_back(std::abs(model.psi(0.0)));
    pole_res.push_back(std::abs(model.psi_slope(0.0) - 1.0));
    auto prof = model.curvature_profile();
    for (double r : linspace(0.3, model.r_max() - 0.5, 20)) {
      double k = -1.0, cap = 0.0;
      switch (model.tag()) {
        case RadialCase::nonpositive: k = prof(r); cap = 0.0; break;
        case RadialCase::inverse_sq_positive:
          k = prof(r);
          cap = model.params().b * model.params().b / (1.0 + r * r);
          break;
        case RadialCase::power_decay_positive:
          k = prof(r);
          cap = model.params().B /
                std::pow(1.0 + r * r, 1.0 + model.params().eps);
          break;
        case RadialCase::constant_negative:
          k = prof(r);
          cap = -model.params().beta * model.params().beta;
          break;
        case RadialCase::inverse_sq_negative:
          k = prof(r);
          cap = -model.params().a * model.params().a / (1.0 + r * r);
          break;
      }
      bound_res.push_back(std::max(0.0, k - cap));
    }
  }
  rep.checks.push_back(CheckRecord::from_samples(
      "radial_pole_smooth",
      "every warping profile vanishes at the pole with unit slope", pole_res,
      1e-9));
  rep.checks.push_back(CheckRecord::from_samples(
      "radial_declared_bound",
      "every declared curvature profile respects its case ceiling", bound_res,
      1e-12));

  // Config round-trips.
  {
    nlohmann::json j = {{"kind", "warped_radial"},
                        {"case", "constant_negative"},
                        {"beta", 1.0}};
    ModelBundle mb = model_from_json(j);
    double ok = (mb.radial && mb.radial->tag() == RadialCase::constant_negative)
                    ? 0.0
                    : 1.0;
    nlohmann::json jm = {{"name", "conjugation_flat"}};
    MapBundle b = map_from_json(jm);
    double ok2 = b.map.name == "conjugation_flat" ? 0.0 : 1.0;
    rep.checks.push_back(CheckRecord::from_samples(
        "config_round_trip",
        "model and map construction from configuration files works", {ok, ok2},
        0.5));
  }
  return rep;
}

inline SuiteReport run_suite(SuiteId id, const RunOptions& o) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  switch (id) {
    case SuiteId::connection_axioms: rep = run_connection_axioms(o); break;
    case SuiteId::lemma32: rep = run_lemma32(o); break;
    case SuiteId::theorem31: rep = run_theorem31(o); break;
    case SuiteId::prop41: rep = run_prop41(o); break;
    case SuiteId::prop42: rep = run_prop42(o); break;
    case SuiteId::lemma44_46: rep = run_lemma44_46(o); break;
    case SuiteId::lemma25_divergence: rep = run_lemma25_divergence(o); break;
    case SuiteId::lemma47_bound: rep = run_lemma47_bound(o); break;
    case SuiteId::lemma45_comparison: rep = run_lemma45_comparison(o); break;
    case SuiteId::lemma49_411_sums: rep = run_lemma49_411_sums(o); break;
    case SuiteId::thm410_412_monotonicity:
      rep = run_thm410_412_monotonicity(o);
      break;
    case SuiteId::thm413_annulus: rep = run_thm413_annulus(o); break;
    case SuiteId::sec5_growth: rep = run_sec5_growth(o); break;
    case SuiteId::classification_zoo: rep = run_classification_zoo(o); break;
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

// Which library operations each suite exercises, by call graph. The union
// over all suites plus the harness itself must equal the full registry; a
// dedicated test enforces that, so adding an operation without wiring it
// into some suite fails the build.
inline const std::map<std::string, std::vector<std::string>>& suite_coverage() {
  static const std::map<std::string, std::vector<std::string>> cov = {
      {"connection_axioms",
       {"build_model", "partial_derivative", "christoffel", "nabla_acs",
        "second_canonical", "connection_torsion", "torsion_invariant_part",
        "torsion_anti_invariant_02", "metric_parallel_residual",
        "acs_parallel_residual", "nijenhuis"}},
      {"lemma32", {"build_model", "nijenhuis"}},
      {"theorem31",
       {"build_map", "make_jet", "holomorphy_residual",
        "antiholomorphy_residual", "second_partial", "hessian_canonical",
        "pluriharmonic_defect", "defect_nijenhuis_form", "tension_of",
        "nijenhuis"}},
      {"prop41",
       {"build_map", "random_polynomial_map", "classify", "fundamental_form",
        "fundamental_form_exterior_d", "connection_gap_form",
        "kaehler_target_defect_gap_residual", "hessian_levi_civita",
        "hessian_canonical", "make_jet"}},
      {"prop42",
       {"random_polynomial_map", "tension_gap_residual", "tension_of",
        "torsion_vector", "delta_acs", "hessian_levi_civita",
        "hessian_canonical"}},
      {"lemma44_46",
       {"build_map", "form_derivatives", "sigma_codifferential_residual",
        "sigma_exterior_residual", "split_differential", "torsion_vector"}},
      {"lemma25_divergence",
       {"random_polynomial_map", "divergence_identity_check", "stress_tensor",
        "form_derivatives", "split_differential", "energy_density",
        "dbar_energy_density", "del_energy_density", "make_jet"}},
      {"lemma47_bound",
       {"adapted_symmetric_tensor", "adapted_bound_trial", "stress_tensor",
        "split_differential", "make_jet"}},
      {"lemma45_comparison",
       {"build_model", "warping_function", "distance_hessian",
        "distance_hessian_spectrum", "comparison_check", "riccati_residual"}},
      {"lemma49_411_sums",
       {"build_model", "warping_function", "eigen_pair_sum"}},
      {"thm410_412_monotonicity",
       {"build_map", "measure_hypotheses", "run_curve",
        "cumulative_ball_quadrature", "ball_quadrature", "boundary_quadrature",
        "sphere_rule", "dbar_energy_density"}},
      {"thm413_annulus",
       {"run_curve", "cumulative_ball_quadrature", "boundary_quadrature"}},
      {"sec5_growth",
       {"run_curve", "fit_log_slope", "growth_diagnostic",
        "measure_hypotheses"}},
      {"classification_zoo",
       {"build_model", "classify", "nijenhuis", "torsion_vector", "delta_acs",
        "model_from_json", "map_from_json", "warping_function"}},
      {"harness", {"run_suite", "emit_report"}},
  };
  return cov;
}

inline std::vector<std::string> all_operations() {
  return {"partial_derivative",
          "second_partial",
          "ball_quadrature",
          "cumulative_ball_quadrature",
          "boundary_quadrature",
          "sphere_rule",
          "christoffel",
          "nabla_acs",
          "nijenhuis",
          "second_canonical",
          "connection_torsion",
          "torsion_invariant_part",
          "torsion_anti_invariant_02",
          "metric_parallel_residual",
          "acs_parallel_residual",
          "delta_acs",
          "torsion_vector",
          "fundamental_form",
          "fundamental_form_exterior_d",
          "classify",
          "make_jet",
          "holomorphy_residual",
          "antiholomorphy_residual",
          "split_differential",
          "energy_density",
          "dbar_energy_density",
          "del_energy_density",
          "hessian_levi_civita",
          "hessian_canonical",
          "pluriharmonic_defect",
          "defect_nijenhuis_form",
          "connection_gap_form",
          "kaehler_target_defect_gap_residual",
          "tension_gap_residual",
          "tension_of",
          "stress_tensor",
          "form_derivatives",
          "divergence_identity_check",
          "sigma_codifferential_residual",
          "sigma_exterior_residual",
          "adapted_symmetric_tensor",
          "adapted_bound_trial",
          "warping_function",
          "distance_hessian",
          "distance_hessian_spectrum",
          "comparison_check",
          "riccati_residual",
          "eigen_pair_sum",
          "measure_hypotheses",
          "run_curve",
          "fit_log_slope",
          "growth_diagnostic",
          "build_model",
          "build_map",
          "random_polynomial_map",
          "model_from_json",
          "map_from_json",
          "run_suite",
          "emit_report"};
}

}  // namespace ahm
