// Command line front end. Verbs:
//   verify    run named verification suites and emit a report
//   classify  evaluate structure-class flags for one model chart
//   curve     compute a normalized growth curve for a named map
//   zoo       list built-in models, maps, and suites
// Exit status: 0 on success, 1 when a check fails, 2 on configuration errors.

#include "ahm/report.hpp"
#include "ahm/suites.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace ahm;

namespace {

std::vector<double> parse_radii(const std::string& s) {
  double a = 0.0, b = 0.0;
  int n = 0;
  if (std::sscanf(s.c_str(), "%lf:%lf:%d", &a, &b, &n) != 3 || n < 2 ||
      !(a > 0.0) || !(b > a))
    throw ConfigError(
        "radii must be start:stop:count with 0 < start < stop and count >= 2");
  std::vector<double> r(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) r[i] = a + (b - a) * i / (n - 1);
  return r;
}

RadialCase case_from_string(const std::string& tag) {
  if (tag == "flat" || tag == "nonpositive") return RadialCase::nonpositive;
  if (tag == "inverse_sq_positive") return RadialCase::inverse_sq_positive;
  if (tag == "power_decay_positive") return RadialCase::power_decay_positive;
  if (tag == "constant_negative") return RadialCase::constant_negative;
  if (tag == "inverse_sq_negative") return RadialCase::inverse_sq_negative;
  throw ConfigError("unknown curvature case '" + tag + "'");
}

void write_out(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ConfigError("cannot open output file '" + out + "'");
  f << text;
}

void require_format(const std::string& format,
                    const std::vector<std::string>& allowed) {
  for (const auto& a : allowed)
    if (format == a) return;
  std::string msg = "format '" + format + "' not supported here; use";
  for (const auto& a : allowed) msg += " " + a;
  throw ConfigError(msg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification harness for almost Hermitian map geometry"};
  app.require_subcommand(1);

  std::uint64_t seed = RunOptions{}.seed;
  double tol = 1e-6;
  double fd_step = DiffConfig{}.step;
  int threads = 1;
  int samples = 0;
  bool timings = false;
  std::string format = "text";
  std::string out;
  std::vector<std::string> suites;
  std::string model_name;
  std::string map_name;
  std::string case_tag = "flat";
  std::string radii_spec = "0.25:2.0:8";
  double inner = 0.0;
  int rc = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "base random seed");
    cmd->add_option("--tol", tol, "primary tolerance");
    cmd->add_option("--fd-step", fd_step, "finite difference step");
    cmd->add_option("--format", format, "output format");
    cmd->add_option("--out", out, "write output to this file instead of stdout");
  };

  CLI::App* verify =
      app.add_subcommand("verify", "run verification suites and report");
  verify->add_option("--suite", suites,
                     "suite names to run (repeatable; default all)");
  verify->add_option("--threads", threads, "worker threads for sampling loops");
  verify->add_option("--samples", samples,
                     "reduced sample count for quick runs");
  verify->add_flag("--timings", timings, "include wall times in the report");
  add_common(verify);
  verify->callback([&]() {
    require_format(format, {"text", "json"});
    RunOptions o;
    o.seed = seed;
    o.tol = tol;
    o.diff.step = fd_step;
    o.threads = threads;
    o.timings = timings;
    if (samples > 0) o.samples = samples;
    std::vector<SuiteId> ids;
    if (suites.empty())
      for (const auto& [id, name] : suite_table()) ids.push_back(id);
    else
      for (const auto& s : suites) ids.push_back(suite_from_string(s));
    VerificationReport rep;
    rep.seed = o.seed;
    rep.threads = o.threads;
    rep.diff = o.diff;
    rep.include_timings = timings;
    for (SuiteId id : ids) rep.suites.push_back(run_suite(id, o));
    write_out(out, emit_report(rep, format));
    rc = rep.pass() ? 0 : 1;
  });

  CLI::App* cls =
      app.add_subcommand("classify", "structure-class flags for one model");
  cls->add_option("--model", model_name, "model chart name")->required();
  cls->add_option("--samples", samples, "number of sample points (default 40)");
  add_common(cls);
  cls->callback([&]() {
    require_format(format, {"text", "json"});
    ModelBundle mb = build_model(model_name);
    DiffConfig cfg;
    cfg.step = fd_step;
    Rng rng(seed);
    auto pts = mb.chart.sample_many(rng, samples > 0 ? samples : 40);
    ClassificationFlags f = classify(mb.chart, pts, cfg, tol);
    if (format == "json") {
      nlohmann::json j = classification_to_json(f);
      j["model"] = model_name;
      j["points"] = pts.size();
      write_out(out, j.dump(2) + "\n");
    } else {
      std::ostringstream text;
      text << "model " << model_name << " (" << pts.size() << " points, tol "
           << format_double(tol) << ")\n";
      auto row = [&](const char* key, bool flag, double residual) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "  %-16s %-3s residual %.3e\n", key,
                      flag ? "yes" : "no", residual);
        text << buf;
      };
      row("kaehler", f.kaehler, f.r_kaehler);
      row("almost_kaehler", f.almost_kaehler, f.r_almost_kaehler);
      row("nearly_kaehler", f.nearly_kaehler, f.r_nearly_kaehler);
      row("quasi_kaehler", f.quasi_kaehler, f.r_quasi_kaehler);
      row("semi_kaehler", f.semi_kaehler, f.r_semi_kaehler);
      row("hermitian", f.hermitian, f.r_hermitian);
      text << "  lattice consistent: " << (f.consistent() ? "yes" : "no")
           << "\n";
      for (const auto& v : f.implication_violations)
        text << "  violation: " << v << "\n";
      write_out(out, text.str());
    }
    rc = f.consistent() ? 0 : 1;
  });

  CLI::App* curve =
      app.add_subcommand("curve", "normalized growth curve for a named map");
  curve->add_option("--map", map_name, "map name")->required();
  curve->add_option("--model", model_name,
                    "domain model with distance data (default: map's domain)");
  curve->add_option("--case", case_tag,
                    "curvature case: flat, inverse_sq_positive, "
                    "power_decay_positive, constant_negative, "
                    "inverse_sq_negative");
  curve->add_option("--radii", radii_spec, "radius grid start:stop:count");
  curve->add_option("--inner", inner,
                    "annulus inner radius (0 means centered balls)");
  add_common(curve);
  curve->callback([&]() {
    require_format(format, {"text", "json", "csv"});
    MapBundle mb = build_map(map_name);
    std::string dom_name = model_name.empty() ? mb.domain_model : model_name;
    ModelBundle dom = build_model(dom_name);
    if (!dom.pole)
      throw ConfigError("model '" + dom_name +
                        "' has no distance data for ball integrals");
    ModelBundle tar = build_model(mb.target_model);
    CurveSpec spec;
    spec.regime = case_from_string(case_tag);
    spec.m = dom.chart.m > 0 ? dom.chart.m : 2;
    if (inner > 0.0) {
      spec.annulus = true;
      spec.inner_radius = inner;
    }
    std::vector<double> radii = parse_radii(radii_spec);
    QuadratureOptions q;
    DiffConfig cfg;
    cfg.step = fd_step;
    Rng rng(seed);
    MonotonicityCurve c =
        run_curve(mb.map, *dom.pole, tar.chart, spec, radii, q, cfg, rng);
    if (format == "csv") {
      write_out(out, curve_to_csv(c));
    } else if (format == "json") {
      nlohmann::json j = curve_to_json(c);
      j["map"] = map_name;
      j["domain_model"] = dom_name;
      j["target_model"] = mb.target_model;
      write_out(out, j.dump(2) + "\n");
    } else {
      std::ostringstream text;
      text << "map " << map_name << " on " << dom_name << " ("
           << to_string(spec.regime) << " case)\n";
      text << "  hypothesis constant " << format_double(c.spec.c_torsion)
           << ", exponent " << format_double(c.spec.normalizer_exponent())
           << ", certified " << (c.hypothesis.certified() ? "yes" : "no")
           << "\n";
      char buf[128];
      text << "  r         ratio         margin\n";
      for (const auto& p : c.points) {
        std::snprintf(buf, sizeof(buf), "  %-8.4g  %-12.6g  %.3e\n", p.r,
                      p.ratio, p.margin);
        text << buf;
      }
      std::snprintf(buf, sizeof(buf),
                    "  worst ratio margin %.3e, worst inequality margin %.3e\n",
                    c.worst_ratio_margin, c.worst_inequality_margin);
      text << buf;
      write_out(out, text.str());
    }
    bool ok = c.hypothesis.certified() && c.worst_ratio_margin >= -tol &&
              c.worst_inequality_margin >= -tol;
    rc = ok ? 0 : 1;
  });

  CLI::App* zoo = app.add_subcommand("zoo", "list built-in models and maps");
  add_common(zoo);
  zoo->callback([&]() {
    require_format(format, {"text", "json"});
    if (format == "json") {
      nlohmann::json j;
      nlohmann::json jm = nlohmann::json::array();
      for (const auto& name : model_names()) {
        ModelBundle b = build_model(name);
        jm.push_back({{"name", name},
                      {"hermitian", b.hermitian},
                      {"expected_classes", b.expected_classes},
                      {"has_distance_data", b.pole.has_value()}});
      }
      j["models"] = jm;
      nlohmann::json ju = nlohmann::json::array();
      for (const auto& name : map_names()) {
        MapBundle b = build_map(name);
        ju.push_back({{"name", name},
                      {"domain", b.domain_model},
                      {"target", b.target_model},
                      {"holomorphic", b.map.declared_holomorphic},
                      {"antiholomorphic", b.map.declared_antiholomorphic}});
      }
      j["maps"] = ju;
      j["suites"] = suite_names();
      write_out(out, j.dump(2) + "\n");
    } else {
      std::ostringstream text;
      text << "models:\n";
      for (const auto& name : model_names()) {
        ModelBundle b = build_model(name);
        text << "  " << name;
        if (!b.hermitian) text << " (metric only)";
        if (b.pole) text << " [distance data]";
        text << "\n";
      }
      text << "maps:\n";
      for (const auto& name : map_names()) {
        MapBundle b = build_map(name);
        text << "  " << name << ": " << b.domain_model << " -> "
             << b.target_model << "\n";
      }
      text << "suites:\n";
      for (const auto& name : suite_names()) text << "  " << name << "\n";
      write_out(out, text.str());
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
