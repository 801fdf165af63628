// Classifies every built-in Hermitian model chart and prints which structure
// classes hold, with the residual behind each decision. Charts constructed to
// land in a class must report it together with everything the class implies.

#include "ahm/geometry.hpp"
#include "ahm/models.hpp"

#include <cstdio>

using namespace ahm;

int main() {
  DiffConfig cfg;
  std::printf("%-22s %-3s %-3s %-3s %-3s %-3s %-3s  worst failing residual\n",
              "model", "K", "AK", "NK", "QK", "SK", "H");
  for (const auto& name : hermitian_zoo_names()) {
    ModelBundle mb = build_model(name);
    Rng rng(5);
    auto pts = mb.chart.sample_many(rng, 30);
    ClassificationFlags f = classify(mb.chart, pts, cfg, 1e-6);
    double worst = 0.0;
    auto mark = [&](bool flag, double residual) {
      if (!flag) worst = std::max(worst, residual);
      return flag ? "yes" : ".";
    };
    // Marks must all run before worst is read, so no single printf call.
    const char* cols[6] = {mark(f.kaehler, f.r_kaehler),
                           mark(f.almost_kaehler, f.r_almost_kaehler),
                           mark(f.nearly_kaehler, f.r_nearly_kaehler),
                           mark(f.quasi_kaehler, f.r_quasi_kaehler),
                           mark(f.semi_kaehler, f.r_semi_kaehler),
                           mark(f.hermitian, f.r_hermitian)};
    std::printf("%-22s %-3s %-3s %-3s %-3s %-3s %-3s  %.3e\n", name.c_str(),
                cols[0], cols[1], cols[2], cols[3], cols[4], cols[5], worst);
    if (!f.consistent())
      for (const auto& v : f.implication_violations)
        std::printf("  inconsistent: %s\n", v.c_str());
  }
  return 0;
}
