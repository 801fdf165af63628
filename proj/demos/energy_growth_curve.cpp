// Tracks the normalized antiholomorphic energy of the coordinate conjugation
// map over balls of growing radius, once on the flat model and once on the
// bounded negative curvature model. The normalized ratio column must never
// decrease. In the flat case it equals (pi r)^2 exactly, which makes a good
// eyeball check of the quadrature.

#include "ahm/monotonicity.hpp"
#include "ahm/models.hpp"

#include <cstdio>

using namespace ahm;

namespace {

void show(const char* title, const MonotonicityCurve& c, bool flat) {
  std::printf("%s\n", title);
  std::printf("  hypothesis certified: %s, measured constant %.3e\n",
              c.hypothesis.certified() ? "yes" : "no", c.spec.c_torsion);
  std::printf("  %-8s %-14s %-14s %s\n", "r", "ratio", "margin",
              flat ? "(pi r)^2" : "");
  for (const auto& p : c.points) {
    if (flat)
      std::printf("  %-8.3f %-14.8g %-14.3e %.8g\n", p.r, p.ratio, p.margin,
                  9.869604401089358 * p.r * p.r);
    else
      std::printf("  %-8.3f %-14.8g %-14.3e\n", p.r, p.ratio, p.margin);
  }
  std::printf("  worst ratio margin %.3e\n\n", c.worst_ratio_margin);
}

}  // namespace

int main() {
  QuadratureOptions q;
  DiffConfig cfg;
  std::vector<double> radii;
  for (int i = 1; i <= 8; ++i) radii.push_back(0.25 * i);

  {
    MapBundle conj = build_map("conjugation_flat");
    ModelBundle dom = build_model("flat_complex");
    ModelBundle tar = build_model(conj.target_model);
    CurveSpec spec;
    spec.regime = RadialCase::nonpositive;
    Rng rng(31);
    MonotonicityCurve c =
        run_curve(conj.map, *dom.pole, tar.chart, spec, radii, q, cfg, rng);
    show("conjugation on the flat model", c, true);
  }

  {
    MapBundle conj = build_map("conjugation_ball_flat");
    ModelBundle dom = build_model("complex_hyperbolic");
    ModelBundle tar = build_model(conj.target_model);
    CurveSpec spec;
    spec.regime = RadialCase::constant_negative;
    Rng rng(32);
    MonotonicityCurve c =
        run_curve(conj.map, *dom.pole, tar.chart, spec, radii, q, cfg, rng);
    show("conjugation on the bounded negative curvature model", c, false);
  }
  return 0;
}
