#pragma once

#include "knot4/geom.hpp"
#include "knot4/patch.hpp"
#include "knot4/grid.hpp"

namespace knot4 {

// Divisor floor for the Laplace transforms.
inline constexpr double kLaplaceEps = 1e-10;

struct NetSample {
  double u = 0, v = 0;
  double gamma112 = 0;  // Gamma^1_12
  double gamma212 = 0;  // Gamma^2_12
  double defect = 0;    // |Xuv - Gamma^1_12 Xu - Gamma^2_12 Xv|
  double h_inv = 0;     // d_u Gamma^1_12 - Gamma^1_12 Gamma^2_12
  double k_inv = 0;     // d_v Gamma^2_12 - Gamma^1_12 Gamma^2_12
};

struct ConjugacyReport {
  bool conjugate = false;
  double max_defect = 0;
  double at_u = 0, at_v = 0;
  std::size_t samples = 0;
  std::size_t skipped = 0;
};

// d/du Gamma^1_12 and d/dv Gamma^2_12 from the second derivatives of the metric.
double d_u_gamma112(const FirstFormJet& ff, const Christoffel& ch);
double d_v_gamma212(const FirstFormJet& ff, const Christoffel& ch);

NetSample net_sample(const PatchJet& jet, const FirstFormJet& ff, const Christoffel& ch);

// Max defect over the grid; conjugate iff it stays below tol. Degenerate points are skipped.
ConjugacyReport is_conjugate(const SurfaceSpec& spec, const GridConfig& grid, double tol, unsigned threads = 1);

// X - Xu / Gamma^2_12. Throws DegenerateNet if |Gamma^2_12| <= kLaplaceEps.
AmbientVec laplace_minus(const PatchJet& jet, const Christoffel& ch);

// X - Xv / Gamma^1_12. Throws DegenerateNet if |Gamma^1_12| <= kLaplaceEps.
AmbientVec laplace_plus(const PatchJet& jet, const Christoffel& ch);

// Sine of the angle between d/du X_1 (central difference over du) and Xv at (u, v).
double prop6_defect(const SurfaceSpec& spec, double u, double v, double du);

}  // namespace knot4
