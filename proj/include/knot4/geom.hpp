#pragma once

#include <optional>

#include "knot4/patch.hpp"
#include "knot4/vec4.hpp"

namespace knot4 {

// E, F, G with all first and second parameter derivatives; W2 = EG - F^2.
struct FirstFormJet {
  double E = 0, F = 0, G = 0, W2 = 0;
  double E_u = 0, E_v = 0, F_u = 0, F_v = 0, G_u = 0, G_v = 0;
  double E_uu = 0, E_uv = 0, E_vv = 0;
  double F_uu = 0, F_uv = 0, F_vv = 0;
  double G_uu = 0, G_uv = 0, G_vv = 0;

  double W2_u() const noexcept { return E_u * G + E * G_u - 2.0 * F * F_u; }
  double W2_v() const noexcept { return E_v * G + E * G_v - 2.0 * F * F_v; }
};

// Gamma^k_ij stored as g<k><i><j>, one field per unordered lower pair.
struct Christoffel {
  double g111 = 0, g112 = 0, g122 = 0;
  double g211 = 0, g212 = 0, g222 = 0;
};

// h(Xu,Xu), h(Xu,Xv), h(Xv,Xv): normal components of the second partials.
struct SecondForm {
  AmbientVec huu, huv, hvv;
};

struct CurvatureSample {
  double K_ext = 0;               // Gauss equation
  double K_int = 0;               // metric-only formula, printed normalization
  std::optional<double> K_rot;    // -(1/2W)(G_u/W)_u, E = 1 and v-independent metric only
  AmbientVec H_vec;
  double H2 = 0;
};

// Throws DegenerateMetric when W2 <= 1e-14 (E G + 1).
FirstFormJet first_form(const PatchJet& jet);

Christoffel christoffel(const FirstFormJet& ff);

// X_ij minus its tangential part Gamma^1_ij Xu + Gamma^2_ij Xv.
SecondForm second_form(const PatchJet& jet, const Christoffel& ch);

CurvatureSample curvature(const FirstFormJet& ff, const SecondForm& sff);

// (<huu,hvv> - <huv,huv>) / W2.
double gauss_extrinsic(const FirstFormJet& ff, const SecondForm& sff);

// Metric-only formula
//   K = -det[[E,E_u,E_v],[F,F_u,F_v],[G,G_u,G_v]] / (4 W^2)
//       - (1/2W) [ ((E_v - F_u)/W)_v - ((F_v - G_u)/W)_u ]
// evaluated literally. The determinant term is normally divided by 4 W^4; the
// two agree whenever the determinant vanishes, which it does identically for
// v-independent metrics (every rotational surface here).
double gauss_intrinsic(const FirstFormJet& ff);

// Same formula with the 4 W^4 normalization; valid for arbitrary metrics.
double gauss_brioschi(const FirstFormJet& ff);

// -(1/2W) (G_u/W)_u. Throws PreconditionError unless |E-1| <= 1e-9 and the
// v-derivatives of E, F, G vanish to 1e-9.
double gauss_rotational(const FirstFormJet& ff);

// (E hvv - 2F huv + G huu) / (2 W2).
AmbientVec mean_curvature_vector(const FirstFormJet& ff, const SecondForm& sff);

}  // namespace knot4
