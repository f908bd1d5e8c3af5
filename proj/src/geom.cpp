#include "knot4/geom.hpp"

#include <cmath>

#include "knot4/errors.hpp"

namespace knot4 {

namespace {

constexpr double kRotationalTol = 1e-9;

bool rotational_preconditions(const FirstFormJet& ff) {
  return std::fabs(ff.E - 1.0) <= kRotationalTol &&
         std::fabs(ff.E_v) + std::fabs(ff.F_v) + std::fabs(ff.G_v) <= kRotationalTol;
}

}  // namespace

FirstFormJet first_form(const PatchJet& j) {
  FirstFormJet f;
  f.E = dot(j.Xu, j.Xu);
  f.F = dot(j.Xu, j.Xv);
  f.G = dot(j.Xv, j.Xv);
  f.W2 = f.E * f.G - f.F * f.F;
  if (!(f.W2 > 1e-14 * (f.E * f.G + 1.0))) {
    throw DegenerateMetric("degenerate metric: W^2 = " + std::to_string(f.W2) + " at (u, v) = (" +
                           std::to_string(j.u) + ", " + std::to_string(j.v) + ")");
  }

  f.E_u = 2.0 * dot(j.Xuu, j.Xu);
  f.E_v = 2.0 * dot(j.Xuv, j.Xu);
  f.F_u = dot(j.Xuu, j.Xv) + dot(j.Xu, j.Xuv);
  f.F_v = dot(j.Xuv, j.Xv) + dot(j.Xu, j.Xvv);
  f.G_u = 2.0 * dot(j.Xuv, j.Xv);
  f.G_v = 2.0 * dot(j.Xvv, j.Xv);

  f.E_uu = 2.0 * (dot(j.Xuuu, j.Xu) + dot(j.Xuu, j.Xuu));
  f.E_uv = 2.0 * (dot(j.Xuuv, j.Xu) + dot(j.Xuu, j.Xuv));
  f.E_vv = 2.0 * (dot(j.Xuvv, j.Xu) + dot(j.Xuv, j.Xuv));
  f.F_uu = dot(j.Xuuu, j.Xv) + 2.0 * dot(j.Xuu, j.Xuv) + dot(j.Xu, j.Xuuv);
  f.F_uv = dot(j.Xuuv, j.Xv) + dot(j.Xuu, j.Xvv) + dot(j.Xuv, j.Xuv) + dot(j.Xu, j.Xuvv);
  f.F_vv = dot(j.Xuvv, j.Xv) + 2.0 * dot(j.Xuv, j.Xvv) + dot(j.Xu, j.Xvvv);
  f.G_uu = 2.0 * (dot(j.Xuuv, j.Xv) + dot(j.Xuv, j.Xuv));
  f.G_uv = 2.0 * (dot(j.Xuvv, j.Xv) + dot(j.Xuv, j.Xvv));
  f.G_vv = 2.0 * (dot(j.Xvvv, j.Xv) + dot(j.Xvv, j.Xvv));
  return f;
}

Christoffel christoffel(const FirstFormJet& f) {
  if (!(f.W2 > 0.0)) throw DegenerateMetric("degenerate metric");
  const double d = 2.0 * f.W2;
  Christoffel c;
  c.g111 = (f.G * f.E_u - 2.0 * f.F * f.F_u + f.F * f.E_v) / d;
  c.g211 = (2.0 * f.E * f.F_u - f.E * f.E_v - f.F * f.E_u) / d;
  c.g112 = (f.G * f.E_v - f.F * f.G_u) / d;
  c.g212 = (f.E * f.G_u - f.F * f.E_v) / d;
  c.g122 = (2.0 * f.G * f.F_v - f.G * f.G_u - f.F * f.G_v) / d;
  c.g222 = (f.E * f.G_v - 2.0 * f.F * f.F_v + f.F * f.G_u) / d;
  return c;
}

SecondForm second_form(const PatchJet& j, const Christoffel& c) {
  return {j.Xuu - c.g111 * j.Xu - c.g211 * j.Xv,
          j.Xuv - c.g112 * j.Xu - c.g212 * j.Xv,
          j.Xvv - c.g122 * j.Xu - c.g222 * j.Xv};
}

double gauss_extrinsic(const FirstFormJet& f, const SecondForm& s) {
  return (dot(s.huu, s.hvv) - dot(s.huv, s.huv)) / f.W2;
}

namespace {

double metric_determinant(const FirstFormJet& f) {
  return f.E * (f.F_u * f.G_v - f.F_v * f.G_u) - f.E_u * (f.F * f.G_v - f.F_v * f.G) +
         f.E_v * (f.F * f.G_u - f.F_u * f.G);
}

// ((E_v - F_u)/W)_v - ((F_v - G_u)/W)_u
double divergence_term(const FirstFormJet& f) {
  const double W = std::sqrt(f.W2);
  const double W_u = f.W2_u() / (2.0 * W);
  const double W_v = f.W2_v() / (2.0 * W);
  const double a = f.E_v - f.F_u;
  const double b = f.F_v - f.G_u;
  const double a_v = f.E_vv - f.F_uv;
  const double b_u = f.F_uv - f.G_uu;
  return (a_v / W - a * W_v / f.W2) - (b_u / W - b * W_u / f.W2);
}

}  // namespace

double gauss_intrinsic(const FirstFormJet& f) {
  const double W = std::sqrt(f.W2);
  return -metric_determinant(f) / (4.0 * f.W2) - divergence_term(f) / (2.0 * W);
}

double gauss_brioschi(const FirstFormJet& f) {
  const double W = std::sqrt(f.W2);
  return -metric_determinant(f) / (4.0 * f.W2 * f.W2) - divergence_term(f) / (2.0 * W);
}

double gauss_rotational(const FirstFormJet& f) {
  if (!rotational_preconditions(f)) {
    throw PreconditionError("rotational curvature formula needs E = 1 and a v-independent metric");
  }
  const double W = std::sqrt(f.W2);
  const double W_u = f.W2_u() / (2.0 * W);
  // (G_u / W)_u
  const double ratio_u = f.G_uu / W - f.G_u * W_u / f.W2;
  return -ratio_u / (2.0 * W);
}

AmbientVec mean_curvature_vector(const FirstFormJet& f, const SecondForm& s) {
  return (1.0 / (2.0 * f.W2)) * (f.E * s.hvv - 2.0 * f.F * s.huv + f.G * s.huu);
}

CurvatureSample curvature(const FirstFormJet& f, const SecondForm& s) {
  if (!(f.W2 > 0.0)) throw DegenerateMetric("degenerate metric");
  CurvatureSample c;
  c.K_ext = gauss_extrinsic(f, s);
  c.K_int = gauss_intrinsic(f);
  if (rotational_preconditions(f)) c.K_rot = gauss_rotational(f);
  c.H_vec = mean_curvature_vector(f, s);
  c.H2 = dot(c.H_vec, c.H_vec);
  return c;
}

}  // namespace knot4
