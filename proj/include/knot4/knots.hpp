#pragma once

#include "knot4/expr.hpp"
#include "knot4/jet1d.hpp"
#include "knot4/patch.hpp"

namespace knot4 {

// Tolerance for |gamma'|^2 = 1 checks in constructors and profile_curvature.
inline constexpr double kUnitSpeedTol = 1e-8;

struct KnotArcReport {
  bool start_in_plane = false;   // x3 = x4 = 0 at u_min
  bool end_in_plane = false;
  bool start_tangent_orthogonal = false;  // x1' = x2' = 0 at u_min
  bool end_tangent_orthogonal = false;
  double unit_speed_max_residual = 0.0;
};

SurfaceSpec make_general(CurveSpec curve);

// x3 = cos(phi), x4 = sin(phi). Throws RegularityError if |phi'| >= 1 at a
// sample point, UnitSpeedViolation if x1'^2 + x2'^2 + phi'^2 != 1.
SurfaceSpec make_case1(ProfileFunction x1, ProfileFunction x2, expr::Expr phi, ParamMap params, Interval domain);

// Case I with x1 = offset + integral sqrt(1 - phi'^2), x2 = 0.
SurfaceSpec complete_case1(expr::Expr phi, ParamMap params, Interval domain, double x1_offset = 0.0);

// x4 = lambda * x3. Throws PositivityError if x3 <= 0 at a sample point,
// UnitSpeedViolation if x1'^2 + x2'^2 + (1 + lambda^2) x3'^2 != 1.
SurfaceSpec make_case2(ProfileFunction x1, ProfileFunction x2, expr::Expr x3, double lambda, ParamMap params,
                       Interval domain);

// Case II with x1 completed to unit speed by complete_unit_speed.
SurfaceSpec complete_case2(expr::Expr x3, double lambda, ParamMap params, Interval domain, double x1_offset = 0.0);

// |gamma''(u)|; throws UnitSpeedViolation if |gamma'(u)|^2 deviates from 1 by more than kUnitSpeedTol.
double profile_curvature(const CurveSpec& curve, double u);

// (1/(4(1-phi'^2)^2)) (kappa^2 + 1 - 2 phi'^2 - phi''^2/(1-phi'^2)), evaluated literally.
double case1_h2_formula(const Jet1D& phi, double kappa);

// kappa^2 - [phi''^2/(1-phi'^2) + 2 phi'^2 - 1]; zero exactly when the minimality condition holds.
double case1_minimal_residual(const Jet1D& phi, double kappa);

KnotArcReport validate_knot_arc(const CurveSpec& curve);

// max over sample points of |x1'^2 + x2'^2 + x3'^2 + x4'^2 - 1| and where it occurs.
std::pair<double, double> unit_speed_residual(const CurveSpec& curve, int samples = 256);

}  // namespace knot4
