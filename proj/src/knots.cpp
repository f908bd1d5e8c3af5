#include "knot4/knots.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "knot4/errors.hpp"

namespace knot4 {

namespace {

constexpr int kValidationSamples = 256;
constexpr double kArcTol = 1e-8;

template <typename F>
void for_samples(const Interval& d, int n, F&& f) {
  for (int i = 0; i <= n; ++i) f(d.lo + d.length() * i / n);
}

double speed_squared(const std::array<Jet1D, 4>& g) {
  return g[0].d1 * g[0].d1 + g[1].d1 * g[1].d1 + g[2].d1 * g[2].d1 + g[3].d1 * g[3].d1;
}

void require_domain(const Interval& d) {
  if (!(d.lo < d.hi)) throw SpecError("u domain must satisfy u_min < u_max");
}

void require_unit_speed(const CurveSpec& c) {
  const auto [res, at] = unit_speed_residual(c, kValidationSamples);
  if (res > kUnitSpeedTol) throw UnitSpeedViolation(res, at);
}

double check_phi(double phi1) {
  const double w2 = 1.0 - phi1 * phi1;
  if (!(w2 > 0.0)) throw RegularityError("|phi'| >= 1: W^2 = 1 - phi'^2 = " + std::to_string(w2));
  return w2;
}

}  // namespace

std::pair<double, double> unit_speed_residual(const CurveSpec& curve, int samples) {
  double worst = 0.0, where = curve.domain.lo;
  for_samples(curve.domain, samples, [&](double u) {
    const double r = std::fabs(speed_squared(curve.jets(u)) - 1.0);
    if (r > worst) {
      worst = r;
      where = u;
    }
  });
  return {worst, where};
}

SurfaceSpec make_general(CurveSpec curve) {
  require_domain(curve.domain);
  SurfaceSpec s;
  s.kind = SurfaceKind::General;
  s.curve = std::move(curve);
  return s;
}

namespace {

void require_regular_phi(const expr::Expr& phi, const ParamMap& params, Interval domain) {
  for_samples(domain, kValidationSamples, [&](double u) {
    const Jet1D p = expr::eval_jet1d(phi, u, params);
    if (!(std::fabs(p.d1) < 1.0)) {
      throw RegularityError("|phi'| >= 1 at u=" + std::to_string(u) + " (W^2 = 1 - phi'^2 <= 0)");
    }
  });
}

}  // namespace

SurfaceSpec make_case1(ProfileFunction x1, ProfileFunction x2, expr::Expr phi, ParamMap params, Interval domain) {
  using expr::Expr;
  require_domain(domain);
  require_regular_phi(phi, params, domain);
  SurfaceSpec s;
  s.kind = SurfaceKind::CaseI;
  s.curve.params = std::move(params);
  s.curve.domain = domain;
  s.curve.x = {std::move(x1), std::move(x2), Expr::call(expr::Function::Cos, phi),
               Expr::call(expr::Function::Sin, phi)};
  s.phi = std::move(phi);
  require_unit_speed(s.curve);
  return s;
}

SurfaceSpec complete_case1(expr::Expr phi, ParamMap params, Interval domain, double x1_offset) {
  using expr::Expr;
  require_domain(domain);
  require_regular_phi(phi, params, domain);
  const Expr dphi = expr::differentiate(phi);
  ProfileFunction x1 = arclength_component(Expr::constant(1.0) - dphi * dphi, params, domain, x1_offset);
  SurfaceSpec s = make_case1(std::move(x1), Expr::constant(0.0), std::move(phi), std::move(params), domain);
  s.unit_speed_complete = true;
  return s;
}

SurfaceSpec make_case2(ProfileFunction x1, ProfileFunction x2, expr::Expr x3, double lambda, ParamMap params,
                       Interval domain) {
  using expr::Expr;
  require_domain(domain);
  for_samples(domain, kValidationSamples, [&](double u) {
    if (!(expr::eval_value<double>(x3, u, params) > 0.0)) {
      throw PositivityError("x3 <= 0 at u=" + std::to_string(u));
    }
  });
  SurfaceSpec s;
  s.kind = SurfaceKind::CaseII;
  s.lambda = lambda;
  s.curve.params = std::move(params);
  s.curve.domain = domain;
  s.curve.x = {std::move(x1), std::move(x2), x3, Expr::constant(lambda) * x3};
  require_unit_speed(s.curve);
  return s;
}

SurfaceSpec complete_case2(expr::Expr x3, double lambda, ParamMap params, Interval domain, double x1_offset) {
  CurveSpec c = complete_unit_speed(x3, lambda, x1_offset, params, domain);
  SurfaceSpec s = make_case2(c.x[0], c.x[1], std::move(x3), lambda, std::move(params), domain);
  s.unit_speed_complete = true;
  return s;
}

double profile_curvature(const CurveSpec& curve, double u) {
  const auto g = curve.jets(u);
  const double res = std::fabs(speed_squared(g) - 1.0);
  if (res > kUnitSpeedTol) throw UnitSpeedViolation(res, u);
  return std::sqrt(g[0].d2 * g[0].d2 + g[1].d2 * g[1].d2 + g[2].d2 * g[2].d2 + g[3].d2 * g[3].d2);
}

double case1_h2_formula(const Jet1D& phi, double kappa) {
  const double w2 = check_phi(phi.d1);
  const double p1 = phi.d1, p2 = phi.d2;
  return (kappa * kappa + 1.0 - 2.0 * p1 * p1 - p2 * p2 / w2) / (4.0 * w2 * w2);
}

double case1_minimal_residual(const Jet1D& phi, double kappa) {
  const double w2 = check_phi(phi.d1);
  const double p1 = phi.d1, p2 = phi.d2;
  return kappa * kappa - (p2 * p2 / w2 + 2.0 * p1 * p1 - 1.0);
}

KnotArcReport validate_knot_arc(const CurveSpec& curve) {
  KnotArcReport r;
  auto in_plane = [](const std::array<Jet1D, 4>& g) {
    return std::fabs(g[2].d0) <= kArcTol && std::fabs(g[3].d0) <= kArcTol;
  };
  auto orthogonal = [](const std::array<Jet1D, 4>& g) {
    return std::fabs(g[0].d1) <= kArcTol && std::fabs(g[1].d1) <= kArcTol;
  };
  auto jets_at = [&](double u) -> std::optional<std::array<Jet1D, 4>> {
    try {
      return curve.jets(u);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  // An endpoint where the profile cannot be evaluated reports false.
  if (const auto a = jets_at(curve.domain.lo)) {
    r.start_in_plane = in_plane(*a);
    r.start_tangent_orthogonal = orthogonal(*a);
  }
  if (const auto b = jets_at(curve.domain.hi)) {
    r.end_in_plane = in_plane(*b);
    r.end_tangent_orthogonal = orthogonal(*b);
  }
  try {
    r.unit_speed_max_residual = unit_speed_residual(curve, kValidationSamples).first;
  } catch (const DomainError&) {
    r.unit_speed_max_residual = std::numeric_limits<double>::infinity();
  }
  return r;
}

}  // namespace knot4
