#pragma once

#include <array>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knot4/expr.hpp"
#include "knot4/jet1d.hpp"
#include "knot4/vec4.hpp"

namespace knot4 {

using expr::ParamMap;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x, double slack = 0.0) const noexcept { return x >= lo - slack && x <= hi + slack; }
  double length() const noexcept { return hi - lo; }
};

// Profile component whose derivative is an expression and whose value is
//     offset + integral_{u_lo}^{u} derivative(s) ds.
// Checkpoint values are computed once at construction; afterwards the object
// is immutable and can be shared between threads.
//
// Integration uses adaptive 16-point Gauss-Legendre in long double. For a
// smooth integrand the result is a smooth function of u to within long double
// rounding, which the finite-difference oracle depends on.
class QuadratureComponent {
 public:
  QuadratureComponent(expr::Expr derivative, ParamMap params, Interval domain, double offset);

  // d0 by quadrature; d1..d3 are d0..d2 of the derivative expression.
  Jet1D jet(double u) const;
  long double value(long double u) const;

  const expr::Expr& derivative() const noexcept { return derivative_; }
  double offset() const noexcept { return offset_; }
  const Interval& domain() const noexcept { return domain_; }

 private:
  long double rule(long double lo, long double hi) const;
  long double refine(long double lo, long double hi, long double whole, int depth) const;
  long double integrate(long double a, long double b) const;

  expr::Expr derivative_;
  ParamMap params_;
  Interval domain_;
  double offset_;
  long double spacing_;
  std::vector<long double> checkpoints_;
};

// One coordinate function x_i(u) of a profile curve.
class ProfileFunction {
 public:
  ProfileFunction() = default;
  ProfileFunction(expr::Expr e) : impl_(std::move(e)) {}  // NOLINT: implicit by intent
  ProfileFunction(std::shared_ptr<const QuadratureComponent> q) : impl_(std::move(q)) {}  // NOLINT

  Jet1D jet(double u, const ParamMap& params) const;
  long double value(long double u, const ParamMap& params) const;

  bool is_quadrature() const noexcept { return impl_.index() == 1; }
  const expr::Expr* expression() const noexcept { return std::get_if<expr::Expr>(&impl_); }
  const QuadratureComponent* quadrature() const noexcept;

  std::string describe() const;

 private:
  std::variant<expr::Expr, std::shared_ptr<const QuadratureComponent>> impl_;
};

// gamma(u) = (x1, x2, x3, x4)(u) on a parameter interval.
struct CurveSpec {
  std::array<ProfileFunction, 4> x;
  ParamMap params;
  Interval domain;

  std::array<Jet1D, 4> jets(double u) const;
  std::array<long double, 4> point(long double u) const;
};

enum class SurfaceKind { General, CaseI, CaseII };

const char* kind_name(SurfaceKind k) noexcept;

// Rotational surface X(u,v) = (x1, x2, x3 cos v - x4 sin v, x3 sin v + x4 cos v).
// Every kind is stored through its profile curve; CaseI keeps phi with
// x3 = cos(phi), x4 = sin(phi), CaseII keeps lambda with x4 = lambda * x3.
struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::General;
  CurveSpec curve;
  std::optional<expr::Expr> phi;
  double lambda = 0.0;
  Interval v_domain{0.0, 2.0 * std::numbers::pi};
  bool unit_speed_complete = false;
  std::string name;
  std::string family;

  const Interval& u_domain() const noexcept { return curve.domain; }
  const ParamMap& params() const noexcept { return curve.params; }
};

// All partials of X up to total order 3 at (u, v). Xuv is stored once.
struct PatchJet {
  double u = 0.0;
  double v = 0.0;
  AmbientVec X, Xu, Xv, Xuu, Xuv, Xvv, Xuuu, Xuuv, Xuvv, Xvvv;
};

// Analytic jet: u-derivatives from profile jets, v-derivatives from the rotation.
PatchJet surface_jet(const SurfaceSpec& spec, double u, double v);

// X(u, v) from plain value evaluation (no jet arithmetic).
std::array<long double, 4> surface_point(const SurfaceSpec& spec, long double u, long double v);

// Central-difference oracle built from surface_point only.
PatchJet fd_jet(const SurfaceSpec& spec, double u, double v, double step);

// sqrt(radicand) integrated from domain.lo with the given offset. Throws
// SpeedDeficit at the first sampled u where the radicand is <= 0.
ProfileFunction arclength_component(const expr::Expr& radicand, const ParamMap& params, Interval domain,
                                    double offset);

// Curve (x1, 0, x3, lambda*x3) with x1' = sqrt(1 - (1 + lambda^2) x3'^2), so |gamma'| = 1.
CurveSpec complete_unit_speed(const expr::Expr& x3, double lambda, double x1_offset, const ParamMap& params,
                              Interval domain);

}  // namespace knot4
