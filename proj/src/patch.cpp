#include "knot4/patch.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>

#include "knot4/errors.hpp"

namespace knot4 {

namespace {

constexpr int kGaussOrder = 16;
constexpr int kCheckpointSegments = 64;
constexpr long double kQuadratureTol = 1e-16L;
constexpr int kMaxBisections = 12;

struct GaussLegendre {
  std::array<long double, kGaussOrder> node{};
  std::array<long double, kGaussOrder> weight{};

  GaussLegendre() {
    constexpr long double pi = 3.141592653589793238462643383279502884L;
    for (int i = 0; i < kGaussOrder; ++i) {
      long double x = std::cos(pi * (i + 0.75L) / (kGaussOrder + 0.5L));
      long double dp = 0.0L;
      for (int it = 0; it < 100; ++it) {
        long double p0 = 1.0L, p1 = x;
        for (int k = 2; k <= kGaussOrder; ++k) {
          const long double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        dp = kGaussOrder * (x * p1 - p0) / (x * x - 1.0L);
        const long double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-21L) break;
      }
      node[i] = x;
      weight[i] = 2.0L / ((1.0L - x * x) * dp * dp);
    }
  }
};

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre rule;
  return rule;
}

// (a, b) rotated by j quarter turns and then by angle v.
template <typename T>
std::array<T, 2> rotate(T a, T b, T cv, T sv, int j) {
  switch (j & 3) {
    case 1: std::tie(a, b) = std::pair{-b, a}; break;
    case 2: std::tie(a, b) = std::pair{-a, -b}; break;
    case 3: std::tie(a, b) = std::pair{b, -a}; break;
    default: break;
  }
  return {a * cv - b * sv, a * sv + b * cv};
}

AmbientVec partial(const std::array<Jet1D, 4>& g, int du, int dv, double cv, double sv) {
  AmbientVec out;
  if (dv == 0) {
    out[0] = g[0][du];
    out[1] = g[1][du];
  }
  const auto r = rotate(g[2][du], g[3][du], cv, sv, dv);
  out[2] = r[0];
  out[3] = r[1];
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// QuadratureComponent
// ---------------------------------------------------------------------------

QuadratureComponent::QuadratureComponent(expr::Expr derivative, ParamMap params, Interval domain, double offset)
    : derivative_(std::move(derivative)),
      params_(std::move(params)),
      domain_(domain),
      offset_(offset),
      spacing_(static_cast<long double>(domain.length()) / kCheckpointSegments) {
  if (!(domain.lo < domain.hi)) throw SpecError("quadrature domain must satisfy lo < hi");
  checkpoints_.resize(kCheckpointSegments + 1);
  checkpoints_[0] = offset;
  for (int k = 0; k < kCheckpointSegments; ++k) {
    const long double a = domain.lo + k * spacing_;
    checkpoints_[k + 1] = checkpoints_[k] + integrate(a, a + spacing_);
  }
}

long double QuadratureComponent::rule(long double lo, long double hi) const {
  const auto& gl = gauss_legendre();
  const long double half = 0.5L * (hi - lo);
  const long double mid = 0.5L * (hi + lo);
  long double sum = 0.0L;
  for (int i = 0; i < kGaussOrder; ++i) {
    sum += gl.weight[i] * expr::eval_value<long double>(derivative_, mid + half * gl.node[i], params_);
  }
  return sum * half;
}

long double QuadratureComponent::refine(long double lo, long double hi, long double whole, int depth) const {
  const long double mid = 0.5L * (lo + hi);
  const long double left = rule(lo, mid);
  const long double right = rule(mid, hi);
  const long double refined = left + right;
  if (depth >= kMaxBisections || std::fabs(refined - whole) <= kQuadratureTol * std::fmax(1.0L, std::fabs(refined))) {
    return refined;
  }
  return refine(lo, mid, left, depth + 1) + refine(mid, hi, right, depth + 1);
}

long double QuadratureComponent::integrate(long double a, long double b) const {
  if (a == b) return 0.0L;
  return refine(a, b, rule(a, b), 0);
}

long double QuadratureComponent::value(long double u) const {
  const long double t = (u - domain_.lo) / spacing_;
  const int k = std::clamp(static_cast<int>(std::floor(t)), 0, kCheckpointSegments - 1);
  const long double anchor = domain_.lo + k * spacing_;
  return checkpoints_[k] + integrate(anchor, u);
}

Jet1D QuadratureComponent::jet(double u) const {
  const Jet1D d = expr::eval_jet1d(derivative_, u, params_);
  return {static_cast<double>(value(u)), d.d0, d.d1, d.d2};
}

// ---------------------------------------------------------------------------
// ProfileFunction / CurveSpec
// ---------------------------------------------------------------------------

const QuadratureComponent* ProfileFunction::quadrature() const noexcept {
  const auto* q = std::get_if<std::shared_ptr<const QuadratureComponent>>(&impl_);
  return q ? q->get() : nullptr;
}

Jet1D ProfileFunction::jet(double u, const ParamMap& params) const {
  if (const auto* e = expression()) return expr::eval_jet1d(*e, u, params);
  return quadrature()->jet(u);
}

long double ProfileFunction::value(long double u, const ParamMap& params) const {
  if (const auto* e = expression()) return expr::eval_value<long double>(*e, u, params);
  return quadrature()->value(u);
}

std::string ProfileFunction::describe() const {
  if (const auto* e = expression()) return expr::render(*e);
  return "integral(" + expr::render(quadrature()->derivative()) + ")";
}

std::array<Jet1D, 4> CurveSpec::jets(double u) const {
  return {x[0].jet(u, params), x[1].jet(u, params), x[2].jet(u, params), x[3].jet(u, params)};
}

std::array<long double, 4> CurveSpec::point(long double u) const {
  return {x[0].value(u, params), x[1].value(u, params), x[2].value(u, params), x[3].value(u, params)};
}

const char* kind_name(SurfaceKind k) noexcept {
  switch (k) {
    case SurfaceKind::General: return "general";
    case SurfaceKind::CaseI: return "case1";
    case SurfaceKind::CaseII: return "case2";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Jets
// ---------------------------------------------------------------------------

PatchJet surface_jet(const SurfaceSpec& spec, double u, double v) {
  const double slack = 1e-12 * (1.0 + std::fabs(spec.u_domain().length()));
  if (!spec.u_domain().contains(u, slack) || !spec.v_domain.contains(v, slack)) {
    throw DomainError("point (" + std::to_string(u) + ", " + std::to_string(v) + ") outside surface domain");
  }
  const auto g = spec.curve.jets(u);
  const double cv = std::cos(v), sv = std::sin(v);
  PatchJet j;
  j.u = u;
  j.v = v;
  j.X = partial(g, 0, 0, cv, sv);
  j.Xu = partial(g, 1, 0, cv, sv);
  j.Xv = partial(g, 0, 1, cv, sv);
  j.Xuu = partial(g, 2, 0, cv, sv);
  j.Xuv = partial(g, 1, 1, cv, sv);
  j.Xvv = partial(g, 0, 2, cv, sv);
  j.Xuuu = partial(g, 3, 0, cv, sv);
  j.Xuuv = partial(g, 2, 1, cv, sv);
  j.Xuvv = partial(g, 1, 2, cv, sv);
  j.Xvvv = partial(g, 0, 3, cv, sv);
  return j;
}

std::array<long double, 4> surface_point(const SurfaceSpec& spec, long double u, long double v) {
  const auto p = spec.curve.point(u);
  const long double cv = std::cos(v), sv = std::sin(v);
  return {p[0], p[1], p[2] * cv - p[3] * sv, p[2] * sv + p[3] * cv};
}

PatchJet fd_jet(const SurfaceSpec& spec, double u, double v, double step) {
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
  const Interval& ud = spec.u_domain();
  const Interval& vd = spec.v_domain;
  if (u - 2 * step < ud.lo || u + 2 * step > ud.hi || v - 2 * step < vd.lo || v + 2 * step > vd.hi) {
    throw DomainError("finite-difference stencil leaves the surface domain");
  }
  using P = std::array<long double, 4>;
  const long double h = step;
  std::array<std::optional<P>, 25> cache;
  auto at = [&](int i, int k) -> const P& {
    auto& slot = cache[(i + 2) * 5 + (k + 2)];
    if (!slot) slot = surface_point(spec, u + i * h, v + k * h);
    return *slot;
  };
  auto combine = [&](std::initializer_list<std::tuple<int, int, long double>> terms, long double scale) {
    AmbientVec out;
    for (std::size_t c = 0; c < 4; ++c) {
      long double s = 0.0L;
      for (const auto& [i, k, w] : terms) s += w * at(i, k)[c];
      out[c] = static_cast<double>(s / scale);
    }
    return out;
  };
  const long double h2 = h * h, h3 = h2 * h;
  PatchJet j;
  j.u = u;
  j.v = v;
  j.X = combine({{0, 0, 1}}, 1);
  j.Xu = combine({{1, 0, 1}, {-1, 0, -1}}, 2 * h);
  j.Xv = combine({{0, 1, 1}, {0, -1, -1}}, 2 * h);
  j.Xuu = combine({{1, 0, 1}, {0, 0, -2}, {-1, 0, 1}}, h2);
  j.Xvv = combine({{0, 1, 1}, {0, 0, -2}, {0, -1, 1}}, h2);
  j.Xuv = combine({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}, 4 * h2);
  j.Xuuu = combine({{2, 0, 1}, {1, 0, -2}, {-1, 0, 2}, {-2, 0, -1}}, 2 * h3);
  j.Xvvv = combine({{0, 2, 1}, {0, 1, -2}, {0, -1, 2}, {0, -2, -1}}, 2 * h3);
  j.Xuuv = combine({{1, 1, 1}, {0, 1, -2}, {-1, 1, 1}, {1, -1, -1}, {0, -1, 2}, {-1, -1, -1}}, 2 * h3);
  j.Xuvv = combine({{1, 1, 1}, {1, 0, -2}, {1, -1, 1}, {-1, 1, -1}, {-1, 0, 2}, {-1, -1, -1}}, 2 * h3);
  return j;
}

// ---------------------------------------------------------------------------
// Unit-speed completion
// ---------------------------------------------------------------------------

ProfileFunction arclength_component(const expr::Expr& radicand, const ParamMap& params, Interval domain,
                                    double offset) {
  if (!(domain.lo < domain.hi)) throw SpecError("domain must satisfy lo < hi");
  constexpr int kScan = 4096;
  for (int i = 0; i <= kScan; ++i) {
    const double u = domain.lo + domain.length() * i / kScan;
    double r;
    try {
      r = expr::eval_value<double>(radicand, u, params);
    } catch (const DomainError&) {
      throw SpeedDeficit(u);
    }
    if (!(r > 0.0)) throw SpeedDeficit(u);
  }
  auto derivative = expr::Expr::call(expr::Function::Sqrt, radicand);
  return ProfileFunction(std::make_shared<const QuadratureComponent>(derivative, params, domain, offset));
}

CurveSpec complete_unit_speed(const expr::Expr& x3, double lambda, double x1_offset, const ParamMap& params,
                              Interval domain) {
  using expr::Expr;
  const Expr dx3 = expr::differentiate(x3);
  const Expr radicand = Expr::constant(1.0) - Expr::constant(1.0 + lambda * lambda) * (dx3 * dx3);
  CurveSpec c;
  c.params = params;
  c.domain = domain;
  c.x[0] = arclength_component(radicand, params, domain, x1_offset);
  c.x[1] = Expr::constant(0.0);
  c.x[2] = x3;
  c.x[3] = Expr::constant(lambda) * x3;
  return c;
}

}  // namespace knot4
