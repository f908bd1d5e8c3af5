#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "knot4/corpus.hpp"
#include "knot4/errors.hpp"
#include "knot4/geom.hpp"
#include "knot4/knots.hpp"

using namespace knot4;
using expr::parse;

namespace {

constexpr double kPi = std::numbers::pi;

CurveSpec curve(const char* x1, const char* x2, const char* x3, const char* x4, Interval d) {
  return CurveSpec{{parse(x1), parse(x2), parse(x3), parse(x4)}, {}, d};
}

double K_at(const SurfaceSpec& s, double u, double v) {
  const auto j = surface_jet(s, u, v);
  const auto ff = first_form(j);
  return gauss_extrinsic(ff, second_form(j, christoffel(ff)));
}

TEST(MakeGeneral, SphereAndCylinder) {
  const auto sphere = make_general(curve("-cos(u)", "0", "sin(u)", "0", {0.2, 2.9}));
  const auto flat = make_general(curve("u", "0", "1", "0", {0.0, 2.0}));
  for (double u : {0.5, 1.0, 1.9}) {
    EXPECT_NEAR(K_at(sphere, u, 0.4), 1.0, 1e-12);
    EXPECT_NEAR(K_at(flat, u, 0.4), 0.0, 1e-15);
  }
  const auto axis = make_general(curve("u", "1", "0", "0", {0.0, 1.0}));
  EXPECT_THROW(first_form(surface_jet(axis, 0.5, 0.0)), DegenerateMetric);
  EXPECT_THROW(make_general(curve("u", "0", "1", "0", {1.0, 1.0})), Error);
}

TEST(MakeCase1, Examples) {
  const auto s = make_case1(parse("(3^0.5/2)*u"), parse("0"), parse("u/2"), {}, {0.0, 3.0});
  EXPECT_NEAR(first_form(surface_jet(s, 1.0, 1.0)).F, 0.5, 1e-15);

  EXPECT_THROW(make_case1(parse("0"), parse("0"), parse("u"), {}, {0.0, 1.0}), RegularityError);

  const auto torus = make_case1(parse("sin(u)"), parse("cos(u)"), parse("0"), {}, {0.0, 2 * kPi});
  for (double u : {0.3, 2.0, 5.0}) EXPECT_NEAR(K_at(torus, u, 1.7), 0.0, 1e-15);

  // |gamma'|^2 = 1/4 + 1/4 != 1
  EXPECT_THROW(make_case1(parse("u/2"), parse("0"), parse("u/2"), {}, {0.0, 1.0}), UnitSpeedViolation);
}

TEST(MakeCase1, MetricMatchesClosedForm) {
  for (const auto& s : corpus::random_case1(corpus::kDefaultSeed, 5)) {
    for (double t : {0.1, 0.45, 0.9}) {
      const double u = s.u_domain().lo + t * s.u_domain().length();
      const auto ff = first_form(surface_jet(s, u, 2.0));
      const double phi1 = expr::eval_jet1d(*s.phi, u, s.params()).d1;
      EXPECT_NEAR(ff.E, 1.0, 1e-9) << s.name;
      EXPECT_NEAR(ff.F, phi1, 1e-9) << s.name;
      EXPECT_NEAR(ff.G, 1.0, 1e-9) << s.name;
    }
  }
}

TEST(MakeCase2, Examples) {
  const auto sphere = make_case2(parse("-cos(u)"), parse("0"), parse("sin(u)"), 0.0, {}, {0.1, kPi / 2});
  for (double u : {0.2, 0.8, 1.5}) {
    const auto ff = first_form(surface_jet(sphere, u, 0.5));
    EXPECT_NEAR(ff.F, 0.0, 1e-15);
    EXPECT_NEAR(ff.G, std::sin(u) * std::sin(u), 1e-15);
  }

  const auto tilted = make_case2(parse("u/2^0.5"), parse("0"), parse("u/2"), 1.0, {}, {0.5, 2.0});
  for (double u : {0.6, 1.4}) EXPECT_NEAR(first_form(surface_jet(tilted, u, 0.5)).G, u * u / 2, 1e-15);

  EXPECT_THROW(make_case2(parse("0"), parse("0"), parse("-u"), 0.0, {}, {1.0, 2.0}), PositivityError);
  EXPECT_THROW(make_case2(parse("u"), parse("0"), parse("u"), 0.0, {}, {1.0, 2.0}), UnitSpeedViolation);
}

TEST(MakeCase2, MetricMatchesClosedForm) {
  for (const auto& s : corpus::random_case2(corpus::kDefaultSeed, 5)) {
    for (double t : {0.1, 0.45, 0.9}) {
      const double u = s.u_domain().lo + t * s.u_domain().length();
      const auto ff = first_form(surface_jet(s, u, 2.0));
      const double x3 = s.curve.x[2].jet(u, s.params()).d0;
      EXPECT_NEAR(ff.E, 1.0, 1e-9) << s.name;
      EXPECT_LT(std::fabs(ff.F), 1e-10) << s.name;
      EXPECT_NEAR(ff.G, (1 + s.lambda * s.lambda) * x3 * x3, 1e-9) << s.name;
    }
  }
}

TEST(ProfileCurvature, Examples) {
  const auto circle = curve("-cos(u)", "0", "sin(u)", "0", {0.0, 3.0});
  const auto line = curve("u", "0", "1", "0", {0.0, 3.0});
  for (double u : {0.1, 1.0, 2.9}) {
    EXPECT_NEAR(profile_curvature(circle, u), 1.0, 1e-15);
    EXPECT_EQ(profile_curvature(line, u), 0.0);
  }
  const auto half = make_case1(parse("(3^0.5/2)*u"), parse("0"), parse("u/2"), {}, {0.0, 3.0});
  EXPECT_NEAR(profile_curvature(half.curve, 1.2), 0.25, 1e-15);
  EXPECT_THROW(profile_curvature(curve("2*u", "0", "1", "0", {0.0, 1.0}), 0.5), UnitSpeedViolation);
}

TEST(Case1Formulas, H2Examples) {
  EXPECT_DOUBLE_EQ(case1_h2_formula({0, 0, 0, 0}, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(case1_h2_formula({0, 0, 0, 0}, 0.0), 0.25);
  EXPECT_NEAR(case1_h2_formula({0, 1 / std::sqrt(2.0), 0, 0}, 0.5), 0.25, 1e-15);
}

TEST(Case1Formulas, MinimalResidualExamples) {
  EXPECT_NEAR(case1_minimal_residual({0, 1 / std::sqrt(2.0), 0, 0}, 0.0), 0.0, 1e-15);
  EXPECT_NEAR(case1_minimal_residual({0, 1 / std::sqrt(2.0), 0, 0}, 0.5), 0.25, 1e-15);
  EXPECT_DOUBLE_EQ(case1_minimal_residual({0, 0, 0, 0}, 1.0), 2.0);
}

TEST(CompleteCase1, UnitSpeed) {
  const auto s = complete_case1(parse("0.4*sin(u)"), {}, {0.0, 3.0}, 0.5);
  EXPECT_EQ(s.kind, SurfaceKind::CaseI);
  EXPECT_LT(unit_speed_residual(s.curve).first, 1e-12);
  EXPECT_NEAR(s.curve.x[0].jet(0.0, {}).d0, 0.5, 1e-15);
  EXPECT_THROW(complete_case1(parse("2*u"), {}, {0.0, 1.0}), RegularityError);
}

TEST(ValidateKnotArc, Examples) {
  const auto a = validate_knot_arc(curve("0", "0", "sin(u)", "0", {0.0, kPi}));
  EXPECT_TRUE(a.start_in_plane);
  EXPECT_TRUE(a.end_in_plane);
  EXPECT_TRUE(a.start_tangent_orthogonal);
  EXPECT_TRUE(a.end_tangent_orthogonal);
  EXPECT_GT(a.unit_speed_max_residual, 0.99);  // |gamma'| = |cos u|

  const auto b = validate_knot_arc(curve("u", "0", "sin(u)", "0", {0.0, kPi}));
  EXPECT_TRUE(b.start_in_plane);
  EXPECT_TRUE(b.end_in_plane);
  EXPECT_FALSE(b.start_tangent_orthogonal);
  EXPECT_FALSE(b.end_tangent_orthogonal);
  EXPECT_NEAR(b.unit_speed_max_residual, 1.0, 1e-12);

  const auto c = validate_knot_arc(curve("-cos(u)", "0", "sin(u)", "0", {0.1, kPi / 2}));
  EXPECT_FALSE(c.start_in_plane);
  EXPECT_FALSE(c.end_in_plane);
}

TEST(ValidateKnotArc, ReportOnlyOnDomainErrors) {
  const auto r = validate_knot_arc(curve("log(u)", "0", "u", "0", {0.0, 1.0}));
  EXPECT_FALSE(r.start_in_plane);
  EXPECT_FALSE(r.start_tangent_orthogonal);
  EXPECT_TRUE(std::isinf(r.unit_speed_max_residual));
}

}  // namespace
