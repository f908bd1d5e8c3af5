#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "knot4/corpus.hpp"
#include "knot4/errors.hpp"
#include "knot4/knots.hpp"
#include "knot4/nets.hpp"
#include "knot4/sampling.hpp"

using namespace knot4;
using expr::parse;

namespace {

constexpr double kPi = std::numbers::pi;

TEST(NetSample, SphereIsConjugateWithZeroInvariants) {
  const auto s = corpus::unit_sphere();
  for (double u : {0.3, 0.9, 1.3}) {
    for (double v : {0.0, 2.0, 5.0}) {
      const auto r = sample_point(s, u, v);
      EXPECT_LT(r.net.defect, 1e-12);
      EXPECT_NEAR(r.net.h_inv, 0.0, 1e-12);
      EXPECT_NEAR(r.net.k_inv, 0.0, 1e-12);
      EXPECT_NEAR(r.net.gamma212, std::cos(u) / std::sin(u), 1e-12);
    }
  }
}

TEST(NetSample, CaseIDefectIsPhiPrime) {
  const auto s = corpus::case1_half_angle();
  for (double u : {0.4, 1.5, 2.6}) {
    const auto r = sample_point(s, u, 1.0);
    EXPECT_NEAR(r.net.defect, 0.5, 1e-14);
    EXPECT_EQ(r.net.gamma112, 0.0);
    EXPECT_EQ(r.net.gamma212, 0.0);
  }
  const auto constant = make_case1(parse("u"), parse("0"), parse("0.7"), {}, {0.0, 1.0});
  EXPECT_EQ(sample_point(constant, 0.5, 0.5).net.defect, 0.0);
}

TEST(NetSample, InvariantDerivativesMatchDifferences) {
  const double h = 1e-5;
  for (const auto& s : {corpus::tilted_general(), corpus::log_spiral()}) {
    const double u = 0.5 * (s.u_domain().lo + s.u_domain().hi), v = 2.0;
    const auto c = sample_point(s, u, v);
    const double dg1 = (sample_point(s, u + h, v).ch.g112 - sample_point(s, u - h, v).ch.g112) / (2 * h);
    const double dg2 = (sample_point(s, u, v + h).ch.g212 - sample_point(s, u, v - h).ch.g212) / (2 * h);
    EXPECT_NEAR(d_u_gamma112(c.ff, c.ch), dg1, 1e-8) << s.name;
    EXPECT_NEAR(d_v_gamma212(c.ff, c.ch), dg2, 1e-8) << s.name;
  }
}

TEST(IsConjugate, Examples) {
  const auto sphere = corpus::unit_sphere();
  const auto rs = is_conjugate(sphere, GridConfig::over(sphere, 20, 20), 1e-10);
  EXPECT_TRUE(rs.conjugate);
  EXPECT_LT(rs.max_defect, 1e-10);
  EXPECT_EQ(rs.samples, 400u);

  const auto half = corpus::case1_half_angle();
  const auto rh = is_conjugate(half, GridConfig::over(half, 20, 20), 1e-10);
  EXPECT_FALSE(rh.conjugate);
  EXPECT_NEAR(rh.max_defect, 0.5, 1e-14);

  const auto torus = corpus::clifford_torus();
  EXPECT_TRUE(is_conjugate(torus, GridConfig::over(torus, 20, 20), 1e-10).conjugate);

  const auto spiral = corpus::log_spiral();
  EXPECT_TRUE(is_conjugate(spiral, GridConfig::over(spiral, 20, 20), 1e-10).conjugate);
  const auto tilted = corpus::tilted_general();
  EXPECT_FALSE(is_conjugate(tilted, GridConfig::over(tilted, 20, 20), 1e-10).conjugate);
}

TEST(IsConjugate, SameResultForAnyThreadCount) {
  const auto s = corpus::tilted_general();
  const auto g = GridConfig::over(s, 30, 30);
  const auto a = is_conjugate(s, g, 1e-10, 1);
  const auto b = is_conjugate(s, g, 1e-10, 4);
  EXPECT_EQ(a.max_defect, b.max_defect);
  EXPECT_EQ(a.at_u, b.at_u);
  EXPECT_EQ(a.at_v, b.at_v);
}

TEST(LaplaceMinus, SphereAtSixtyDegrees) {
  // X - tan(u) Xu has first component -cos u - tan u sin u = -sec u.
  const auto s = corpus::unit_sphere();
  for (double v : {0.0, 1.0, 4.0}) {
    const auto r = sample_point(s, kPi / 3, v);
    const auto x = laplace_minus(r.jet, r.ch);
    EXPECT_NEAR(x[0], -2.0, 1e-14);
    EXPECT_NEAR(x[1], 0.0, 1e-15);
    EXPECT_NEAR(x[2], 0.0, 1e-15);
    EXPECT_NEAR(x[3], 0.0, 1e-15);
  }
}

TEST(LaplaceMinus, ConeCollapsesToVertex) {
  const double d = 0.3;
  const auto s = corpus::cone(0.6, d);
  for (double u : {0.6, 1.2, 1.9}) {
    for (double v : {0.5, 3.0}) {
      const auto r = sample_point(s, u, v);
      const auto x = laplace_minus(r.jet, r.ch);
      EXPECT_NEAR(x[0], d, 1e-14);
      EXPECT_NEAR(std::fabs(x[1]) + std::fabs(x[2]) + std::fabs(x[3]), 0.0, 1e-14);
    }
  }
}

TEST(LaplaceMinus, DegenerateWhereX3Stationary) {
  const auto s = make_case2(parse("-cos(u)"), parse("0"), parse("sin(u)"), 0.0, {}, {0.1, 3.0});
  const auto r = sample_point(s, kPi / 2, 0.0);  // Gamma^2_12 = cot(pi/2) ~ 6e-17
  EXPECT_THROW(laplace_minus(r.jet, r.ch), DegenerateNet);
}

TEST(LaplacePlus, DegenerateForCaseIAndCaseII) {
  for (const auto& s : corpus::default_corpus()) {
    if (s.kind == SurfaceKind::General) continue;
    const auto r = sample_point(s, s.u_domain().lo + 0.3 * s.u_domain().length(), 1.0);
    EXPECT_THROW(laplace_plus(r.jet, r.ch), DegenerateNet) << s.name;
  }
}

TEST(LaplacePlus, TiltedGeneralIsFinite) {
  const auto s = corpus::tilted_general();
  int finite = 0;
  for (const auto& p : sample_grid(s, GridConfig::over(s, 15, 15))) {
    ASSERT_TRUE(p.ok());
    if (std::fabs(p.record->ch.g112) <= kLaplaceEps) continue;
    EXPECT_TRUE(laplace_plus(p.record->jet, p.record->ch).finite());
    ++finite;
  }
  EXPECT_GT(finite, 100);
}

TEST(Prop6Defect, ConjugateNetTransformMovesAlongXv) {
  const auto s = corpus::log_spiral();
  for (double u : {0.7, 1.1, 1.8}) {
    for (double v : {0.5, 2.5}) EXPECT_LT(prop6_defect(s, u, v, 1e-3), 1e-4) << u << "," << v;
  }
}

// Away from conjugacy the transform's u-derivative leaves the Xv direction.
TEST(Prop6Defect, NonConjugateNetLeavesXv) {
  const auto s = corpus::tilted_general();
  double worst = 0.0;
  for (double u : {0.5, 1.5, 2.5}) worst = std::max(worst, prop6_defect(s, u, 1.0, 1e-3));
  EXPECT_GT(worst, 1e-3);
}

TEST(Prop6Defect, TransformDisplacementIsParallelToXv) {
  const auto s = corpus::tilted_general();
  const auto r = sample_point(s, 1.3, 0.8);
  const auto x1 = laplace_plus(r.jet, r.ch);
  const AmbientVec d = x1 - r.jet.X;
  const double sine2 = 1.0 - std::pow(dot(d, r.jet.Xv), 2) / (dot(d, d) * dot(r.jet.Xv, r.jet.Xv));
  EXPECT_NEAR(sine2, 0.0, 1e-15);
}

TEST(Prop6Defect, DegenerateForCaseII) {
  EXPECT_THROW(prop6_defect(corpus::unit_sphere(), 0.8, 1.0, 1e-3), DegenerateNet);
}

}  // namespace
