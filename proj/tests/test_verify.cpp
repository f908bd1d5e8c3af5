#include <gtest/gtest.h>

#include <cmath>

#include "knot4/corpus.hpp"
#include "knot4/errors.hpp"
#include "knot4/knots.hpp"
#include "knot4/verify.hpp"

using namespace knot4;
using namespace knot4::verify;
using expr::parse;

namespace {

std::vector<SurfaceSpec> only(std::vector<SurfaceSpec> all, SurfaceKind kind) {
  std::erase_if(all, [kind](const SurfaceSpec& s) { return s.kind != kind; });
  return all;
}

TEST(Names, RoundTrip) {
  for (ClaimId id : kAllClaims) EXPECT_EQ(claim_from_name(claim_name(id)), id);
  EXPECT_FALSE(claim_from_name("PROP99").has_value());
  EXPECT_STREQ(status_name(ClaimStatus::DiscrepancyDocumented), "discrepancy-documented");
}

TEST(RunClaim, Prop1OnRandomCaseI) {
  const auto r = run_claim(ClaimId::PROP1, corpus::random_case1(corpus::kDefaultSeed, 5));
  EXPECT_EQ(r.status, ClaimStatus::Pass);
  EXPECT_LT(r.max_residual, 1e-8);
  ASSERT_EQ(r.instances.size(), 5u);
  for (const auto& inst : r.instances) EXPECT_EQ(inst.samples, 2500u);
}

TEST(RunClaim, Cor5PseudoExponential) {
  const ParamMap p{{"c", 2.0}};
  auto s = complete_case2(parse("exp(c*u)", p), 0.0, p, {-3.0, -0.5});
  s.name = "exp2";
  s.family = "cor5_pseudo";
  const auto r = run_claim(ClaimId::COR5_PSEUDO, {s});
  EXPECT_EQ(r.status, ClaimStatus::DiscrepancyDocumented);
  EXPECT_NEAR(r.instances[0].detail["measured_K"].get<double>(), -4.0, 1e-7);
  EXPECT_DOUBLE_EQ(r.instances[0].detail["stated_K"].get<double>(), -0.25);
}

TEST(RunClaim, Cor5AtUnitParameterMatchesStatedValue) {
  EXPECT_EQ(run_claim(ClaimId::COR5_PSEUDO, {corpus::cor5_pseudo(1.0)}).status, ClaimStatus::Pass);
  EXPECT_EQ(run_claim(ClaimId::COR5_SPHER, {corpus::cor5_spher(1.0)}).status, ClaimStatus::Pass);
  const auto r = run_claim(ClaimId::COR5_SPHER, {corpus::cor5_spher(0.5)});
  EXPECT_EQ(r.status, ClaimStatus::DiscrepancyDocumented);
  EXPECT_NEAR(r.instances[0].detail["measured_K"].get<double>(), 0.25, 1e-7);
}

TEST(RunClaim, Prop9OnCaseII) {
  const auto corpus2 = corpus::random_case2(corpus::kDefaultSeed, 4);
  const auto r = run_claim(ClaimId::PROP9, corpus2);
  EXPECT_EQ(r.status, ClaimStatus::Pass);
  EXPECT_LT(r.max_residual, 1e-9);
}

TEST(RunClaim, FamilyMismatch) {
  EXPECT_THROW(run_claim(ClaimId::PROP1, {corpus::unit_sphere()}), CorpusError);
  EXPECT_THROW(run_claim(ClaimId::PROP4, {corpus::clifford_torus()}), CorpusError);
  EXPECT_THROW(run_claim(ClaimId::COR5_FLAT, {corpus::unit_sphere()}), CorpusError);
  EXPECT_THROW(run_claim(ClaimId::EGREGIUM, {}), CorpusError);
}

TEST(RunClaim, Prop2SquaredReadingOnConstantPhi) {
  const auto r = run_claim(ClaimId::PROP2_B12, {corpus::clifford_torus()});
  EXPECT_LT(r.max_residual, 1e-9);
  // sqrt(0.5) vs 0.5: the unsquared reading disagrees.
  EXPECT_EQ(r.status, ClaimStatus::DiscrepancyDocumented);
  EXPECT_TRUE(r.instances[0].detail["phi_constant"].get<bool>());
}

TEST(RunClaim, Cor3IsVacuousOnCaseI) {
  const auto r = run_claim(ClaimId::COR3_B15, only(corpus::default_corpus(), SurfaceKind::CaseI));
  EXPECT_EQ(r.status, ClaimStatus::Vacuous);
  EXPECT_TRUE(std::isnan(r.max_residual));
}

TEST(RunClaim, Thm7HasQualifyingPoints) {
  const auto r = run_claim(ClaimId::THM7, {corpus::log_spiral(), corpus::tilted_general(), corpus::unit_sphere()});
  EXPECT_EQ(r.status, ClaimStatus::Pass);
  EXPECT_GT(r.instances[0].qualifying, 0u);
  EXPECT_EQ(r.instances[1].qualifying, 0u);  // defect > 0 everywhere
  EXPECT_EQ(r.instances[2].qualifying, 0u);  // F = 0
}

TEST(RunClaim, Cor8ExcludesConstantPhi) {
  const auto r = run_claim(ClaimId::COR8, {corpus::clifford_torus(), corpus::case1_half_angle()});
  EXPECT_EQ(r.status, ClaimStatus::Pass);
  EXPECT_EQ(r.instances[0].qualifying, 0u);
  EXPECT_NEAR(r.instances[1].detail["max_defect"].get<double>(), 0.5, 1e-12);
}

TEST(RunClaim, ToleranceOverride) {
  const auto r = run_claim(ClaimId::COR8, {corpus::case1_half_angle()}, {10, 10}, 0.0);
  EXPECT_EQ(r.status, ClaimStatus::Fail);
  EXPECT_EQ(r.tolerance, 0.0);
}

TEST(RunLedger, DeterministicAndThreadIndependent) {
  const auto corpus_all = corpus::default_corpus();
  const std::vector<ClaimId> ids{ClaimId::PROP1, ClaimId::PROP4, ClaimId::PROP9, ClaimId::EGREGIUM};
  auto dump = [&](unsigned threads) {
    std::string s;
    for (const auto& r : run_ledger(ids, corpus_all, {20, 20}, std::nullopt, threads)) s += to_json(r).dump();
    return s;
  };
  const std::string a = dump(1);
  EXPECT_EQ(a, dump(1));
  EXPECT_EQ(a, dump(3));
}

TEST(RunLedger, EmptyFamilyIsVacuous) {
  const auto r = run_ledger({ClaimId::PROP1, ClaimId::EGREGIUM}, {corpus::unit_sphere()}, {10, 10});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].status, ClaimStatus::Vacuous);
  EXPECT_EQ(r[1].status, ClaimStatus::Pass);
  EXPECT_TRUE(ledger_ok(r));
}

TEST(ToJson, Keys) {
  const auto j = to_json(run_claim(ClaimId::PROP4, {corpus::unit_sphere()}, {10, 10}));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"claim", "status", "max_residual", "tolerance", "instances", "note"}));
  EXPECT_EQ(j["claim"], "PROP4");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["tolerance"].get<double>(), 1e-7);
}

TEST(FullCorpus, ProgrammaticInvariants) {
  const auto all = corpus::default_corpus();
  EXPECT_GE(all.size(), 12u);
  const auto eg = run_claim(ClaimId::EGREGIUM, all);
  EXPECT_EQ(eg.status, ClaimStatus::Pass);
  const auto fd = run_claim(ClaimId::FD_CONSISTENCY, all, {12, 12});
  EXPECT_EQ(fd.status, ClaimStatus::Pass);
}

}  // namespace
