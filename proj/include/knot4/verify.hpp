#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "knot4/patch.hpp"

namespace knot4::verify {

enum class ClaimId {
  PROP1,
  PROP2_B12,
  COR3_B15,
  PROP4,
  COR5_PSEUDO,
  COR5_SPHER,
  COR5_FLAT,
  PROP6,
  THM7,
  COR8,
  PROP9,
  EGREGIUM,
  FD_CONSISTENCY,
};

inline constexpr ClaimId kAllClaims[] = {
    ClaimId::PROP1,   ClaimId::PROP2_B12, ClaimId::COR3_B15, ClaimId::PROP4, ClaimId::COR5_PSEUDO,
    ClaimId::COR5_SPHER, ClaimId::COR5_FLAT, ClaimId::PROP6, ClaimId::THM7,  ClaimId::COR8,
    ClaimId::PROP9,   ClaimId::EGREGIUM,  ClaimId::FD_CONSISTENCY,
};

enum class ClaimStatus { Pass, Fail, DiscrepancyDocumented, Vacuous };

const char* claim_name(ClaimId id) noexcept;
std::optional<ClaimId> claim_from_name(std::string_view name);
const char* status_name(ClaimStatus s) noexcept;

double default_tolerance(ClaimId id) noexcept;

// Whether a spec belongs to the family the claim is stated for.
bool claim_applies(ClaimId id, const SurfaceSpec& spec);

struct GridShape {
  int nu = 50;
  int nv = 50;
};

struct InstanceResult {
  std::string name;
  double max_residual = 0;      // over qualifying samples; 0 if none
  std::size_t samples = 0;      // regular points evaluated
  std::size_t qualifying = 0;   // points meeting the claim's precondition
  std::size_t skipped = 0;      // degenerate points
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
};

struct ClaimReport {
  ClaimId claim = ClaimId::PROP1;
  ClaimStatus status = ClaimStatus::Vacuous;
  double max_residual = 0;      // NaN when vacuous
  double tolerance = 0;
  std::vector<InstanceResult> instances;
  std::string note;
};

// Throws CorpusError if the corpus is empty or contains a spec outside the claim's family.
ClaimReport run_claim(ClaimId id, const std::vector<SurfaceSpec>& corpus, GridShape grid = {},
                      std::optional<double> tol = std::nullopt, unsigned threads = 1);

// Runs each claim on the applicable subset of corpus (vacuous when empty).
std::vector<ClaimReport> run_ledger(const std::vector<ClaimId>& claims, const std::vector<SurfaceSpec>& corpus,
                                    GridShape grid = {}, std::optional<double> tol = std::nullopt,
                                    unsigned threads = 1);

// {"claim", "status", "max_residual", "tolerance", "instances", "note"}
nlohmann::ordered_json to_json(const ClaimReport& r);

// True when no report has status Fail.
bool ledger_ok(const std::vector<ClaimReport>& reports);

}  // namespace knot4::verify
