#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "knot4/geom.hpp"
#include "knot4/grid.hpp"
#include "knot4/nets.hpp"
#include "knot4/patch.hpp"

namespace knot4 {

// Everything computed at one regular parameter point.
struct PointRecord {
  PatchJet jet;
  FirstFormJet ff;
  Christoffel ch;
  SecondForm sff;
  CurvatureSample curv;
  NetSample net;
};

struct GridPoint {
  int i = 0, j = 0;
  double u = 0, v = 0;
  std::optional<PointRecord> record;
  std::string skip_reason;

  bool ok() const noexcept { return record.has_value(); }
};

PointRecord sample_point(const SurfaceSpec& spec, double u, double v);

// Row-major (u outer, v inner) regardless of thread count. Points that raise
// a knot4::Error are kept with skip_reason set.
std::vector<GridPoint> sample_grid(const SurfaceSpec& spec, const GridConfig& grid, unsigned threads = 1);

// Calls body(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

struct GridExtremum {
  bool holds = false;
  double max_value = 0;
  double at_u = 0, at_v = 0;
  std::size_t samples = 0;
  std::size_t skipped = 0;
};

// Flat iff max |K_ext| < tol over the grid; minimal iff max H2 < tol.
GridExtremum is_flat(const SurfaceSpec& spec, const GridConfig& grid, double tol, unsigned threads = 1);
GridExtremum is_minimal(const SurfaceSpec& spec, const GridConfig& grid, double tol, unsigned threads = 1);

}  // namespace knot4
