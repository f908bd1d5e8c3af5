#include "knot4/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "knot4/errors.hpp"

namespace knot4 {

GridConfig GridConfig::over(const SurfaceSpec& spec, int nu, int nv, double margin) {
  GridConfig g;
  g.u_min = spec.u_domain().lo + margin;
  g.u_max = spec.u_domain().hi - margin;
  g.v_min = spec.v_domain.lo + margin;
  g.v_max = spec.v_domain.hi - margin;
  g.nu = nu;
  g.nv = nv;
  return g;
}

void GridConfig::validate(const SurfaceSpec& spec) const {
  if (nu < 2 || nv < 2) throw SpecError("grid needs at least 2 points per direction");
  if (!(u_min <= u_max) || !(v_min <= v_max)) throw SpecError("grid ranges must be increasing");
  const double us = 1e-12 * (1.0 + spec.u_domain().length());
  const double vs = 1e-12 * (1.0 + spec.v_domain.length());
  if (!spec.u_domain().contains(u_min, us) || !spec.u_domain().contains(u_max, us) ||
      !spec.v_domain.contains(v_min, vs) || !spec.v_domain.contains(v_max, vs)) {
    throw SpecError("grid range lies outside the surface domain");
  }
}

namespace {

double parse_number(std::string_view s) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw SpecError("bad number in grid: '" + std::string(s) + "'");
  }
  return x;
}

void parse_range(std::string_view part, double& lo, double& hi, int& n) {
  const auto c1 = part.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : part.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw SpecError("grid range must look like a:b:n");
  lo = parse_number(part.substr(0, c1));
  hi = parse_number(part.substr(c1 + 1, c2 - c1 - 1));
  const auto count = part.substr(c2 + 1);
  int value = 0;
  const auto res = std::from_chars(count.data(), count.data() + count.size(), value);
  if (res.ec != std::errc() || res.ptr != count.data() + count.size()) {
    throw SpecError("bad grid count: '" + std::string(count) + "'");
  }
  n = value;
}

}  // namespace

GridConfig parse_grid(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw SpecError("grid must look like a:b:n,c:d:m");
  GridConfig g;
  parse_range(text.substr(0, comma), g.u_min, g.u_max, g.nu);
  parse_range(text.substr(comma + 1), g.v_min, g.v_max, g.nv);
  if (g.nu < 2 || g.nv < 2) throw SpecError("grid needs at least 2 points per direction");
  return g;
}

PointRecord sample_point(const SurfaceSpec& spec, double u, double v) {
  PointRecord r;
  r.jet = surface_jet(spec, u, v);
  r.ff = first_form(r.jet);
  r.ch = christoffel(r.ff);
  r.sff = second_form(r.jet, r.ch);
  r.curv = curvature(r.ff, r.sff);
  r.net = net_sample(r.jet, r.ff, r.ch);
  return r;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<GridPoint> sample_grid(const SurfaceSpec& spec, const GridConfig& grid, unsigned threads) {
  grid.validate(spec);
  std::vector<GridPoint> out(grid.size());
  parallel_for(static_cast<std::size_t>(grid.nu), threads, [&](std::size_t row) {
    const int i = static_cast<int>(row);
    for (int j = 0; j < grid.nv; ++j) {
      GridPoint& p = out[row * static_cast<std::size_t>(grid.nv) + static_cast<std::size_t>(j)];
      p.i = i;
      p.j = j;
      p.u = grid.u_at(i);
      p.v = grid.v_at(j);
      try {
        p.record = sample_point(spec, p.u, p.v);
      } catch (const Error& e) {
        p.skip_reason = e.what();
      }
    }
  });
  return out;
}

namespace {

template <typename Measure>
GridExtremum extremum(const SurfaceSpec& spec, const GridConfig& grid, double tol, unsigned threads,
                      Measure&& measure) {
  GridExtremum r;
  for (const auto& p : sample_grid(spec, grid, threads)) {
    if (!p.ok()) {
      ++r.skipped;
      continue;
    }
    const double m = measure(*p.record);
    if (r.samples == 0 || m > r.max_value) {
      r.max_value = m;
      r.at_u = p.u;
      r.at_v = p.v;
    }
    ++r.samples;
  }
  r.holds = r.samples > 0 && r.max_value < tol;
  return r;
}

}  // namespace

GridExtremum is_flat(const SurfaceSpec& spec, const GridConfig& grid, double tol, unsigned threads) {
  return extremum(spec, grid, tol, threads, [](const PointRecord& r) { return std::fabs(r.curv.K_ext); });
}

GridExtremum is_minimal(const SurfaceSpec& spec, const GridConfig& grid, double tol, unsigned threads) {
  return extremum(spec, grid, tol, threads, [](const PointRecord& r) { return r.curv.H2; });
}

}  // namespace knot4
