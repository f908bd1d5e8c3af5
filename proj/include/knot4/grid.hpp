#pragma once

#include <string_view>

#include "knot4/patch.hpp"

namespace knot4 {

// Uniform parameter grid, endpoints included; u is the outer index.
struct GridConfig {
  double u_min = 0, u_max = 1;
  int nu = 2;
  double v_min = 0, v_max = 1;
  int nv = 2;

  // Whole surface domain shrunk by margin on every side.
  static GridConfig over(const SurfaceSpec& spec, int nu, int nv, double margin = 0.0);

  double u_at(int i) const noexcept { return u_min + (u_max - u_min) * i / (nu - 1); }
  double v_at(int j) const noexcept { return v_min + (v_max - v_min) * j / (nv - 1); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(nu) * static_cast<std::size_t>(nv); }

  // Throws SpecError unless nu, nv >= 2 and the ranges lie inside the spec domain.
  void validate(const SurfaceSpec& spec) const;
};

// "a:b:n,c:d:m"
GridConfig parse_grid(std::string_view text);

}  // namespace knot4
