#pragma once

#include <array>
#include <cmath>

namespace knot4 {

// Point or vector in E^4.
struct AmbientVec {
  std::array<double, 4> c{};

  constexpr double& operator[](std::size_t i) noexcept { return c[i]; }
  constexpr double operator[](std::size_t i) const noexcept { return c[i]; }

  bool finite() const noexcept {
    return std::isfinite(c[0]) && std::isfinite(c[1]) && std::isfinite(c[2]) && std::isfinite(c[3]);
  }

  friend constexpr AmbientVec operator+(const AmbientVec& a, const AmbientVec& b) noexcept {
    return {{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}};
  }
  friend constexpr AmbientVec operator-(const AmbientVec& a, const AmbientVec& b) noexcept {
    return {{a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}};
  }
  friend constexpr AmbientVec operator*(double s, const AmbientVec& a) noexcept {
    return {{s * a[0], s * a[1], s * a[2], s * a[3]}};
  }
  friend constexpr bool operator==(const AmbientVec&, const AmbientVec&) = default;
};

constexpr double dot(const AmbientVec& a, const AmbientVec& b) noexcept {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline double norm(const AmbientVec& a) noexcept { return std::sqrt(dot(a, a)); }

inline double max_abs_diff(const AmbientVec& a, const AmbientVec& b) noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace knot4
