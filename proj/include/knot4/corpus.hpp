#pragma once

#include <cstdint>
#include <vector>

#include "knot4/patch.hpp"

namespace knot4::corpus {

inline constexpr std::uint64_t kDefaultSeed = 0x4B4E4F54;

// Case II, lambda = 0, gamma = (-cos u, 0, sin u, 0): the round unit sphere.
SurfaceSpec unit_sphere();
// Case I, phi = 0, gamma = (cos u, sin u, 1, 0): the Clifford torus.
SurfaceSpec clifford_torus();
// Case II, lambda = 0, gamma = (0.5, 0, u, 0): a plane in polar coordinates.
SurfaceSpec plane();
// Case II, lambda = 0, x3 = s u, x1 = c u + d with c = sqrt(1 - s^2).
SurfaceSpec cone(double s, double d);
// Case I, phi = u/2, x1 = (sqrt(3)/2) u.
SurfaceSpec case1_half_angle();
// General, gamma = (0, 0, s u cos(k log u), s u sin(k log u)), k = sqrt(1 - s^2)/s: a
// conjugate net with Gamma^1_12 != 0 (planar region).
SurfaceSpec log_spiral();
// General, gamma = (0.6u, 0, 0.8 + 0.1 sin u, 0.1 cos u); not unit speed.
SurfaceSpec tilted_general();
// General, gamma = (-cos u, 0, sin u, 0).
SurfaceSpec general_sphere();

// Case I, phi = a sin(b u) + c u with max |phi'| < 0.9, x1 completed to unit speed.
std::vector<SurfaceSpec> random_case1(std::uint64_t seed, int count);
// Case II, x3 = a + b sin(w u + p), random lambda, x1 completed to unit speed.
std::vector<SurfaceSpec> random_case2(std::uint64_t seed, int count);

// x3 = a e^{cu} + b e^{-cu}, family "cor5_pseudo", param c.
SurfaceSpec cor5_pseudo(double c);
// x3 = a cos(cu) + b sin(cu), family "cor5_spher", param c.
SurfaceSpec cor5_spher(double c);
// x3 = a u + b, family "cor5_flat".
SurfaceSpec cor5_flat(double a, double b);

// Every built-in family, deterministic for a given seed.
std::vector<SurfaceSpec> default_corpus(std::uint64_t seed = kDefaultSeed);

}  // namespace knot4::corpus
