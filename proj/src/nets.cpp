#include "knot4/nets.hpp"

#include <cmath>

#include "knot4/errors.hpp"
#include "knot4/sampling.hpp"

namespace knot4 {

double d_u_gamma112(const FirstFormJet& f, const Christoffel& c) {
  // Gamma^1_12 = (G E_v - F G_u) / (2 W2)
  const double num_u = f.G_u * f.E_v + f.G * f.E_uv - f.F_u * f.G_u - f.F * f.G_uu;
  return num_u / (2.0 * f.W2) - c.g112 * f.W2_u() / f.W2;
}

double d_v_gamma212(const FirstFormJet& f, const Christoffel& c) {
  // Gamma^2_12 = (E G_u - F E_v) / (2 W2)
  const double num_v = f.E_v * f.G_u + f.E * f.G_uv - f.F_v * f.E_v - f.F * f.E_vv;
  return num_v / (2.0 * f.W2) - c.g212 * f.W2_v() / f.W2;
}

NetSample net_sample(const PatchJet& j, const FirstFormJet& f, const Christoffel& c) {
  NetSample s;
  s.u = j.u;
  s.v = j.v;
  s.gamma112 = c.g112;
  s.gamma212 = c.g212;
  s.defect = norm(j.Xuv - c.g112 * j.Xu - c.g212 * j.Xv);
  const double product = c.g112 * c.g212;
  s.h_inv = d_u_gamma112(f, c) - product;
  s.k_inv = d_v_gamma212(f, c) - product;
  return s;
}

ConjugacyReport is_conjugate(const SurfaceSpec& spec, const GridConfig& grid, double tol, unsigned threads) {
  const auto points = sample_grid(spec, grid, threads);
  ConjugacyReport r;
  for (const auto& p : points) {
    if (!p.ok()) {
      ++r.skipped;
      continue;
    }
    ++r.samples;
    if (p.record->net.defect > r.max_defect || r.samples == 1) {
      r.max_defect = p.record->net.defect;
      r.at_u = p.u;
      r.at_v = p.v;
    }
  }
  r.conjugate = r.samples > 0 && r.max_defect < tol;
  return r;
}

AmbientVec laplace_minus(const PatchJet& j, const Christoffel& c) {
  if (!(std::fabs(c.g212) > kLaplaceEps)) {
    throw DegenerateNet("Gamma^2_12 vanishes: net is not u-direction normal, X_-1 undefined");
  }
  return j.X - (1.0 / c.g212) * j.Xu;
}

AmbientVec laplace_plus(const PatchJet& j, const Christoffel& c) {
  if (!(std::fabs(c.g112) > kLaplaceEps)) {
    throw DegenerateNet("Gamma^1_12 vanishes: net is not v-direction normal, X_1 undefined");
  }
  return j.X - (1.0 / c.g112) * j.Xv;
}

double prop6_defect(const SurfaceSpec& spec, double u, double v, double du) {
  auto transform = [&](double uu) {
    const PatchJet j = surface_jet(spec, uu, v);
    return laplace_plus(j, christoffel(first_form(j)));
  };
  const AmbientVec d = (1.0 / (2.0 * du)) * (transform(u + du) - transform(u - du));
  const AmbientVec xv = surface_jet(spec, u, v).Xv;
  const double nd = norm(d);
  const double nv = norm(xv);
  if (nd < 1e-12 || nv < 1e-12) return 0.0;
  const AmbientVec perp = d - (dot(d, xv) / (nv * nv)) * xv;
  return norm(perp) / nd;
}

}  // namespace knot4
