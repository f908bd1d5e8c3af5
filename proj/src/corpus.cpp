#include "knot4/corpus.hpp"

#include <cmath>
#include <random>
#include <string>

#include "knot4/expr.hpp"
#include "knot4/knots.hpp"

namespace knot4::corpus {

namespace {

using expr::parse;

// mt19937_64 output is fixed by the standard; std distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

 private:
  std::mt19937_64 engine_;
};

SurfaceSpec named(SurfaceSpec s, std::string name, std::string family = {}) {
  s.name = std::move(name);
  s.family = std::move(family);
  return s;
}

}  // namespace

SurfaceSpec unit_sphere() {
  return named(make_case2(parse("-cos(u)"), parse("0"), parse("sin(u)"), 0.0, {}, {0.2, 1.4}), "unit_sphere");
}

SurfaceSpec clifford_torus() {
  return named(make_case1(parse("cos(u)"), parse("sin(u)"), parse("0"), {}, {0.0, 2.0 * std::numbers::pi}),
               "clifford_torus");
}

SurfaceSpec plane() {
  return named(make_case2(parse("0.5"), parse("0"), parse("u"), 0.0, {}, {0.5, 2.0}), "plane");
}

SurfaceSpec cone(double s, double d) {
  ParamMap p{{"s", s}, {"c", std::sqrt(1.0 - s * s)}, {"d", d}};
  return named(make_case2(parse("c*u + d", p), parse("0"), parse("s*u", p), 0.0, p, {0.5, 2.0}), "cone");
}

SurfaceSpec case1_half_angle() {
  return named(make_case1(parse("sqrt(3)/2*u"), parse("0"), parse("u/2"), {}, {0.0, 3.0}), "case1_half_angle");
}

SurfaceSpec log_spiral() {
  const double s = 0.6;
  ParamMap p{{"s", s}, {"k", std::sqrt(1.0 - s * s) / s}};
  CurveSpec c;
  c.params = p;
  c.domain = {0.5, 2.0};
  c.x = {parse("0"), parse("0"), parse("s*u*cos(k*log(u))", p), parse("s*u*sin(k*log(u))", p)};
  return named(make_general(std::move(c)), "log_spiral");
}

SurfaceSpec tilted_general() {
  CurveSpec c;
  c.domain = {0.0, 3.0};
  c.x = {parse("0.6*u"), parse("0"), parse("0.8 + 0.1*sin(u)"), parse("0.1*cos(u)")};
  return named(make_general(std::move(c)), "tilted_general");
}

SurfaceSpec general_sphere() {
  CurveSpec c;
  c.domain = {0.2, 1.4};
  c.x = {parse("-cos(u)"), parse("0"), parse("sin(u)"), parse("0")};
  return named(make_general(std::move(c)), "general_sphere");
}

std::vector<SurfaceSpec> random_case1(std::uint64_t seed, int count) {
  Rng rng(seed ^ 0x1111);
  std::vector<SurfaceSpec> out;
  for (int i = 0; i < count; ++i) {
    double a = rng.uniform(0.1, 0.5);
    const double b = rng.uniform(0.5, 1.5);
    double c = rng.uniform(-0.3, 0.3);
    const double bound = std::fabs(a * b) + std::fabs(c);
    if (bound > 0.85) {
      a *= 0.85 / bound;
      c *= 0.85 / bound;
    }
    ParamMap p{{"a", a}, {"b", b}, {"c", c}};
    out.push_back(named(complete_case1(parse("a*sin(b*u) + c*u", p), p, {0.0, 3.0}, rng.uniform(-1.0, 1.0)),
                        "random_case1_" + std::to_string(i)));
  }
  return out;
}

std::vector<SurfaceSpec> random_case2(std::uint64_t seed, int count) {
  Rng rng(seed ^ 0x2222);
  std::vector<SurfaceSpec> out;
  for (int i = 0; i < count; ++i) {
    const double a = rng.uniform(0.8, 1.2);
    double b = rng.uniform(0.1, 0.4);
    const double w = rng.uniform(0.5, 2.0);
    const double ph = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double lambda = rng.uniform(-1.0, 1.0);
    // keep (1 + lambda^2) x3'^2 <= 0.64
    const double slope = std::sqrt(1.0 + lambda * lambda) * b * w;
    if (slope > 0.8) b *= 0.8 / slope;
    ParamMap p{{"a", a}, {"b", b}, {"w", w}, {"p", ph}};
    out.push_back(named(complete_case2(parse("a + b*sin(w*u + p)", p), lambda, p, {0.0, 3.0}, rng.uniform(-1.0, 1.0)),
                        "random_case2_" + std::to_string(i)));
  }
  return out;
}

SurfaceSpec cor5_pseudo(double c) {
  ParamMap p{{"a", 0.3 / c}, {"b", 0.2 / c}, {"c", c}};
  return named(complete_case2(parse("a*exp(c*u) + b*exp(-c*u)", p), 0.0, p, {0.0, 0.8 / c}),
               "cor5_pseudo_c" + std::to_string(c).substr(0, 3), "cor5_pseudo");
}

SurfaceSpec cor5_spher(double c) {
  ParamMap p{{"a", 0.5 / c}, {"b", 0.1 / c}, {"c", c}};
  return named(complete_case2(parse("a*cos(c*u) + b*sin(c*u)", p), 0.0, p, {0.0, 1.2 / c}),
               "cor5_spher_c" + std::to_string(c).substr(0, 3), "cor5_spher");
}

SurfaceSpec cor5_flat(double a, double b) {
  ParamMap p{{"a", a}, {"b", b}};
  return named(complete_case2(parse("a*u + b", p), 0.0, p, {0.0, 2.0}), "cor5_flat", "cor5_flat");
}

std::vector<SurfaceSpec> default_corpus(std::uint64_t seed) {
  std::vector<SurfaceSpec> out{unit_sphere(), clifford_torus(), plane(), cone(0.6, 0.3), case1_half_angle(),
                               log_spiral(), tilted_general(), general_sphere()};
  for (auto& s : random_case1(seed, 5)) out.push_back(std::move(s));
  for (auto& s : random_case2(seed, 5)) out.push_back(std::move(s));
  for (double c : {0.5, 1.0, 2.0}) out.push_back(cor5_pseudo(c));
  for (double c : {0.5, 1.0, 2.0}) out.push_back(cor5_spher(c));
  out.push_back(cor5_flat(0.6, 0.5));
  return out;
}

}  // namespace knot4::corpus
