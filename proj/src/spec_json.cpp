#include "knot4/spec_json.hpp"

#include <algorithm>
#include <fstream>

#include "knot4/errors.hpp"
#include "knot4/knots.hpp"

namespace knot4 {

namespace {

using nlohmann::json;

const json* field(const json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string text_field(const json& j, const char* key, const char* fallback = nullptr) {
  if (const json* f = field(j, key)) {
    if (f->is_string()) return f->get<std::string>();
    if (f->is_number()) return json(f->get<double>()).dump();
    throw SpecError(std::string("field '") + key + "' must be an expression string");
  }
  if (fallback) return fallback;
  throw SpecError(std::string("missing field '") + key + "'");
}

double number_field(const json& j, const char* key, double fallback) {
  if (const json* f = field(j, key)) {
    if (!f->is_number()) throw SpecError(std::string("field '") + key + "' must be a number");
    return f->get<double>();
  }
  return fallback;
}

Interval interval_field(const json& j, const char* key, std::optional<Interval> fallback) {
  const json* f = field(j, key);
  if (!f) {
    if (fallback) return *fallback;
    throw SpecError(std::string("missing field '") + key + "'");
  }
  if (!f->is_array() || f->size() != 2 || !(*f)[0].is_number() || !(*f)[1].is_number()) {
    throw SpecError(std::string("field '") + key + "' must be [lo, hi]");
  }
  Interval d{(*f)[0].get<double>(), (*f)[1].get<double>()};
  if (!(d.lo < d.hi)) throw SpecError(std::string("field '") + key + "' must satisfy lo < hi");
  return d;
}

json interval_json(const Interval& d) { return json::array({d.lo, d.hi}); }

}  // namespace

SurfaceSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("surface spec must be a JSON object");
  ParamMap params;
  if (const json* p = field(j, "params")) {
    if (!p->is_object()) throw SpecError("'params' must be an object");
    for (const auto& [name, value] : p->items()) {
      if (!value.is_number()) throw SpecError("parameter '" + name + "' must be a number");
      params[name] = value.get<double>();
    }
  }
  auto expr_of = [&](const char* key, const char* fallback = nullptr) {
    return expr::parse(text_field(j, key, fallback), params);
  };

  const std::string kind = text_field(j, "kind");
  const Interval ud = interval_field(j, "u_domain", std::nullopt);
  const bool complete = field(j, "unit_speed_complete") && j.at("unit_speed_complete").get<bool>();
  const double offset = number_field(j, "x1_offset", 0.0);
  const double lambda = number_field(j, "lambda", 0.0);

  SurfaceSpec s;
  if (kind == "general") {
    if (complete) {
      s = make_general(complete_unit_speed(expr_of("x3"), lambda, offset, params, ud));
      s.lambda = lambda;
      s.unit_speed_complete = true;
    } else {
      CurveSpec c;
      c.params = params;
      c.domain = ud;
      c.x = {expr_of("x1"), expr_of("x2"), expr_of("x3"), expr_of("x4")};
      s = make_general(std::move(c));
    }
  } else if (kind == "case1") {
    if (complete) {
      s = complete_case1(expr_of("phi"), params, ud, offset);
    } else {
      s = make_case1(expr_of("x1"), expr_of("x2", "0"), expr_of("phi"), params, ud);
    }
  } else if (kind == "case2") {
    if (complete) {
      s = complete_case2(expr_of("x3"), lambda, params, ud, offset);
    } else {
      s = make_case2(expr_of("x1"), expr_of("x2", "0"), expr_of("x3"), lambda, params, ud);
    }
  } else {
    throw SpecError("unknown kind '" + kind + "' (expected general, case1 or case2)");
  }
  s.v_domain = interval_field(j, "v_domain", Interval{0.0, 2.0 * std::numbers::pi});
  if (const json* n = field(j, "name")) s.name = n->get<std::string>();
  if (const json* f = field(j, "family")) s.family = f->get<std::string>();
  return s;
}

json spec_to_json(const SurfaceSpec& s) {
  json j;
  j["kind"] = kind_name(s.kind);
  if (!s.name.empty()) j["name"] = s.name;
  if (!s.family.empty()) j["family"] = s.family;
  json params = json::object();
  for (const auto& [k, v] : s.params()) params[k] = v;
  j["params"] = params;
  j["u_domain"] = interval_json(s.u_domain());
  j["v_domain"] = interval_json(s.v_domain);
  j["unit_speed_complete"] = s.unit_speed_complete;
  auto text = [&](std::size_t i) { return s.curve.x[i].describe(); };
  if (s.unit_speed_complete) {
    if (const auto* q = s.curve.x[0].quadrature()) j["x1_offset"] = q->offset();
  }
  switch (s.kind) {
    case SurfaceKind::General:
      if (s.unit_speed_complete) {
        j["x3"] = text(2);
        j["lambda"] = s.lambda;
      } else {
        j["x1"] = text(0);
        j["x2"] = text(1);
        j["x3"] = text(2);
        j["x4"] = text(3);
      }
      break;
    case SurfaceKind::CaseI:
      j["phi"] = expr::render(*s.phi);
      if (!s.unit_speed_complete) {
        j["x1"] = text(0);
        j["x2"] = text(1);
      }
      break;
    case SurfaceKind::CaseII:
      j["x3"] = text(2);
      j["lambda"] = s.lambda;
      if (!s.unit_speed_complete) {
        j["x1"] = text(0);
        j["x2"] = text(1);
      }
      break;
  }
  return j;
}

SurfaceSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SpecError("invalid JSON in '" + path.string() + "': " + e.what());
  }
  SurfaceSpec s = spec_from_json(j);
  if (s.name.empty()) s.name = path.stem().string();
  return s;
}

std::vector<SurfaceSpec> load_spec_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw SpecError("not a directory: '" + dir.string() + "'");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<SurfaceSpec> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(load_spec(f));
  return out;
}

}  // namespace knot4
