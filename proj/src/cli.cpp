#include "knot4/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knot4/corpus.hpp"
#include "knot4/errors.hpp"
#include "knot4/sampling.hpp"
#include "knot4/spec_json.hpp"
#include "knot4/verify.hpp"

namespace knot4::cli {

namespace {

using nlohmann::ordered_json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Options {
  std::string spec;
  std::string spec_dir;
  std::string grid;
  std::string out;
  std::string project = "drop-x4";
  std::string seed;
  std::string claims;
  std::string direction = "minus1";
  std::optional<double> tol;
  double u = kNaN, v = kNaN;
  int nu = 50, nv = 50;
  unsigned threads = 1;
};

// Writes to --out when given, otherwise to the command's stdout.
void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw SpecError("cannot open output file '" + opt.out + "'");
  f << text;
  if (!f) throw SpecError("failed writing '" + opt.out + "'");
}

std::uint64_t parse_seed(const std::string& text) {
  std::string_view s = text;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  std::uint64_t seed = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), seed, 16);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw SpecError("seed must be hexadecimal, got '" + text + "'");
  }
  return seed;
}

SurfaceSpec require_spec(const Options& opt) {
  if (opt.spec.empty()) throw SpecError("--spec is required");
  return load_spec(opt.spec);
}

GridConfig grid_for(const Options& opt, const SurfaceSpec& spec) {
  GridConfig g = opt.grid.empty() ? GridConfig::over(spec, opt.nu, opt.nv) : parse_grid(opt.grid);
  g.validate(spec);
  return g;
}

ordered_json vec_json(const AmbientVec& x) { return ordered_json::array({x[0], x[1], x[2], x[3]}); }

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

int cmd_eval(const Options& opt, std::ostream& out) {
  const SurfaceSpec spec = require_spec(opt);
  if (!std::isfinite(opt.u) || !std::isfinite(opt.v)) throw SpecError("--u and --v are required");
  const PointRecord r = sample_point(spec, opt.u, opt.v);
  ordered_json j;
  j["spec"] = spec.name;
  j["u"] = opt.u;
  j["v"] = opt.v;
  j["X"] = vec_json(r.jet.X);
  j["Xu"] = vec_json(r.jet.Xu);
  j["Xv"] = vec_json(r.jet.Xv);
  j["E"] = r.ff.E;
  j["F"] = r.ff.F;
  j["G"] = r.ff.G;
  j["W2"] = r.ff.W2;
  j["K"] = r.curv.K_ext;
  j["K_ext"] = r.curv.K_ext;
  j["K_int"] = r.curv.K_int;
  j["K_rot"] = r.curv.K_rot ? ordered_json(*r.curv.K_rot) : ordered_json(nullptr);
  j["H"] = vec_json(r.curv.H_vec);
  j["H2"] = r.curv.H2;
  j["christoffel"] = {{"g111", r.ch.g111}, {"g112", r.ch.g112}, {"g122", r.ch.g122},
                      {"g211", r.ch.g211}, {"g212", r.ch.g212}, {"g222", r.ch.g222}};
  j["defect"] = r.net.defect;
  j["h_inv"] = r.net.h_inv;
  j["k_inv"] = r.net.k_inv;
  emit(opt, out, j.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// grid
// ---------------------------------------------------------------------------

// H1..H4 are the mean curvature vector; its squared norm is H_norm2 so that
// every header is unique.
constexpr const char* kGridHeader =
    "u,v,X1,X2,X3,X4,E,F,G,W2,K_ext,K_int,H1,H2,H3,H4,H_norm2,defect,gamma112,gamma212,h_inv,k_inv\n";
constexpr int kGridValueColumns = 20;

void append_row(std::string& s, std::initializer_list<double> values) {
  bool first = true;
  for (double x : values) {
    if (!first) s += ',';
    s += format_number(x);
    first = false;
  }
  s += '\n';
}

int cmd_grid(const Options& opt, std::ostream& out) {
  const SurfaceSpec spec = require_spec(opt);
  const GridConfig g = grid_for(opt, spec);
  std::string csv = kGridHeader;
  for (const auto& p : sample_grid(spec, g, opt.threads)) {
    if (!p.ok()) {
      std::string row = format_number(p.u) + "," + format_number(p.v);
      for (int c = 0; c < kGridValueColumns; ++c) row += ",nan";
      csv += row + "\n";
      continue;
    }
    const PointRecord& r = *p.record;
    const AmbientVec& X = r.jet.X;
    const AmbientVec& H = r.curv.H_vec;
    append_row(csv, {p.u, p.v, X[0], X[1], X[2], X[3], r.ff.E, r.ff.F, r.ff.G, r.ff.W2, r.curv.K_ext, r.curv.K_int,
                     H[0], H[1], H[2], H[3], r.curv.H2, r.net.defect, r.ch.g112, r.ch.g212, r.net.h_inv,
                     r.net.k_inv});
  }
  emit(opt, out, csv);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

std::vector<verify::ClaimId> parse_claims(const std::string& text) {
  if (text.empty()) return {std::begin(verify::kAllClaims), std::end(verify::kAllClaims)};
  std::vector<verify::ClaimId> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto id = verify::claim_from_name(item);
    if (!id) throw SpecError("unknown claim '" + item + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) throw SpecError("--claims is empty");
  return ids;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const auto claims = parse_claims(opt.claims);
  std::vector<SurfaceSpec> corpus;
  ordered_json source;
  if (!opt.spec_dir.empty()) {
    corpus = load_spec_dir(opt.spec_dir);
    if (corpus.empty()) throw CorpusError("no *.json specs in '" + opt.spec_dir + "'");
    source = {{"spec_dir", opt.spec_dir}};
  } else if (!opt.spec.empty()) {
    corpus.push_back(load_spec(opt.spec));
    source = {{"spec", opt.spec}};
  } else {
    const std::uint64_t seed = opt.seed.empty() ? corpus::kDefaultSeed : parse_seed(opt.seed);
    corpus = corpus::default_corpus(seed);
    std::ostringstream hex;
    hex << "0x" << std::hex << std::uppercase << seed;
    source = {{"builtin_seed", hex.str()}};
  }
  const auto reports = verify::run_ledger(claims, corpus, {opt.nu, opt.nv}, opt.tol, opt.threads);
  ordered_json j;
  j["source"] = source;
  j["grid"] = {{"nu", opt.nu}, {"nv", opt.nv}};
  j["ok"] = verify::ledger_ok(reports);
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(verify::to_json(r));
  j["claims"] = std::move(arr);
  emit(opt, out, j.dump(2) + "\n");
  return verify::ledger_ok(reports) ? kExitOk : kExitClaimFailed;
}

// ---------------------------------------------------------------------------
// laplace
// ---------------------------------------------------------------------------

int cmd_laplace(const Options& opt, std::ostream& out) {
  if (opt.direction != "minus1" && opt.direction != "plus1") {
    throw SpecError("--direction must be minus1 or plus1");
  }
  const bool minus = opt.direction == "minus1";
  const SurfaceSpec spec = require_spec(opt);
  const GridConfig g = grid_for(opt, spec);
  std::string csv = "u,v,Y1,Y2,Y3,Y4\n";
  for (const auto& p : sample_grid(spec, g, opt.threads)) {
    std::optional<AmbientVec> y;
    if (p.ok()) {
      try {
        y = minus ? laplace_minus(p.record->jet, p.record->ch) : laplace_plus(p.record->jet, p.record->ch);
      } catch (const DegenerateNet&) {
      }
    }
    if (y) {
      append_row(csv, {p.u, p.v, (*y)[0], (*y)[1], (*y)[2], (*y)[3]});
    } else {
      append_row(csv, {p.u, p.v, kNaN, kNaN, kNaN, kNaN});
    }
  }
  emit(opt, out, csv);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// mesh
// ---------------------------------------------------------------------------

struct Projection {
  std::array<AmbientVec, 3> axes;  // orthonormal rows
};

Projection parse_projection(const std::string& mode) {
  Projection p;
  if (mode.rfind("drop-x", 0) == 0 && mode.size() == 7 && mode[6] >= '1' && mode[6] <= '4') {
    const int drop = mode[6] - '1';
    int row = 0;
    for (int c = 0; c < 4; ++c) {
      if (c == drop) continue;
      p.axes[row] = AmbientVec{};
      p.axes[row][c] = 1.0;
      ++row;
    }
    return p;
  }
  if (mode.rfind("ortho:", 0) != 0) {
    throw SpecError("--project must be drop-x1..drop-x4 or ortho:a,b,c,d");
  }
  AmbientVec n;
  std::stringstream ss(mode.substr(6));
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 4) throw SpecError("orthographic direction needs 4 components");
    try {
      std::size_t used = 0;
      n[k] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw SpecError("bad component '" + item + "' in --project");
    }
    ++k;
  }
  if (k != 4) throw SpecError("orthographic direction needs 4 components");
  if (std::fabs(norm(n) - 1.0) > 1e-6) throw SpecError("orthographic direction must be a unit vector");
  // Gram-Schmidt of the coordinate axes against n; keep the first three survivors.
  std::vector<AmbientVec> basis{n};
  int row = 0;
  for (int c = 0; c < 4 && row < 3; ++c) {
    AmbientVec e;
    e[c] = 1.0;
    for (const auto& b : basis) e = e - dot(e, b) * b;
    const double len = norm(e);
    if (len < 1e-8) continue;
    e = (1.0 / len) * e;
    basis.push_back(e);
    p.axes[row++] = e;
  }
  return p;
}

// Nearest regular vertex in index distance, scanning rows outward.
std::optional<std::size_t> nearest_valid(const std::vector<GridPoint>& pts, const GridConfig& g, int i, int j) {
  const int reach = std::max(g.nu, g.nv);
  for (int r = 1; r <= reach; ++r) {
    for (int di = -r; di <= r; ++di) {
      for (int dj = -r; dj <= r; ++dj) {
        if (std::max(std::abs(di), std::abs(dj)) != r) continue;
        const int a = i + di, b = j + dj;
        if (a < 0 || b < 0 || a >= g.nu || b >= g.nv) continue;
        const std::size_t idx = static_cast<std::size_t>(a) * g.nv + b;
        if (pts[idx].ok()) return idx;
      }
    }
  }
  return std::nullopt;
}

int cmd_mesh(const Options& opt, std::ostream& out) {
  if (opt.out.empty()) throw SpecError("mesh needs --out <file.obj>");
  const SurfaceSpec spec = require_spec(opt);
  const GridConfig g = grid_for(opt, spec);
  const Projection proj = parse_projection(opt.project);
  const auto pts = sample_grid(spec, g, opt.threads);

  std::string obj = "# knot4 mesh: " + spec.name + ", projection " + opt.project + "\n";
  ordered_json skipped = ordered_json::array();
  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    const GridPoint& p = pts[idx];
    std::size_t src = idx;
    if (!p.ok()) {
      const auto near = nearest_valid(pts, g, p.i, p.j);
      if (!near) throw DegenerateMetric("every grid point of '" + spec.name + "' is degenerate");
      src = *near;
      skipped.push_back({{"i", p.i}, {"j", p.j}, {"u", p.u}, {"v", p.v}, {"reason", p.skip_reason},
                         {"collapsed_onto", {{"i", pts[src].i}, {"j", pts[src].j}}}});
    }
    const AmbientVec& X = pts[src].record->jet.X;
    obj += "v " + format_number(dot(proj.axes[0], X)) + " " + format_number(dot(proj.axes[1], X)) + " " +
           format_number(dot(proj.axes[2], X)) + "\n";
  }
  for (int i = 0; i + 1 < g.nu; ++i) {
    for (int j = 0; j + 1 < g.nv; ++j) {
      const std::size_t a = static_cast<std::size_t>(i) * g.nv + j + 1;  // OBJ indices are 1-based
      const std::size_t b = a + g.nv;
      obj += "f " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(b + 1) + "\n";
      obj += "f " + std::to_string(a) + " " + std::to_string(b + 1) + " " + std::to_string(a + 1) + "\n";
    }
  }
  emit(opt, out, obj);

  ordered_json side;
  side["mesh"] = opt.out;
  side["vertices"] = pts.size();
  side["faces"] = 2 * static_cast<std::size_t>(g.nu - 1) * static_cast<std::size_t>(g.nv - 1);
  side["skipped"] = std::move(skipped);
  Options side_opt = opt;
  side_opt.out = opt.out + ".skipped.json";
  emit(side_opt, out, side.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotational surfaces in E^4: curvature, conjugate nets, claim checks", "knot4"};
  app.require_subcommand(1);
  Options opt;

  auto add_spec = [&](CLI::App* c) { c->add_option("--spec", opt.spec, "Surface spec JSON file"); };
  auto add_grid = [&](CLI::App* c) {
    c->add_option("--grid", opt.grid, "Sample grid a:b:n,c:d:m (default: whole domain, --nu x --nv)");
    c->add_option("--nu", opt.nu, "Default grid rows")->check(CLI::Range(2, 1 << 20));
    c->add_option("--nv", opt.nv, "Default grid columns")->check(CLI::Range(2, 1 << 20));
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", opt.out, "Output file (default stdout)");
    c->add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  };

  auto* eval = app.add_subcommand("eval", "Evaluate the geometry at one parameter point (JSON)");
  add_spec(eval);
  add_common(eval);
  eval->add_option("--u", opt.u, "u parameter")->required();
  eval->add_option("--v", opt.v, "v parameter")->required();

  auto* grid = app.add_subcommand("grid", "Sample a grid to CSV");
  add_spec(grid);
  add_grid(grid);
  add_common(grid);

  auto* check = app.add_subcommand("check", "Run claim checks and print the ledger (JSON)");
  add_spec(check);
  check->add_option("--spec-dir", opt.spec_dir, "Directory of spec JSON files");
  check->add_option("--claims", opt.claims, "Comma-separated claim ids (default all)");
  check->add_option("--tol", opt.tol, "Override every claim tolerance");
  check->add_option("--seed", opt.seed, "Hex seed for the built-in corpus");
  check->add_option("--nu", opt.nu, "Grid rows per instance")->check(CLI::Range(2, 1 << 20));
  check->add_option("--nv", opt.nv, "Grid columns per instance")->check(CLI::Range(2, 1 << 20));
  add_common(check);

  auto* laplace = app.add_subcommand("laplace", "Laplace transform of the parametric net to CSV");
  add_spec(laplace);
  add_grid(laplace);
  add_common(laplace);
  laplace->add_option("--direction", opt.direction, "minus1 (X - Xu/G^2_12) or plus1 (X - Xv/G^1_12)");

  auto* mesh = app.add_subcommand("mesh", "Export a projected triangle mesh (OBJ)");
  add_spec(mesh);
  add_grid(mesh);
  add_common(mesh);
  mesh->add_option("--project", opt.project, "drop-x1..drop-x4 or ortho:a,b,c,d");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "knot4: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*eval) return cmd_eval(opt, out);
    if (*grid) return cmd_grid(opt, out);
    if (*check) return cmd_check(opt, out);
    if (*laplace) return cmd_laplace(opt, out);
    if (*mesh) return cmd_mesh(opt, out);
  } catch (const Error& e) {
    err << "knot4: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "knot4: bad JSON: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "knot4: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

int run(const std::vector<std::string>& args) { return run(args, std::cout, std::cerr); }

}  // namespace knot4::cli
