#pragma once

// maglab command line: subcommands finite, cloud, ball, shell, asymptote,
// poles, compare. Each writes <subcommand>.csv (or .json) plus a
// <subcommand>.config.json sidecar echoing the resolved configuration.
// Exit status: 0 ok, 1 computation error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "maglab/cloud.hpp"
#include "maglab/geometry.hpp"
#include "maglab/metric_space.hpp"
#include "maglab/parallel.hpp"
#include "maglab/precision.hpp"
#include "maglab/radial_exact.hpp"
#include "maglab/reconstruct.hpp"
#include "maglab/roots.hpp"

namespace maglab::cli {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Grids

inline double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (!s.empty() && *b == '+') ++b;
  const auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || !std::isfinite(v)) throw UsageError(what + ": '" + s + "' is not a number");
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

/// start:stop:count[:log]
struct Grid {
  double start = 0.0, stop = 0.0;
  int count = 0;
  bool log = false;

  static Grid parse(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() < 3 || parts.size() > 4) throw UsageError("--r-grid: expected start:stop:count[:log]");
    Grid g;
    g.start = parse_double(parts[0], "--r-grid start");
    g.stop = parse_double(parts[1], "--r-grid stop");
    const double c = parse_double(parts[2], "--r-grid count");
    if (c < 1 || c != std::floor(c) || c > 1e7) throw UsageError("--r-grid: count must be a positive integer");
    g.count = static_cast<int>(c);
    if (parts.size() == 4) {
      if (parts[3] == "log")
        g.log = true;
      else if (parts[3] != "lin")
        throw UsageError("--r-grid: fourth field must be 'log' or 'lin'");
    }
    if (g.log && !(g.start > 0.0 && g.stop > 0.0)) throw UsageError("--r-grid: log grids need positive bounds");
    if (g.count > 1 && g.start == g.stop) throw UsageError("--r-grid: start equals stop");
    return g;
  }

  std::vector<double> values() const {
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
      v[i] = log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start))) : start + t * (stop - start);
    }
    return v;
  }

  std::string str() const {
    std::ostringstream os;
    os.precision(17);
    os << start << ':' << stop << ':' << count << (log ? ":log" : "");
    return os.str();
  }
};

/// x0:x1:y0:y1
inline SearchRegion parse_rect(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 4) throw UsageError("--rect: expected x0:x1:y0:y1");
  SearchRegion r;
  r.x0 = parse_double(parts[0], "--rect x0");
  r.x1 = parse_double(parts[1], "--rect x1");
  r.y0 = parse_double(parts[2], "--rect y0");
  r.y1 = parse_double(parts[3], "--rect y1");
  if (!(r.x1 > r.x0) || !(r.y1 > r.y0)) throw UsageError("--rect: need x0 < x1 and y0 < y1");
  return r;
}

// ---------------------------------------------------------------------------
// Tables and reports

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

inline json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return *d;
    return format_double(*d);
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

enum class Format { csv, json };

inline std::string write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open '" + path.string() + "' for writing: " + std::strerror(errno));
  f << content;
  f.flush();
  if (!f) throw Error("write to '" + path.string() + "' failed: " + std::strerror(errno));
  return path.filename().string();
}

inline std::string render_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + format_cell(row[i]);
    s += '\n';
  }
  return s;
}

inline std::string render_json(const Table& t) {
  json j;
  j["columns"] = t.columns;
  j["rows"] = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    j["rows"].push_back(r);
  }
  return j.dump(2) + "\n";
}

/// Writes the table and the sidecar into out_dir. An empty table is an
/// error and nothing is written.
inline std::vector<std::string> emit_report(const Table& t, Format fmt, const std::string& out_dir,
                                            const std::string& stem, json sidecar) {
  if (t.rows.empty()) throw Error("empty result set; no report written");
  for (const auto& r : t.rows)
    if (r.size() != t.columns.size()) throw Error("internal: row width does not match header");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create output directory '" + out_dir + "': " + ec.message());
  const std::filesystem::path dir(out_dir);
  std::vector<std::string> written;
  const std::string table_name = stem + (fmt == Format::csv ? ".csv" : ".json");
  sidecar["outputs"] = {table_name};
  sidecar["columns"] = t.columns;
  sidecar["rows"] = t.rows.size();
  written.push_back(write_file(dir / table_name, fmt == Format::csv ? render_csv(t) : render_json(t)));
  written.push_back(write_file(dir / (stem + ".config.json"), sidecar.dump(2) + "\n"));
  return written;
}

inline json complex_list(const std::vector<cplx>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back({z.real(), z.imag()});
  return a;
}

/// {num: [[re, im], ...], den: [...]}, ascending powers of R.
inline json rational_json(const RationalFunction<double>& r) {
  return {{"num", complex_list(r.num.coefficients())}, {"den", complex_list(r.den.coefficients())}};
}

inline RationalFunction<double> rational_from_json(const json& j) {
  auto read = [](const json& a) {
    std::vector<cplx> c;
    for (const auto& p : a) c.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    return Polynomial<double>(c);
  };
  RationalFunction<double> r;
  r.num = read(j.at("num"));
  r.den = read(j.at("den"));
  return r;
}

// ---------------------------------------------------------------------------
// Configuration

struct RunConfig {
  std::string subcommand;
  std::string shape = "ball";  // ball | shell | box | file | mesh
  std::string model = "ball";  // poles: ball | shell
  std::string method = "census";
  int n = 3;
  double radius = 1.0, inner = 1.0, outer = 2.0;
  std::vector<double> sides;
  double scale = 1.0;
  std::optional<std::string> r_grid;
  std::optional<std::string> rect;
  int rect_count = 11;
  int levels = 3;
  std::size_t cap = kDefaultPointCap;
  double coarsest = 0.0;
  double tol = SolveOptions{}.residual_tolerance;
  double im_max = 40.0;
  std::string points, mesh, config_file;
  bool triangle_check = true;
  std::string out = ".";
  std::string format = "csv";
  long long seed = 0;

  json to_json() const {
    json j;
    j["subcommand"] = subcommand;
    j["shape"] = shape;
    j["model"] = model;
    j["method"] = method;
    j["n"] = n;
    j["radius"] = radius;
    j["inner"] = inner;
    j["outer"] = outer;
    j["sides"] = sides;
    j["scale"] = scale;
    j["r_grid"] = r_grid ? json(*r_grid) : json(nullptr);
    j["rect"] = rect ? json(*rect) : json(nullptr);
    j["rect_count"] = rect_count;
    j["levels"] = levels;
    j["cap"] = cap;
    j["coarsest"] = coarsest;
    j["tol"] = tol;
    j["im_max"] = im_max;
    j["points"] = points;
    j["mesh"] = mesh;
    j["config_file"] = config_file;
    j["triangle_check"] = triangle_check;
    j["out"] = out;
    j["format"] = format;
    j["seed"] = seed;
    j["threads_env"] = std::getenv("MAGLAB_THREADS") ? std::getenv("MAGLAB_THREADS") : "";
    return j;
  }
};

inline json sidecar_base(const RunConfig& cfg) {
  return {{"tool", "maglab"}, {"version", kVersion}, {"config", cfg.to_json()}};
}

inline Format parse_format(const std::string& f) {
  if (f == "csv") return Format::csv;
  if (f == "json") return Format::json;
  throw UsageError("--format must be csv or json");
}

inline void require_odd(int n, const char* what) {
  if (n < 1 || n % 2 == 0) throw UsageError(std::string(what) + ": --n must be an odd integer >= 1");
}

inline void require_positive(double v, const char* flag) {
  if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(std::string(flag) + " must be positive");
}

inline void require_shell(const RunConfig& c) {
  require_positive(c.inner, "--inner");
  if (!(c.outer > c.inner) || !std::isfinite(c.outer)) throw UsageError("--outer must exceed --inner");
}

/// Complex sample points: --rect (rect_count^2 points) or real --r-grid.
inline std::vector<cplx> rate_points(const RunConfig& c, const std::string& default_grid) {
  std::vector<cplx> pts;
  if (c.rect) {
    const auto r = parse_rect(*c.rect);
    if (c.rect_count < 1) throw UsageError("--rect-count must be positive");
    for (int j = 0; j < c.rect_count; ++j)
      for (int i = 0; i < c.rect_count; ++i) {
        const double tx = c.rect_count == 1 ? 0.5 : static_cast<double>(i) / (c.rect_count - 1);
        const double ty = c.rect_count == 1 ? 0.5 : static_cast<double>(j) / (c.rect_count - 1);
        pts.emplace_back(r.x0 + tx * (r.x1 - r.x0), r.y0 + ty * (r.y1 - r.y0));
      }
    return pts;
  }
  for (double v : Grid::parse(c.r_grid.value_or(default_grid)).values()) pts.emplace_back(v, 0.0);
  return pts;
}

// ---------------------------------------------------------------------------
// Subcommands. Each returns the table and fills sidecar["results"].

inline Table cmd_finite(const RunConfig& c, json& results) {
  if (c.points.empty()) throw UsageError("finite: --points FILE is required");
  require_positive(c.tol, "--tol");
  std::vector<double> scales;
  if (c.r_grid) {
    scales = Grid::parse(*c.r_grid).values();
  } else {
    require_positive(c.scale, "--scale");
    scales = {c.scale};
  }
  for (double s : scales)
    if (!(s > 0.0)) throw UsageError("finite: scales must be positive");
  const auto space = read_point_file(c.points, {.check_triangle = c.triangle_check});
  SolveOptions opt;
  opt.residual_tolerance = c.tol;
  Table t{{"R", "N", "magnitude", "residual", "condition", "solver", "positive_definite", "min_eigenvalue"}, {}};
  for (double s : scales) {
    const auto w = weighting(space, s, opt);
    const auto pd = is_positive_definite(space, s);
    t.rows.push_back({s, static_cast<long long>(space.size()), w.sum(), w.residual, w.condition_estimate,
                      std::string(w.used_cholesky ? "cholesky" : "lu"), static_cast<long long>(pd.positive_definite),
                      pd.smallest_eigenvalue});
  }
  results["points"] = space.size();
  return t;
}

inline DomainShape shape_from(const RunConfig& c) {
  try {
    if (c.shape == "ball") return DomainShape::ball(c.n, c.radius);
    if (c.shape == "shell") return DomainShape::shell(c.inner, c.outer);
    if (c.shape == "box") return DomainShape::box(c.sides);
    if (c.shape == "file") {
      if (c.points.empty()) throw UsageError("--shape file needs --points FILE");
      return DomainShape::point_file(c.points);
    }
  } catch (const ArgumentError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown --shape '" + c.shape + "'");
}

inline Table cmd_cloud(const RunConfig& c, json& results) {
  const DomainShape shape = shape_from(c);
  require_positive(c.scale, "--scale");
  if (c.levels < 2) throw UsageError("--levels must be >= 2");
  if (c.cap < 1) throw UsageError("--cap must be positive");
  if (c.coarsest < 0.0) throw UsageError("--coarsest must be nonnegative");
  RefinementOptions opt;
  opt.cap = c.cap;
  opt.coarsest = c.coarsest;
  opt.solve.residual_tolerance = c.tol;
  const auto rep = refinement_sequence(shape, c.scale, c.levels, opt);
  Table t{{"level", "h", "N", "magnitude"}, {}};
  for (std::size_t l = 0; l < rep.magnitudes.size(); ++l)
    t.rows.push_back({static_cast<long long>(l), rep.resolutions[l], static_cast<long long>(rep.counts[l]),
                      rep.magnitudes[l]});
  results["extrapolated"] = std::isfinite(rep.extrapolated) ? json(rep.extrapolated) : json(nullptr);
  results["uncertainty"] = std::isfinite(rep.uncertainty) ? json(rep.uncertainty) : json(nullptr);
  results["fitted_power"] = std::isfinite(rep.fitted_power) ? json(rep.fitted_power) : json(nullptr);
  results["shape"] = to_string(shape.kind);
  return t;
}

template <class Eval>
Table complex_sweep(const std::vector<cplx>& pts, Eval&& eval) {
  std::vector<cplx> values(pts.size());
  std::vector<AdaptiveReport> reps(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { values[i] = eval(pts[i], &reps[i]); });
  Table t{{"R_re", "R_im", "M_re", "M_im", "digits", "condition"}, {}};
  for (std::size_t i = 0; i < pts.size(); ++i)
    t.rows.push_back({pts[i].real(), pts[i].imag(), values[i].real(), values[i].imag(),
                      static_cast<long long>(reps[i].digits), reps[i].condition});
  return t;
}

inline Table cmd_ball(const RunConfig& c, json& results) {
  require_odd(c.n, "ball");
  require_positive(c.radius, "--radius");
  const auto pts = rate_points(c, "0.1:10:100");
  for (const auto& z : pts)
    if (z == cplx(0)) throw UsageError("ball: R = 0 is not allowed");
  results["shape"] = "ball";
  return complex_sweep(pts, [&](cplx R, AdaptiveReport* rep) { return exact_ball_magnitude(c.n, R, c.radius, {}, rep); });
}

inline Table cmd_shell(const RunConfig& c, json& results) {
  require_shell(c);
  const auto pts = rate_points(c, "0.1:10:100");
  for (const auto& z : pts)
    if (z == cplx(0)) throw UsageError("shell: R = 0 is not allowed");
  results["shape"] = "shell";
  return complex_sweep(pts, [&](cplx R, AdaptiveReport* rep) {
    return exact_shell_magnitude(c.inner, c.outer, R, {}, rep);
  });
}

inline json invariants_json(const GeometricInvariants& inv) {
  return {{"n", inv.n},
          {"volume", inv.volume},
          {"area", inv.area},
          {"total_mean_curvature", inv.total_mean_curvature},
          {"warnings", inv.warnings}};
}

inline Table cmd_asymptote(const RunConfig& c, json& results) {
  GeometricInvariants inv;
  std::optional<AsymptoticPolynomial> conj;
  std::function<double(double)> exact;
  int n = 3;
  if (c.shape == "mesh") {
    if (c.mesh.empty()) throw UsageError("asymptote: --shape mesh needs --mesh FILE");
    inv = invariants_from_mesh(read_off_file(c.mesh));
  } else if (c.shape == "ball" || c.shape == "shell") {
    const DomainShape shape = shape_from(c);
    if (shape.kind == ShapeKind::ball) require_odd(c.n, "asymptote");
    inv = invariants_analytic(shape);
    n = shape.n;
    if (shape.kind == ShapeKind::ball) {
      conj = conjecture_polynomial(shape);
      exact = [&c](double R) { return exact_ball_magnitude(c.n, R, c.radius).real(); };
    } else {
      exact = [&c](double R) { return exact_shell_magnitude(c.inner, c.outer, R).real(); };
    }
  } else {
    throw UsageError("asymptote: --shape must be ball, shell or mesh");
  }
  n = inv.n;
  const auto poly = asymptotic_polynomial(inv);
  Table t{{"source", "c_n", "c_n_minus_1", "c_n_minus_2", "max_rel_dev"}, {}};
  auto dev = [&](const std::array<double, 3>& a) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
      d = std::max(d, poly.leading[i] == 0.0 ? std::abs(a[i]) : std::abs(a[i] / poly.leading[i] - 1.0));
    return d;
  };
  t.rows.push_back({std::string("invariants"), poly.leading[0], poly.leading[1], poly.leading[2], 0.0});
  if (conj)
    t.rows.push_back({std::string("conjecture"), conj->leading[0], conj->leading[1], conj->leading[2],
                      dev(conj->leading)});
  if (exact) {
    const auto grid = Grid::parse(c.r_grid.value_or("50:200:20"));
    if (grid.count < 10) throw UsageError("asymptote: the large-R fit needs at least 10 grid points");
    for (double v : grid.values())
      if (!(v > 0.0)) throw UsageError("asymptote: fit scales must be positive");
    const auto fit = fit_leading_coefficients(exact, n, grid.values(), 10);
    const std::array<double, 3> a{fit.c0, fit.c1, fit.c2};
    t.rows.push_back({std::string("exact_fit"), a[0], a[1], a[2], dev(a)});
  }
  results["invariants"] = invariants_json(inv);
  results["normalizer"] = magnitude_normalizer(n);
  return t;
}

inline void append_roots(Table& t, const std::vector<Root>& roots) {
  for (const auto& r : roots)
    t.rows.push_back({to_string(r.kind), r.location.real(), r.location.imag(),
                      static_cast<long long>(r.multiplicity), r.residual});
}

inline Table cmd_poles(const RunConfig& c, json& results) {
  Table t{{"kind", "re", "im", "multiplicity", "residual"}, {}};
  std::optional<SearchRegion> region;
  if (c.rect) region = parse_rect(*c.rect);
  if (c.model == "ball") {
    require_odd(c.n, "poles");
    if (c.method != "census" && c.method != "argument") throw UsageError("--method must be census or argument");
    if (c.method == "argument" && !region) throw UsageError("--method argument needs --rect");
    const auto census = ball_pole_zero_census(c.n, region);
    results["model"] = rational_json(census.model.model);
    results["heldout_residual"] = census.model.heldout_residual;
    results["digits"] = census.model.digits;
    results["samples"] = census.model.samples;
    results["contour"] = {{"center", {census.model.contour.center.real(), census.model.contour.center.imag()}},
                          {"radius", census.model.contour.radius}};
    results["pole_bound"] = ball_pole_bound(c.n);
    results["zero_bound"] = ball_zero_bound(c.n);
    results["total_poles"] = census.model.poles.size();
    results["total_zeros"] = census.model.zeros.size();
    std::vector<Root> all_poles;
    for (const auto& p : census.model.poles) all_poles.push_back({p, 1, RootKind::pole});
    results["min_abs_arg_pole"] = min_abs_arg(all_poles);
    results["sector_half_angle"] = std::numbers::pi / (c.n + 1);
    results["pole_pairing_error"] = conjugate_pairing_error(census.model.poles);
    results["zero_pairing_error"] = conjugate_pairing_error(census.model.zeros);
    if (c.method == "census") {
      std::vector<Root> all = census.poles.roots;
      all.insert(all.end(), census.zeros.roots.begin(), census.zeros.roots.end());
      canonical_sort(all);
      append_roots(t, all);
    } else {
      const auto m = census.model.model;
      const auto f = Meromorphic::plain([m](cplx z) { return m(z); }, "ball" + std::to_string(c.n), true);
      const auto set = find_roots(f, *region);
      append_roots(t, set.roots);
      results["unresolved_cells"] = set.unresolved.size();
      results["winding"] = count_in_region(f, *region).count;
    }
  } else if (c.model == "shell") {
    if (c.inner != 1.0 || c.outer != 2.0)
      throw UsageError("poles: the shell model is the (1, 2)-shell; --inner/--outer are fixed");
    if (region) {
      const auto set = find_roots(shell_denominator_model(), *region);
      auto roots = set.roots;
      for (auto& r : roots) r.kind = RootKind::pole;
      append_roots(t, roots);
      results["unresolved_cells"] = set.unresolved.size();
    } else {
      if (!(c.im_max >= 10.0)) throw UsageError("--im-max must be >= 10");
      const auto s = shell_pole_survey(c.im_max);
      append_roots(t, s.roots.roots);
      results["slope"] = s.slope;
      results["intercept"] = s.intercept;
      results["right_branch"] = s.right_branch.size();
      results["unresolved_cells"] = s.roots.unresolved.size();
    }
    results["denominator"] = "sinh(2R) - 2R";
  } else {
    throw UsageError("--model must be ball or shell");
  }
  return t;
}

inline Table cmd_compare(const RunConfig& c, json& results) {
  const auto grid = Grid::parse(c.r_grid.value_or("0.5:20:40"));
  for (double v : grid.values())
    if (!(v > 0.0)) throw UsageError("compare: scales must be positive");
  const DomainShape shape = shape_from(c);
  if (shape.kind == ShapeKind::ball) {
    require_odd(c.n, "compare");
    const auto conj = conjecture_polynomial(shape);
    const auto asym = asymptotic_polynomial(invariants_analytic(shape));
    Table t{{"R", "exact", "conjecture", "asymptotic3", "rel_conjecture", "rel_asymptotic3"}, {}};
    double worst = 0.0;
    for (double R : grid.values()) {
      const double m = exact_ball_magnitude(c.n, R, c.radius).real();
      double p = 0.0;
      for (int i = c.n; i >= 0; --i) p = p * R + conj.full[i];
      const double a = asym.evaluate_leading(R);
      worst = std::max(worst, std::abs(p / m - 1.0));
      t.rows.push_back({R, m, p, a, p / m - 1.0, a / m - 1.0});
    }
    results["max_rel_conjecture"] = worst;
    results["conjecture_exact"] = c.n <= 3;
    return t;
  }
  if (shape.kind == ShapeKind::shell) {
    if (c.inner != 1.0 || c.outer != 2.0)
      throw UsageError("compare: the alternate closed form exists for the (1, 2)-shell only");
    const auto asym = asymptotic_polynomial(invariants_analytic(shape));
    Table t{{"R", "exact", "alternate", "asymptotic3", "rel_alternate"}, {}};
    double worst = 0.0;
    for (double R : grid.values()) {
      const double m = exact_shell_magnitude(1.0, 2.0, R).real();
      const double alt = alternate_shell_formula(R).real();
      worst = std::max(worst, std::abs(alt / m - 1.0));
      t.rows.push_back({R, m, alt, asym.evaluate_leading(R), alt / m - 1.0});
    }
    const auto scales = linear_grid(50.0, 200.0, 20);
    const auto fe = fit_leading_coefficients([](double R) { return exact_shell_magnitude(1.0, 2.0, R).real(); }, 3,
                                             scales);
    const auto fa = fit_leading_coefficients([](double R) { return alternate_shell_formula(R).real(); }, 3, scales);
    results["max_rel_alternate"] = worst;
    results["exact_fit"] = {fe.c0, fe.c1, fe.c2};
    results["alternate_fit"] = {fa.c0, fa.c1, fa.c2};
    results["invariants_polynomial"] = {asym.leading[0], asym.leading[1], asym.leading[2]};
    results["gating"] = "exact";
    return t;
  }
  throw UsageError("compare: --shape must be ball or shell");
}

// ---------------------------------------------------------------------------
// Config files for cloud: {kind, params: {...}, scale, levels, cap}

inline void apply_config_file(RunConfig& c, const CLI::App& sub) {
  std::ifstream in(c.config_file);
  if (!in) throw UsageError("cannot open config '" + c.config_file + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  auto given = [&](const char* flag) { return sub.count(flag) > 0; };
  try {
    if (j.contains("kind") && !given("--shape")) {
      c.shape = j["kind"].get<std::string>();
      if (c.shape == "point-file") c.shape = "file";
    }
    if (j.contains("params")) {
      const auto& p = j["params"];
      if (p.contains("n") && !given("--n")) c.n = p["n"].get<int>();
      if (p.contains("radius") && !given("--radius")) c.radius = p["radius"].get<double>();
      if (p.contains("inner") && !given("--inner")) c.inner = p["inner"].get<double>();
      if (p.contains("outer") && !given("--outer")) c.outer = p["outer"].get<double>();
      if (p.contains("sides") && !given("--sides")) c.sides = p["sides"].get<std::vector<double>>();
      if (p.contains("path") && !given("--points")) c.points = p["path"].get<std::string>();
    }
    if (j.contains("scale") && !given("--scale")) c.scale = j["scale"].get<double>();
    if (j.contains("levels") && !given("--levels")) c.levels = j["levels"].get<int>();
    if (j.contains("cap") && !given("--cap")) c.cap = j["cap"].get<std::size_t>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"maglab: magnitude functions of balls, shells, point clouds and meshes"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto common = [&](CLI::App* s) {
    s->add_option("--out", cfg.out, "output directory")->capture_default_str();
    s->add_option("--format", cfg.format, "csv or json")->capture_default_str();
    s->add_option("--seed", cfg.seed, "recorded in the config echo; all computations are deterministic")
        ->capture_default_str();
  };
  auto shape_flags = [&](CLI::App* s) {
    s->add_option("--n", cfg.n, "dimension (odd for exact shapes)")->capture_default_str();
    s->add_option("--radius", cfg.radius, "ball radius")->capture_default_str();
    s->add_option("--inner", cfg.inner, "shell inner radius")->capture_default_str();
    s->add_option("--outer", cfg.outer, "shell outer radius")->capture_default_str();
  };
  auto grid_flags = [&](CLI::App* s) {
    s->add_option("--r-grid", cfg.r_grid, "start:stop:count[:log]");
    s->add_option("--rect", cfg.rect, "complex rectangle x0:x1:y0:y1");
    s->add_option("--rect-count", cfg.rect_count, "points per axis on --rect")->capture_default_str();
  };

  auto* finite = app.add_subcommand("finite", "magnitude of a finite point set over scales");
  common(finite);
  finite->add_option("--points", cfg.points, "point file (coordinates or 'matrix N' block)");
  finite->add_option("--scale", cfg.scale, "single scale R")->capture_default_str();
  finite->add_option("--r-grid", cfg.r_grid, "start:stop:count[:log]");
  finite->add_option("--tol", cfg.tol, "relative residual tolerance")->capture_default_str();
  finite->add_flag("!--no-triangle-check", cfg.triangle_check, "skip the triangle inequality check");

  auto* cloud = app.add_subcommand("cloud", "lattice refinement lower bounds with extrapolation");
  common(cloud);
  shape_flags(cloud);
  cloud->add_option("--shape", cfg.shape, "ball, shell, box or file")->capture_default_str();
  cloud->add_option("--sides", cfg.sides, "box side lengths")->delimiter(',');
  cloud->add_option("--points", cfg.points, "point file for --shape file");
  cloud->add_option("--scale", cfg.scale, "scale R")->capture_default_str();
  cloud->add_option("--levels", cfg.levels, "number of nested lattices")->capture_default_str();
  cloud->add_option("--cap", cfg.cap, "point cap per level")->capture_default_str();
  cloud->add_option("--coarsest", cfg.coarsest, "coarsest spacing (0: 0.4 x extent)")->capture_default_str();
  cloud->add_option("--tol", cfg.tol, "relative residual tolerance")->capture_default_str();
  cloud->add_option("--config", cfg.config_file, "JSON {kind, params, scale, levels, cap}");

  auto* ball = app.add_subcommand("ball", "exact magnitude of an odd-dimensional ball");
  common(ball);
  shape_flags(ball);
  grid_flags(ball);

  auto* shell = app.add_subcommand("shell", "exact magnitude of a 3D spherical shell");
  common(shell);
  shape_flags(shell);
  grid_flags(shell);

  auto* asym = app.add_subcommand("asymptote", "invariants, asymptotic polynomials and large-R fits");
  common(asym);
  shape_flags(asym);
  asym->add_option("--shape", cfg.shape, "ball, shell or mesh")->capture_default_str();
  asym->add_option("--mesh", cfg.mesh, "OFF mesh for --shape mesh");
  asym->add_option("--r-grid", cfg.r_grid, "fit grid (default 50:200:20)");

  auto* poles = app.add_subcommand("poles", "pole/zero census of ball models or shell poles");
  common(poles);
  shape_flags(poles);
  poles->add_option("--model", cfg.model, "ball or shell")->capture_default_str();
  poles->add_option("--rect", cfg.rect, "restrict to x0:x1:y0:y1");
  poles->add_option("--method", cfg.method, "census (model roots) or argument (contour search)")
      ->capture_default_str();
  poles->add_option("--im-max", cfg.im_max, "shell survey: 0 < Im R <= im-max")->capture_default_str();

  auto* compare = app.add_subcommand("compare", "exact vs conjecture vs asymptotics");
  common(compare);
  shape_flags(compare);
  compare->add_option("--shape", cfg.shape, "ball or shell")->capture_default_str();
  compare->add_option("--r-grid", cfg.r_grid, "real grid (default 0.5:20:40)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.subcommand = sub->get_name();
  try {
    if (sub == poles && cfg.n == 3 && sub->count("--n") == 0 && cfg.model == "ball") cfg.n = 5;
    if (!cfg.config_file.empty()) apply_config_file(cfg, *sub);
    const Format fmt = parse_format(cfg.format);
    json results;
    Table table;
    if (sub == finite) table = cmd_finite(cfg, results);
    else if (sub == cloud) table = cmd_cloud(cfg, results);
    else if (sub == ball) table = cmd_ball(cfg, results);
    else if (sub == shell) table = cmd_shell(cfg, results);
    else if (sub == asym) table = cmd_asymptote(cfg, results);
    else if (sub == poles) table = cmd_poles(cfg, results);
    else if (sub == compare) table = cmd_compare(cfg, results);
    json side = sidecar_base(cfg);
    side["results"] = results;
    const auto files = emit_report(table, fmt, cfg.out, cfg.subcommand, side);
    out << cfg.subcommand << ": " << table.rows.size() << " rows ->";
    for (const auto& f : files) out << ' ' << (std::filesystem::path(cfg.out) / f).string();
    out << '\n';
    return 0;
  } catch (const UsageError& e) {
    err << "maglab " << cfg.subcommand << ": usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "maglab " << cfg.subcommand << ": error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace maglab::cli
