#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "isodiam/bounds.hpp"
#include "isodiam/diameters.hpp"
#include "isodiam/error.hpp"
#include "isodiam/geometry.hpp"
#include "isodiam/io.hpp"
#include "isodiam/poisoning.hpp"
#include "isodiam/regions.hpp"
#include "isodiam/search.hpp"
#include "svg.hpp"

#ifndef ISODIAM_VERSION
#define ISODIAM_VERSION "0.0.0"
#endif

namespace isodiam::cli {

namespace {

constexpr int kSchemaVersion = 1;

struct Common {
  std::string out_path;
  std::string svg_path;
  unsigned threads = 1;
};

struct Output {
  std::string body;  // JSON or CSV text, newline terminated
  std::string svg;
};

// Collected while a subcommand runs and embedded in its report.
struct Manifest {
  std::string subcommand;
  Json flags = Json::object();
  std::optional<std::uint64_t> seed;
  std::string seed_source;
  Json inputs = Json::object();
};

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  char buffer[1 << 14];
  while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
    EVP_DigestUpdate(ctx.get(), buffer, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

// SOURCE_DATE_EPOCH pins the timestamp for reproducible reports.
std::string timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm utc{};
  gmtime_r(&t, &utc);
  std::ostringstream out;
  out << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

void require_finite(const Json& doc, const std::string& path = "$") {
  if (doc.is_number_float() && !std::isfinite(doc.get<double>())) {
    throw std::logic_error("non-finite number in report at " + path);
  }
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) require_finite(value, path + "." + key);
  } else if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) require_finite(doc[i], path + "[" + std::to_string(i) + "]");
  }
}

Json manifest_json(const Manifest& m) {
  return {{"subcommand", m.subcommand},
          {"flags", m.flags},
          {"seed", m.seed ? Json(*m.seed) : Json(nullptr)},
          {"seed_source", m.seed ? Json(m.seed_source) : Json(nullptr)},
          {"version", ISODIAM_VERSION},
          {"inputs", m.inputs},
          {"timestamp", timestamp()}};
}

std::string finish_json(Json report, const Manifest& m) {
  Json doc{{"schema", kSchemaVersion}, {"manifest", manifest_json(m)}};
  for (auto& [key, value] : report.items()) doc[key] = std::move(value);
  require_finite(doc);
  return doc.dump(2) + "\n";
}

double round9(double x) { return std::round(x * 1e9) / 1e9; }

Json point_json(Point p) { return Json::array({p.x, p.y}); }

PointSet load_points(const std::string& path, Manifest& m) {
  m.inputs[path] = sha256_file(path);
  PointSet points = read_points_csv(path);
  if (points.empty()) throw InputError("'" + path + "' contains no points");
  return points;
}

std::vector<std::pair<int, int>> parse_ab_pairs(const std::vector<std::string>& specs) {
  std::vector<std::pair<int, int>> pairs;
  for (const std::string& s : specs) {
    const auto comma = s.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument(s);
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const int a = std::stoi(s.substr(0, comma), &used_a);
      const int b = std::stoi(s.substr(comma + 1), &used_b);
      if (used_a != comma || used_b != s.size() - comma - 1) throw std::invalid_argument(s);
      pairs.emplace_back(a, b);
    } catch (const std::logic_error&) {
      throw InputError("--ab expects 'a,b', got '" + s + "'");
    }
  }
  return pairs;
}

// ---------------------------------------------------------------- diameters

struct DiametersOpts {
  std::string points;
  std::vector<std::string> ab;
  std::uint64_t budget = kDefaultSubsetBudget;
};

Output cmd_diameters(const DiametersOpts& o, Manifest& m) {
  const PointSet pts = load_points(o.points, m);
  const auto pairs = parse_ab_pairs(o.ab);
  const DiameterReport r = diameter_report(pts, pairs, o.budget);
  Json ab = Json::array();
  for (const AbEntry& e : r.ab_entries) ab.push_back({{"a", e.a}, {"b", e.b}, {"value", e.value}});
  Json report{{"n", pts.size()},
              {"diam", r.diam},
              {"diam3", r.diam3},
              {"triameter", r.triameter},
              {"ab_entries", std::move(ab)}};
  return {finish_json({{"report", std::move(report)}}, m), {}};
}

// -------------------------------------------------------------------- check

struct CheckOpts {
  std::string points;
  int a = 3;
  int b = 2;
  double threshold = 2.0;
  std::uint64_t budget = kDefaultSubsetBudget;
};

Output cmd_check(const CheckOpts& o, Manifest& m) {
  const PointSet pts = load_points(o.points, m);
  const TabResult r = tab_check(pts, o.a, o.b, o.threshold, o.budget);
  Json witness = Json::array();
  for (std::size_t idx : r.witness) witness.push_back(point_json(pts[idx]));
  Json report{{"result", r.holds ? "holds" : "violated"},
              {"a", o.a},
              {"b", o.b},
              {"threshold", o.threshold},
              {"witness_indices", r.witness},
              {"witness", std::move(witness)}};
  return {finish_json({{"report", std::move(report)}}, m), {}};
}

// --------------------------------------------------------------------- jung

struct JungOpts {
  std::string points;
  std::vector<std::string> ab;
  std::uint64_t budget = kDefaultSubsetBudget;
};

Output cmd_jung(const JungOpts& o, Manifest& m) {
  const PointSet pts = load_points(o.points, m);
  const double d = diam(pts);
  const double d3 = diam3(pts);
  const Disk mec = min_enclosing_circle(pts);
  double tau = 0.0;
  double rho = 0.0;
  double jung = 0.0;
  if (d > 0.0) {
    tau = std::min(std::max(d3, 1e-6), d);
    rho = gen_jung_radius(d, tau);
    jung = jung_radius(d);
  }
  Json report{{"n", pts.size()},
              {"diam", d},
              {"diam3", d3},
              {"tau", tau},
              {"mec_center", point_json(mec.center)},
              {"mec_radius", mec.radius},
              {"jung_radius", jung},
              {"rho", rho},
              {"mec_radius_le_rho", mec.radius <= rho + 1e-9}};
  const auto pairs = parse_ab_pairs(o.ab);
  if (!pairs.empty()) {
    // The smallest enclosing radius under several (a,b)-diameter constraints
    // is an open question; this only reports what the sample attains.
    Json constraints = Json::array();
    for (const auto& [a, b] : pairs) {
      constraints.push_back({{"a", a}, {"b", b}, {"value", diam_ab(pts, a, b, o.budget)}});
    }
    report["exploratory"] = {{"constraints", std::move(constraints)},
                             {"mec_radius", mec.radius},
                             {"note", "observed values only; no covering-radius claim"}};
  }
  return {finish_json({{"report", std::move(report)}}, m), {}};
}

// ------------------------------------------------------------------- bounds

struct SweepOpts {
  double delta_min = 2.31;
  double delta_max = 4.0;
  unsigned steps = 100;
};

std::vector<double> sweep(const SweepOpts& o) {
  if (!(o.delta_min > 0.0) || !(o.delta_max > o.delta_min)) {
    throw InputError("need 0 < --delta-min < --delta-max");
  }
  if (o.steps == 0) throw InputError("--steps must be positive");
  std::vector<double> out;
  for (unsigned k = 0; k <= o.steps; ++k) out.push_back(o.delta_min + (o.delta_max - o.delta_min) * k / o.steps);
  return out;
}

std::string bound_svg(const std::vector<double>& deltas, bool with_candidates) {
  const double lo = deltas.front();
  const double hi = deltas.back();
  SvgCanvas canvas(lo, hi, 0.0, 9.0);
  canvas.axes((hi - lo) / 5.0, 1.0);
  auto curve = [&](auto&& f) {
    std::vector<Point> pts;
    for (double d : deltas) {
      if (auto v = f(d)) pts.push_back({d, std::min(*v, 9.0)});
    }
    return pts;
  };
  canvas.polyline({{lo, kTwoPi}, {hi, kTwoPi}}, "#999", 1.0, "6,4");
  canvas.polyline(curve([](double d) { return bound_profile(d).stmt1; }), "#1f77b4");
  canvas.polyline(curve([](double d) { return bound_profile(d).stmt3; }), "#d62728");
  canvas.polyline(curve([](double d) { return std::optional(bound_profile(d).convex_blaschke); }), "#2ca02c", 1.5,
                  "4,3");
  canvas.polyline(curve([](double d) { return bound_profile(d).convex_improved; }), "#17becf", 1.5, "2,2");
  canvas.polyline(curve([](double d) { return bound_profile(d).symmetric; }), "#9467bd", 1.5, "8,3");
  if (with_candidates) {
    canvas.polyline(curve([](double d) -> std::optional<double> {
                      if (d > 2.0 && d < 4.0) return u_delta_measure(d);
                      return std::nullopt;
                    }),
                    "#ff7f0e", 2.5);
  }
  canvas.text({lo, 8.6}, "red: stmt3  green: convex (Blaschke)  cyan: convex (improved)  purple: symmetric", 12);
  if (with_candidates) canvas.text({lo, 8.1}, "orange: U_delta measure  grey: 2 pi", 12);
  return canvas.str();
}

std::string csv_cell(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream out;
  out << std::setprecision(12) << *v;
  return out.str();
}

Output cmd_bounds(const SweepOpts& o, const Common& c, Manifest& m) {
  const auto deltas = sweep(o);
  std::ostringstream csv;
  csv << "# " << Json{{"schema", kSchemaVersion}, {"manifest", manifest_json(m)}}.dump() << "\n";
  csv << "delta,stmt1,stmt1_applicable,stmt2,stmt2_applicable,stmt3,stmt3_applicable,convex_blaschke,"
         "convex_improved,symmetric,convex_symmetric_applicable,jung_radius,gen_jung_radius_tau2\n";
  for (double d : deltas) {
    const BoundProfile p = bound_profile(d);
    csv << csv_cell(d) << ',' << csv_cell(p.stmt1) << ',' << int{p.stmt1.has_value()} << ',' << csv_cell(p.stmt2)
        << ',' << int{p.stmt2_applicable} << ',' << csv_cell(p.stmt3) << ',' << int{p.stmt3_applicable} << ','
        << csv_cell(p.convex_blaschke) << ',' << csv_cell(p.convex_improved) << ',' << csv_cell(p.symmetric) << ','
        << int{p.convex_symmetric_applicable} << ',' << csv_cell(p.jung_radius) << ','
        << csv_cell(p.gen_jung_radius_tau2) << '\n';
  }
  return {csv.str(), c.svg_path.empty() ? "" : bound_svg(deltas, false)};
}

// --------------------------------------------------------------- conjecture

Json crossover_json(BoundId id, double lo, double hi) {
  try {
    return round9(crossover(id, kTwoPi, lo, hi));
  } catch (const InputError&) {
    return nullptr;
  }
}

Output cmd_conjecture(const SweepOpts& o, const Common& c, Manifest& m) {
  const auto deltas = sweep(o);
  Json rows = Json::array();
  for (double d : deltas) {
    const BoundProfile p = bound_profile(d);
    Json candidates = Json::array();
    for (const Candidate& cand : evaluate_candidates(d)) {
      candidates.push_back({{"name", cand.name}, {"measure", cand.measure}, {"feasible", cand.feasible}});
    }
    Json row{{"delta", d},
             {"stmt3", p.stmt3 ? Json(*p.stmt3) : Json(nullptr)},
             {"stmt3_applicable", p.stmt3_applicable},
             {"symmetric", p.symmetric ? Json(*p.symmetric) : Json(nullptr)},
             {"convex_blaschke", p.convex_blaschke},
             {"convex_improved", p.convex_improved ? Json(*p.convex_improved) : Json(nullptr)},
             {"candidates", std::move(candidates)}};
    if (d >= 2.0) row["convex_candidate"] = convex_candidate_measure(d);
    if (d > 2.0 && d < 4.0 && p.stmt3) row["u_delta_below_stmt3"] = u_delta_measure(d) < *p.stmt3;
    rows.push_back(std::move(row));
  }
  Json crossings{{"stmt3", crossover_json(BoundId::stmt3, 2.3, 4.0)},
                 {"convex_improved", crossover_json(BoundId::convex_improved, 2.3, 4.0)},
                 {"convex_blaschke", crossover_json(BoundId::convex_blaschke, 2.3, 4.0)},
                 {"symmetric", crossover_json(BoundId::symmetric, 2.3, 4.0)}};
  Json report{{"disk_regime_limit", kDiskRegimeLimit},
              {"two_disk_regime_start", kTwoDiskRegimeStart},
              {"crossovers_vs_two_pi", std::move(crossings)},
              {"rows", std::move(rows)}};
  return {finish_json({{"report", std::move(report)}}, m), c.svg_path.empty() ? "" : bound_svg(deltas, true)};
}

// ------------------------------------------------------------------- search

struct SearchOpts {
  double delta = 3.0;
  double h = 0.05;
  std::uint64_t iters = 100'000;
  std::uint64_t seed = 42;
  unsigned chains = 1;
  double temperature = 0.0;
  double cooling = 0.9995;
};

std::string region_svg(const PixelRegion& region, const std::function<void(SvgCanvas&)>& overlay, double extent) {
  SvgCanvas canvas(-extent, extent, -extent * 0.75, extent * 0.75);
  for (const Cell& cell : region.cells()) {
    const Point ll{region.origin().x + cell.i * region.h(), region.origin().y + cell.j * region.h()};
    canvas.rect(ll, region.h(), region.h(), "#4c72b0", 0.6);
  }
  overlay(canvas);
  return canvas.str();
}

Output cmd_search(const SearchOpts& o, const Common& c, Manifest& m) {
  SearchConfig config;
  config.delta = o.delta;
  config.h = o.h;
  config.iterations = o.iters;
  config.seed = *m.seed;
  config.temperature_init = o.temperature;
  config.cooling = o.cooling;
  const SearchResult r = anneal_chains(config, o.chains, c.threads);
  const FeasibilityReport& f = r.feasibility;
  Json report{{"delta", o.delta},
              {"h", o.h},
              {"best_seed", r.seed},
              {"iterations", r.iterations},
              {"accepted_moves", r.accepted_moves},
              {"best_measure", r.best_measure},
              {"baseline_measure", r.baseline_measure},
              {"u_delta_measure", r.u_delta_measure},
              {"bound_value", r.bound_value},
              {"improvement", r.improvement},
              {"slack_measure", r.slack_measure},
              {"exceeds_slack", r.exceeds_slack},
              {"feasibility",
               {{"feasible", f.feasible},
                {"diam_centers", f.diam_centers},
                {"diam_range", {f.diam_lower, f.diam_upper}},
                {"region_diam", f.region_diam},
                {"diam3_centers", f.diam3_centers},
                {"diam3_sampled", f.diam3_sampled},
                {"diam3_threshold", f.diam3_threshold}}},
              {"best_region", region_to_json(r.best_region)}};
  std::string svg;
  if (!c.svg_path.empty()) {
    const double half = 0.5 * u_delta_shape(o.delta).d;
    svg = region_svg(r.best_region, [&](SvgCanvas& canvas) {
      canvas.circle({-half, 0.0}, 1.0, "#c44e52");
      canvas.circle({half, 0.0}, 1.0, "#c44e52");
    }, 0.5 * o.delta + 0.5);
  }
  return {finish_json({{"report", std::move(report)}}, m), std::move(svg)};
}

// ------------------------------------------------------------------- poison

struct PoisonOpts {
  std::string strategy;
  double R = 3.0;
  std::optional<double> h_available;
  double dose = 1.0;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  double grid = 0.0;
};

Output cmd_poison(const PoisonOpts& o, const Common& c, Manifest& m) {
  m.inputs[o.strategy] = sha256_file(o.strategy);
  const PoisonStrategy strategy = strategy_from_json(read_json_file(o.strategy));
  PoisonConfig config;
  config.R = o.R;
  config.h_available = o.h_available.value_or(strategy.total_grams());
  config.lethal_dose = o.dose;
  config.samples = o.samples;
  config.seed = *m.seed;
  config.threads = c.threads;
  const KillReport k = kill_probability(strategy, config);
  Json report{{"kill",
               {{"estimate", k.estimate},
                {"ci95", {k.ci_low, k.ci_high}},
                {"samples", k.samples},
                {"hits", k.hits}}},
              {"R", config.R},
              {"h_available", config.h_available},
              {"lethal_dose", config.lethal_dose}};
  std::string svg;
  const double grid = o.grid > 0.0 ? o.grid : (c.svg_path.empty() ? 0.0 : 0.02);
  if (grid > 0.0) {
    const PixelRegion lethal = lethal_region(strategy, config, grid);
    report["lethal_region"] = {{"h", grid},
                               {"cells", lethal.size()},
                               {"measure", region_measure(lethal)},
                               {"diam", lethal.empty() ? 0.0 : region_diam(lethal)}};
    if (!c.svg_path.empty()) {
      svg = region_svg(lethal, [&](SvgCanvas& canvas) {
        canvas.circle({0.0, 0.0}, config.R, "#333");
        canvas.circle({0.0, 0.0}, config.R - 1.0, "#999");
        for (const PointMass& pm : strategy.masses) canvas.circle(pm.position, 0.05, "#c44e52", "#c44e52");
      }, config.R + 0.2);
    }
  }
  return {finish_json({{"report", std::move(report)}}, m), std::move(svg)};
}

// ------------------------------------------------------------------- circle

struct CircleOpts {
  std::string arcs;
};

Output cmd_circle(const CircleOpts& o, Manifest& m) {
  m.inputs[o.arcs] = sha256_file(o.arcs);
  const ArcSet set = arcset_from_json(read_json_file(o.arcs));
  const double measure = arc_measure(set);
  Json report{{"r", set.r()}, {"measure", measure}, {"arcs", arcset_to_json(set)["arcs"]}};
  if (set.r() > kDiskRegimeLimit / 2.0) {
    const double bound = circle_bound(set.r());
    const ArcCheck check = arc_tab_check(set);
    report["bound"] = bound;
    report["exceeds_bound"] = measure > bound;
    Json check_doc{{"result", check.holds ? "holds" : "violated"}};
    if (!check.holds) {
      const auto& w = check.witness;
      check_doc["witness_angles"] = w;
      check_doc["witness_chords"] = {chord(set.r(), w[0], w[1]), chord(set.r(), w[1], w[2]),
                                     chord(set.r(), w[0], w[2])};
    }
    report["check"] = std::move(check_doc);
  } else {
    // Any three points on such a circle have a gap of at most 2 pi / 3,
    // hence a chord of at most r sqrt(3) <= 2.
    report["bound"] = nullptr;
    report["check"] = {{"result", "holds"}, {"reason", "r <= 2/sqrt(3)"}};
  }
  return {finish_json({{"report", std::move(report)}}, m), {}};
}

// ------------------------------------------------------------------ driver

void record_flags(const CLI::App& sub, Manifest& m) {
  for (const CLI::Option* opt : sub.get_options()) {
    const auto& names = opt->get_lnames();
    if (names.empty() || names.front() == "help") continue;
    Json value;
    if (opt->count() > 0) {
      const auto& results = opt->results();
      value = results.size() == 1 ? Json(results.front()) : Json(results);
    } else if (!opt->get_default_str().empty()) {
      value = opt->get_default_str();
    }
    m.flags[names.front()] = std::move(value);
  }
}

void resolve_seed(std::uint64_t flag_seed, Manifest& m) {
  m.seed = flag_seed;
  m.seed_source = "flag";
  if (const char* env = std::getenv("ISODIAM_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw InputError("ISODIAM_SEED must be an unsigned integer");
    m.seed = v;
    m.seed_source = "env";
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalised isodiametric problem toolkit: diameters, bounds, extremal search, poisoning simulator",
               "isodiam"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", ISODIAM_VERSION);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out_path, "Write the report to this file instead of stdout");
    sub->add_option("--threads", common.threads, "Worker threads (results do not depend on it)")
        ->check(CLI::Range(1u, 256u));
  };
  auto add_svg = [&](CLI::App* sub) { sub->add_option("--svg", common.svg_path, "Also write an SVG plot"); };

  DiametersOpts diam_o;
  auto* diameters_cmd = app.add_subcommand("diameters", "diam, diam3, triameter and (a,b)-diameters of a point set");
  diameters_cmd->add_option("--points", diam_o.points, "CSV point file")->required();
  diameters_cmd->add_option("--ab", diam_o.ab, "(a,b) pair as 'a,b'; repeatable");
  diameters_cmd->add_option("--budget", diam_o.budget, "Maximum number of enumerated a-subsets");
  add_common(diameters_cmd);

  CheckOpts check_o;
  auto* check_cmd = app.add_subcommand("check", "Test the T(a,b) property of a point set");
  check_cmd->add_option("--points", check_o.points, "CSV point file")->required();
  check_cmd->add_option("--a", check_o.a, "Subset size a");
  check_cmd->add_option("--b", check_o.b, "Required close points b");
  check_cmd->add_option("--threshold", check_o.threshold, "Closed distance threshold");
  check_cmd->add_option("--budget", check_o.budget, "Maximum number of enumerated a-subsets");
  add_common(check_cmd);

  JungOpts jung_o;
  auto* jung_cmd = app.add_subcommand("jung", "Minimum enclosing circle against the generalised Jung radius");
  jung_cmd->add_option("--points", jung_o.points, "CSV point file")->required();
  jung_cmd->add_option("--ab", jung_o.ab, "Exploratory (a,b)-diameter constraints as 'a,b'");
  jung_cmd->add_option("--budget", jung_o.budget, "Maximum number of enumerated a-subsets");
  add_common(jung_cmd);

  SweepOpts bounds_o;
  auto* bounds_cmd = app.add_subcommand("bounds", "CSV sweep of every area bound over delta");
  bounds_cmd->add_option("--delta-min", bounds_o.delta_min, "Smallest delta");
  bounds_cmd->add_option("--delta-max", bounds_o.delta_max, "Largest delta");
  bounds_cmd->add_option("--steps", bounds_o.steps, "Number of intervals (steps + 1 rows)");
  add_common(bounds_cmd);
  add_svg(bounds_cmd);

  SweepOpts conj_o{kDiskRegimeLimit, kTwoDiskRegimeStart, 50};
  auto* conj_cmd = app.add_subcommand("conjecture", "Bounds sweep with the extremal candidates overlaid");
  conj_cmd->add_option("--delta-min", conj_o.delta_min, "Smallest delta");
  conj_cmd->add_option("--delta-max", conj_o.delta_max, "Largest delta");
  conj_cmd->add_option("--steps", conj_o.steps, "Number of intervals (steps + 1 rows)");
  add_common(conj_cmd);
  add_svg(conj_cmd);

  SearchOpts search_o;
  auto* search_cmd = app.add_subcommand("search", "Anneal pixel regions seeded at U_delta");
  search_cmd->set_help_flag("--help", "Print this help message and exit");
  search_cmd->add_option("--delta", search_o.delta, "Target diameter in (4/sqrt(3), 4)");
  search_cmd->add_option("--h", search_o.h, "Grid pitch");
  search_cmd->add_option("--iters", search_o.iters, "Iterations per chain");
  search_cmd->add_option("--seed", search_o.seed, "Base seed (ISODIAM_SEED overrides)");
  search_cmd->add_option("--chains", search_o.chains, "Independent chains")->check(CLI::Range(1u, 1024u));
  search_cmd->add_option("--temperature", search_o.temperature, "Initial temperature (0: 0.1 h^2)");
  search_cmd->add_option("--cooling", search_o.cooling, "Geometric cooling factor in (0, 1)");
  add_common(search_cmd);
  add_svg(search_cmd);

  PoisonOpts poison_o;
  auto* poison_cmd = app.add_subcommand("poison", "Monte Carlo kill probability of a poison strategy");
  poison_cmd->set_help_flag("--help", "Print this help message and exit");
  poison_cmd->add_option("--strategy", poison_o.strategy, "Strategy JSON file")->required();
  poison_cmd->add_option("--R", poison_o.R, "Pie radius (> 2)");
  poison_cmd->add_option("--h", poison_o.h_available, "Grams available (defaults to the strategy total)");
  poison_cmd->add_option("--dose", poison_o.dose, "Lethal dose in grams");
  poison_cmd->add_option("--samples", poison_o.samples, "Monte Carlo samples");
  poison_cmd->add_option("--seed", poison_o.seed, "Seed (ISODIAM_SEED overrides)");
  poison_cmd->add_option("--grid", poison_o.grid, "Pitch of the lethal-region grid (0: skip)");
  add_common(poison_cmd);
  add_svg(poison_cmd);

  CircleOpts circle_o;
  auto* circle_cmd = app.add_subcommand("circle", "Arc-set measure and T(3,2) check on a circle");
  circle_cmd->add_option("--arcs", circle_o.arcs, "ArcSet JSON file")->required();
  add_common(circle_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << ISODIAM_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    err << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  Manifest manifest;
  manifest.subcommand = sub->get_name();
  record_flags(*sub, manifest);

  try {
    Output output;
    if (sub == diameters_cmd) {
      output = cmd_diameters(diam_o, manifest);
    } else if (sub == check_cmd) {
      output = cmd_check(check_o, manifest);
    } else if (sub == jung_cmd) {
      output = cmd_jung(jung_o, manifest);
    } else if (sub == bounds_cmd) {
      output = cmd_bounds(bounds_o, common, manifest);
    } else if (sub == conj_cmd) {
      output = cmd_conjecture(conj_o, common, manifest);
    } else if (sub == search_cmd) {
      resolve_seed(search_o.seed, manifest);
      output = cmd_search(search_o, common, manifest);
    } else if (sub == poison_cmd) {
      resolve_seed(poison_o.seed, manifest);
      output = cmd_poison(poison_o, common, manifest);
    } else {
      output = cmd_circle(circle_o, manifest);
    }
    if (common.out_path.empty()) {
      out << output.body;
    } else {
      write_text(common.out_path, output.body);
    }
    if (!common.svg_path.empty() && !output.svg.empty()) write_text(common.svg_path, output.svg);
    return kExitOk;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace isodiam::cli
