#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isodiam/bounds.hpp"
#include "isodiam/diameters.hpp"
#include "isodiam/error.hpp"
#include "isodiam/geometry.hpp"
#include "isodiam/poisoning.hpp"
#include "isodiam/regions.hpp"
#include "isodiam/search.hpp"

namespace py = pybind11;
using namespace isodiam;

namespace {

// Accepts any sequence of (x, y) pairs, including an (n, 2) numpy array.
PointSet to_points(const py::handle& seq) {
  PointSet out;
  for (const py::handle& item : py::iter(seq)) {
    const auto xy = py::cast<py::sequence>(item);
    if (py::len(xy) != 2) throw InputError("points must be (x, y) pairs");
    out.push_back({py::cast<double>(xy[0]), py::cast<double>(xy[1])});
  }
  return out;
}

py::tuple point_tuple(Point p) { return py::make_tuple(p.x, p.y); }

py::dict optional_entries(const BoundProfile& p) {
  py::dict d;
  auto opt = [](const std::optional<double>& v) -> py::object { return v ? py::object(py::float_(*v)) : py::object(py::none()); };
  d["delta"] = p.delta;
  d["stmt1"] = opt(p.stmt1);
  d["stmt2"] = p.stmt2;
  d["stmt2_applicable"] = p.stmt2_applicable;
  d["stmt3"] = opt(p.stmt3);
  d["stmt3_applicable"] = p.stmt3_applicable;
  d["convex_blaschke"] = p.convex_blaschke;
  d["convex_improved"] = opt(p.convex_improved);
  d["symmetric"] = opt(p.symmetric);
  d["convex_symmetric_applicable"] = p.convex_symmetric_applicable;
  d["jung_radius"] = p.jung_radius;
  d["gen_jung_radius_tau2"] = opt(p.gen_jung_radius_tau2);
  return d;
}

BoundId parse_bound(const std::string& name) {
  if (auto id = bound_id_from_string(name)) return *id;
  throw InputError("unknown bound '" + name + "'");
}

PoisonStrategy strategy_from_masses(const py::handle& masses) {
  PoisonStrategy s;
  for (const py::handle& item : py::iter(masses)) {
    const auto m = py::cast<py::sequence>(item);
    if (py::len(m) != 3) throw InputError("masses must be (x, y, grams) triples");
    s.masses.push_back({{py::cast<double>(m[0]), py::cast<double>(m[1])}, py::cast<double>(m[2])});
  }
  return s;
}

PoisonConfig poison_config(const PoisonStrategy& s, double R, std::optional<double> h_available, double dose,
                           std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  PoisonConfig c;
  c.R = R;
  c.h_available = h_available.value_or(s.total_grams());
  c.lethal_dose = dose;
  c.samples = samples;
  c.seed = seed;
  c.threads = threads;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalised isodiametric geometry core";
  m.attr("__version__") = ISODIAM_VERSION;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

  // geometry and diameters
  m.def(
      "min_enclosing_circle",
      [](const py::object& pts) {
        const Disk d = min_enclosing_circle(to_points(pts));
        return py::make_tuple(point_tuple(d.center), d.radius);
      },
      py::arg("points"), "Smallest enclosing disk as ((cx, cy), radius).");
  m.def("convex_hull", [](const py::object& pts) { return convex_hull(to_points(pts)); }, py::arg("points"),
        "Indices of the strict convex hull, counter-clockwise.");
  m.def("diam", [](const py::object& pts) { return diam(to_points(pts)); }, py::arg("points"));
  m.def("diam3", [](const py::object& pts) { return diam3(to_points(pts)); }, py::arg("points"));
  m.def("triameter", [](const py::object& pts) { return triameter(to_points(pts)); }, py::arg("points"));
  m.def(
      "diam_ab",
      [](const py::object& pts, int a, int b, std::uint64_t budget) { return diam_ab(to_points(pts), a, b, budget); },
      py::arg("points"), py::arg("a"), py::arg("b"), py::arg("budget") = kDefaultSubsetBudget);
  m.def(
      "tab_check",
      [](const py::object& pts, int a, int b, double threshold, std::uint64_t budget) {
        const TabResult r = tab_check(to_points(pts), a, b, threshold, budget);
        return py::make_tuple(r.holds, r.witness);
      },
      py::arg("points"), py::arg("a") = 3, py::arg("b") = 2, py::arg("threshold") = 2.0,
      py::arg("budget") = kDefaultSubsetBudget, "Returns (holds, witness_indices).");

  // bounds
  m.def("jung_radius", &jung_radius, py::arg("delta"));
  m.def("gen_jung_radius", &gen_jung_radius, py::arg("delta"), py::arg("tau"));
  m.def("circle_bound", &circle_bound, py::arg("r"));
  m.def("bound_profile", [](double delta) { return optional_entries(bound_profile(delta)); }, py::arg("delta"));
  m.def(
      "crossover",
      [](const std::string& name, double reference, double lo, double hi) {
        return crossover(parse_bound(name), reference, lo, hi);
      },
      py::arg("bound"), py::arg("reference") = kTwoPi, py::arg("lo") = 2.3, py::arg("hi") = 4.0,
      "Delta where the named unclamped bound meets `reference`.");

  // regions
  py::class_<PixelRegion>(m, "PixelRegion")
      .def(py::init([](std::pair<double, double> origin, double h, const std::vector<std::pair<std::int64_t, std::int64_t>>& cells) {
             std::vector<Cell> cs;
             for (auto [i, j] : cells) cs.push_back({i, j});
             return PixelRegion({origin.first, origin.second}, h, std::move(cs));
           }),
           py::arg("origin"), py::arg("h"), py::arg("cells"))
      .def_property_readonly("origin", [](const PixelRegion& r) { return point_tuple(r.origin()); })
      .def_property_readonly("h", &PixelRegion::h)
      .def_property_readonly("cells",
                             [](const PixelRegion& r) {
                               std::vector<std::pair<std::int64_t, std::int64_t>> out;
                               for (const Cell& c : r.cells()) out.emplace_back(c.i, c.j);
                               return out;
                             })
      .def("__len__", &PixelRegion::size)
      .def("measure", &region_measure)
      .def("diam", &region_diam)
      .def("boundary_length", &region_boundary_length)
      .def("centers",
           [](const PixelRegion& r) {
             std::vector<std::pair<double, double>> out;
             for (Point p : r.centers()) out.emplace_back(p.x, p.y);
             return out;
           })
      .def("__eq__", [](const PixelRegion& a, const PixelRegion& b) { return a == b; });

  m.def(
      "rasterize_disk", [](std::pair<double, double> c, double radius, double h) {
        return rasterize(DiskShape{{c.first, c.second}, radius}, h);
      },
      py::arg("center"), py::arg("radius"), py::arg("h"));
  m.def("rasterize_two_disks", [](double d, double h) { return rasterize(TwoDisksShape{d}, h); }, py::arg("d"),
        py::arg("h"), "Unit disks centred at (+-d/2, 0).");
  m.def(
      "rasterize_disks",
      [](const std::vector<std::tuple<double, double, double>>& disks, double h) {
        DiskUnionShape shape;
        for (auto [x, y, r] : disks) shape.disks.push_back({{x, y}, r});
        return rasterize(shape, h);
      },
      py::arg("disks"), py::arg("h"), "Union of (x, y, radius) disks.");
  m.def("minkowski_difference", &minkowski_difference, py::arg("region"));
  m.def("lens_area", &lens_area, py::arg("d"));
  m.def("u_delta_measure", &u_delta_measure, py::arg("delta"));
  m.def("distance_slack", &distance_slack, py::arg("h"));
  m.def(
      "arc_tab_check",
      [](double r, const std::vector<std::pair<double, double>>& arcs) {
        std::vector<Arc> list;
        for (auto [s, e] : arcs) list.push_back({s, e});
        const ArcCheck c = arc_tab_check(ArcSet(r, std::move(list)));
        return py::make_tuple(c.holds, c.holds ? py::object(py::none()) : py::object(py::cast(c.witness)));
      },
      py::arg("r"), py::arg("arcs"), "Returns (holds, witness_angles or None).");

  // search
  m.def(
      "evaluate_candidates",
      [](double delta) {
        py::list out;
        for (const Candidate& c : evaluate_candidates(delta)) {
          py::dict d;
          d["name"] = c.name;
          d["measure"] = c.measure;
          d["feasible"] = c.feasible;
          out.append(d);
        }
        return out;
      },
      py::arg("delta"));
  m.def("convex_candidate_measure", &convex_candidate_measure, py::arg("delta"));
  m.def(
      "anneal",
      [](double delta, double h, std::uint64_t iterations, std::uint64_t seed, unsigned chains, unsigned threads,
         double cooling) {
        SearchConfig c;
        c.delta = delta;
        c.h = h;
        c.iterations = iterations;
        c.seed = seed;
        c.cooling = cooling;
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = anneal_chains(c, chains, threads);
        }
        py::dict d;
        d["best_region"] = r.best_region;
        d["best_measure"] = r.best_measure;
        d["baseline_measure"] = r.baseline_measure;
        d["u_delta_measure"] = r.u_delta_measure;
        d["bound_value"] = r.bound_value;
        d["improvement"] = r.improvement;
        d["exceeds_slack"] = r.exceeds_slack;
        d["seed"] = r.seed;
        d["accepted_moves"] = r.accepted_moves;
        d["feasible"] = r.feasibility.feasible;
        return d;
      },
      py::arg("delta") = 3.0, py::arg("h") = 0.05, py::arg("iterations") = 100'000, py::arg("seed") = 42,
      py::arg("chains") = 1, py::arg("threads") = 1, py::arg("cooling") = 0.9995);

  // poisoning
  m.def(
      "kill_probability",
      [](const py::object& masses, double R, std::optional<double> h_available, double dose, std::uint64_t samples,
         std::uint64_t seed, unsigned threads) {
        const PoisonStrategy s = strategy_from_masses(masses);
        const PoisonConfig c = poison_config(s, R, h_available, dose, samples, seed, threads);
        KillReport k;
        {
          py::gil_scoped_release release;
          k = kill_probability(s, c);
        }
        py::dict d;
        d["estimate"] = k.estimate;
        d["ci95"] = py::make_tuple(k.ci_low, k.ci_high);
        d["samples"] = k.samples;
        d["hits"] = k.hits;
        return d;
      },
      py::arg("masses"), py::arg("R") = 3.0, py::arg("h_available") = py::none(), py::arg("dose") = 1.0,
      py::arg("samples") = 1'000'000, py::arg("seed") = 42, py::arg("threads") = 1,
      "Masses are (x, y, grams) triples.");
  m.def(
      "lethal_region",
      [](const py::object& masses, double R, double h_grid, double dose) {
        const PoisonStrategy s = strategy_from_masses(masses);
        return lethal_region(s, poison_config(s, R, std::nullopt, dose, 1, 0, 1), h_grid);
      },
      py::arg("masses"), py::arg("R") = 3.0, py::arg("h") = 0.02, py::arg("dose") = 1.0);
}
