#include "isodiam/io.hpp"

#include <cmath>
#include <fstream>

#include "isodiam/error.hpp"

namespace isodiam {

namespace {

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

double real(const Json& value, const char* what) {
  if (!value.is_number()) throw InputError(std::string(what) + " must be a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
  return v;
}

std::int64_t integer(const Json& value, const char* what) {
  if (!value.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return value.get<std::int64_t>();
}

const Json& tuple(const Json& value, std::size_t size, const char* what) {
  if (!value.is_array() || value.size() != size) {
    throw InputError(std::string(what) + " must be an array of " + std::to_string(size) + " entries");
  }
  return value;
}

}  // namespace

Json region_to_json(const PixelRegion& region) {
  Json cells = Json::array();
  for (const Cell& c : region.cells()) cells.push_back({c.i, c.j});
  return {{"origin", {region.origin().x, region.origin().y}}, {"h", region.h()}, {"cells", std::move(cells)}};
}

PixelRegion region_from_json(const Json& doc) {
  const Json& origin = tuple(member(doc, "origin"), 2, "origin");
  const Json& cells_doc = member(doc, "cells");
  if (!cells_doc.is_array()) throw InputError("cells must be an array");
  std::vector<Cell> cells;
  cells.reserve(cells_doc.size());
  for (const Json& c : cells_doc) {
    tuple(c, 2, "cell");
    cells.push_back({integer(c[0], "cell index"), integer(c[1], "cell index")});
  }
  return PixelRegion({real(origin[0], "origin x"), real(origin[1], "origin y")}, real(member(doc, "h"), "h"),
                     std::move(cells));
}

Json arcset_to_json(const ArcSet& arcs) {
  Json list = Json::array();
  for (const Arc& arc : arcs.arcs()) list.push_back({arc.start, arc.end});
  return {{"r", arcs.r()}, {"arcs", std::move(list)}};
}

ArcSet arcset_from_json(const Json& doc) {
  const Json& list = member(doc, "arcs");
  if (!list.is_array()) throw InputError("arcs must be an array");
  std::vector<Arc> arcs;
  for (const Json& a : list) {
    tuple(a, 2, "arc");
    arcs.push_back({real(a[0], "arc start"), real(a[1], "arc end")});
  }
  return ArcSet(real(member(doc, "r"), "r"), std::move(arcs));
}

Json strategy_to_json(const PoisonStrategy& strategy) {
  Json masses = Json::array();
  for (const PointMass& m : strategy.masses) masses.push_back({m.position.x, m.position.y, m.grams});
  Json doc{{"masses", std::move(masses)}};
  if (strategy.density) {
    doc["density"] = {{"region", region_to_json(strategy.density->region)}, {"grams", strategy.density->grams}};
  }
  return doc;
}

PoisonStrategy strategy_from_json(const Json& doc) {
  PoisonStrategy strategy;
  if (!doc.is_object()) throw InputError("strategy must be a JSON object");
  if (doc.contains("masses")) {
    const Json& list = doc.at("masses");
    if (!list.is_array()) throw InputError("masses must be an array");
    for (const Json& m : list) {
      tuple(m, 3, "mass");
      strategy.masses.push_back({{real(m[0], "mass x"), real(m[1], "mass y")}, real(m[2], "mass grams")});
    }
  }
  if (doc.contains("density") && !doc.at("density").is_null()) {
    const Json& density = doc.at("density");
    strategy.density = DensityPart{region_from_json(member(density, "region")), real(member(density, "grams"), "grams")};
  }
  return strategy;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace isodiam
