#pragma once

#include <string>

#include <json.hpp>

#include "isodiam/poisoning.hpp"
#include "isodiam/regions.hpp"

namespace isodiam {

using Json = nlohmann::json;

/// {"origin": [x, y], "h": h, "cells": [[i, j], ...]}
Json region_to_json(const PixelRegion& region);
PixelRegion region_from_json(const Json& doc);

/// {"r": r, "arcs": [[t1, t2], ...]}
Json arcset_to_json(const ArcSet& arcs);
ArcSet arcset_from_json(const Json& doc);

/// {"masses": [[x, y, grams], ...], "density": {"region": {...}, "grams": g}}
/// with "density" optional.
Json strategy_to_json(const PoisonStrategy& strategy);
PoisonStrategy strategy_from_json(const Json& doc);

/// Parses a whole file as JSON; InputError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace isodiam
