#pragma once

// JSON file formats. Components, nodes and generic points are 1-based in
// files and 0-based in memory. Every loader throws InvalidInput on malformed
// or missing fields.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "abelmap/chain_curves.hpp"
#include "abelmap/curve_model.hpp"
#include "abelmap/extension_checker.hpp"
#include "abelmap/local_blowup.hpp"
#include "abelmap/special_points.hpp"

namespace abelmap::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file.
Json read_json(const std::filesystem::path& path);

// {"components": p, "nodes": [[1,2],...], "marked": 1,
//  "polarization": ["1/2", "-1/2"], "multidegree": [1, -1]}
struct CurveFile {
  DualGraph graph;
  Polarization pol;
  Multidegree md;
};
CurveFile curve_from_json(const Json& j);

// {"base": <curve>, "d": 3, "base_degs": [...], "chain_degs": {"1": [0,1,0]}}
// Nodes missing from chain_degs carry zeros.
struct ChainFile {
  ChainMarkedCurve curve;
  Polarization pol;
};
ChainFile chain_from_json(const Json& j);

// {"d_plus_1": n, "sets": [[1],[2]], "kinds": ["x","y","diag"]}
SubsetCollection collection_from_json(const Json& j);

// {"ells": [1,1], "labels": ["21","22","12"]}
SpecialPointData point_from_json(const Json& j);
Json to_json(const SpecialPointData& point);

// {"diagonals": "descending", "components": "lex", "diagonals_first": true}
BlowupSchedule schedule_from_json(const Json& j);
Json to_json(const BlowupSchedule& schedule);

Json to_json(const Subcurve& y);
Json to_json(const TwistVector& twist);
Json to_json(const Witness& witness, int condition);
Json to_json(const ExtensionReport& report);

}  // namespace abelmap::io
