#include "abelmap/io.hpp"

#include <fstream>
#include <sstream>

#include "abelmap/errors.hpp"

namespace abelmap::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + name + "'");
  return *it;
}

Integer integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInput(what + " must be an integer");
  return j.get<Integer>();
}

int small_int(const Json& j, const std::string& what) {
  const Integer v = integer(j, what);
  if (v < -1'000'000 || v > 1'000'000) throw InvalidInput(what + " is out of range");
  return static_cast<int>(v);
}

const Json& array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be an array");
  return j;
}

std::vector<Integer> integers(const Json& j, const std::string& what) {
  std::vector<Integer> out;
  for (const auto& v : array(j, what)) out.push_back(integer(v, what + " entry"));
  return out;
}

Rational rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<Integer>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("polarization weights must be integers or \"a/b\" strings");
}

DualGraph graph_from_json(const Json& j) {
  const int p = small_int(field(j, "components"), "components");
  if (p < 1 || p > 62) throw InvalidInput("component count must lie in [1, 62]");
  std::vector<DualGraph::Node> nodes;
  for (const auto& n : array(field(j, "nodes"), "nodes")) {
    if (!n.is_array() || n.size() != 2) throw InvalidInput("each node must be a pair [r, s]");
    nodes.emplace_back(small_int(n[0], "node endpoint") - 1, small_int(n[1], "node endpoint") - 1);
  }
  return DualGraph(p, std::move(nodes), small_int(field(j, "marked"), "marked") - 1);
}

Polarization polarization_from_json(const Json& j) {
  std::vector<Rational> weights;
  for (const auto& w : array(field(j, "polarization"), "polarization")) weights.push_back(rational(w));
  return Polarization(std::move(weights));
}

void expect_length(std::size_t got, int p, const char* what) {
  if (got != static_cast<std::size_t>(p)) {
    throw InvalidInput(std::string(what) + " needs one entry per component");
  }
}

const char* kind_name(BlowupSchedule::Diagonals d) {
  return d == BlowupSchedule::Diagonals::descending ? "descending" : "ascending";
}

const char* kind_name(BlowupSchedule::Components c) {
  switch (c) {
    case BlowupSchedule::Components::lex: return "lex";
    case BlowupSchedule::Components::reverse: return "reverse";
    case BlowupSchedule::Components::none: return "none";
  }
  return "lex";
}

Json labels_json(const SpecialPointData& point) {
  Json out = Json::array();
  for (const auto& l : point.labels) out.push_back(l.str());
  return out;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

CurveFile curve_from_json(const Json& j) {
  DualGraph graph = graph_from_json(j);
  Polarization pol = polarization_from_json(j);
  expect_length(pol.weights().size(), graph.components(), "polarization");
  Multidegree md{integers(field(j, "multidegree"), "multidegree")};
  expect_length(md.degs.size(), graph.components(), "multidegree");
  return {std::move(graph), std::move(pol), std::move(md)};
}

ChainFile chain_from_json(const Json& j) {
  const Json& base = field(j, "base");
  DualGraph graph = graph_from_json(base);
  Polarization pol = polarization_from_json(base);
  expect_length(pol.weights().size(), graph.components(), "polarization");
  const int d = small_int(field(j, "d"), "d");
  if (d < 0) throw InvalidInput("d must be nonnegative");

  ChainMarkedCurve curve{graph, d, integers(field(j, "base_degs"), "base_degs"),
                         std::vector<std::vector<Integer>>(
                             static_cast<std::size_t>(graph.node_count()),
                             std::vector<Integer>(static_cast<std::size_t>(d), 0))};
  if (auto it = j.find("chain_degs"); it != j.end()) {
    if (!it->is_object()) throw InvalidInput("chain_degs must be an object keyed by node");
    for (const auto& [key, value] : it->items()) {
      int node = 0;
      try {
        std::size_t used = 0;
        node = std::stoi(key, &used);
        if (used != key.size()) throw InvalidInput("");
      } catch (const std::exception&) {
        throw InvalidInput("chain_degs key '" + key + "' is not a node index");
      }
      if (node < 1 || node > graph.node_count()) throw InvalidInput("chain_degs node out of range");
      curve.chain_degs[node - 1] = integers(value, "chain_degs");
    }
  }
  curve.validate();
  return {std::move(curve), std::move(pol)};
}

SubsetCollection collection_from_json(const Json& j) {
  const int n = small_int(field(j, "d_plus_1"), "d_plus_1");
  if (n < 1 || n > 63) throw InvalidInput("d_plus_1 must lie in [1, 63]");
  const Json& sets = array(field(j, "sets"), "sets");
  const Json* kinds = nullptr;
  if (auto it = j.find("kinds"); it != j.end()) {
    kinds = &array(*it, "kinds");
    if (kinds->size() != sets.size()) throw InvalidInput("kinds needs one entry per set");
  }
  SubsetCollection col{n, {}};
  for (std::size_t s = 0; s < sets.size(); ++s) {
    IndexSet set;
    for (const auto& e : array(sets[s], "set")) {
      const int i = small_int(e, "set element");
      if (i < 1 || i > n) throw InvalidInput("set element out of range");
      set.insert(i - 1);
    }
    BlowupDivisor divisor{BlowupDivisor::Kind::x_side, set};
    if (kinds) {
      const auto& k = (*kinds)[s];
      const std::string name = k.is_string() ? k.get<std::string>() : "";
      if (name == "x") divisor.kind = BlowupDivisor::Kind::x_side;
      else if (name == "y") divisor.kind = BlowupDivisor::Kind::y_side;
      else if (name == "diag") divisor.kind = BlowupDivisor::Kind::diagonal;
      else throw InvalidInput("kind must be \"x\", \"y\" or \"diag\"");
    }
    col.sets.push_back(normalize_divisor(divisor, n));
  }
  col.validate();
  return col;
}

SpecialPointData point_from_json(const Json& j) {
  std::vector<int> ells;
  for (const auto& e : array(field(j, "ells"), "ells")) {
    const int l = small_int(e, "ells entry");
    if (l < 1) throw InvalidInput("node names start at 1");
    ells.push_back(l);
  }
  std::vector<std::string> words;
  for (const auto& w : array(field(j, "labels"), "labels")) {
    if (!w.is_string()) throw InvalidInput("labels must be strings");
    words.push_back(w.get<std::string>());
  }
  return make_special_point(ells, words);
}

Json to_json(const SpecialPointData& point) {
  Json ells = Json::array();
  for (int l : point.ells) ells.push_back(l + 1);
  return Json{{"ells", ells}, {"labels", labels_json(point)}};
}

BlowupSchedule schedule_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("schedule must be a JSON object");
  BlowupSchedule s;
  if (auto it = j.find("diagonals"); it != j.end()) {
    const std::string v = it->is_string() ? it->get<std::string>() : "";
    if (v == "descending") s.diagonals = BlowupSchedule::Diagonals::descending;
    else if (v == "ascending") s.diagonals = BlowupSchedule::Diagonals::ascending;
    else throw InvalidInput("diagonals must be \"descending\" or \"ascending\"");
  }
  if (auto it = j.find("components"); it != j.end()) {
    const std::string v = it->is_string() ? it->get<std::string>() : "";
    if (v == "lex") s.components = BlowupSchedule::Components::lex;
    else if (v == "reverse") s.components = BlowupSchedule::Components::reverse;
    else if (v == "none") s.components = BlowupSchedule::Components::none;
    else throw InvalidInput("components must be \"lex\", \"reverse\" or \"none\"");
  }
  if (auto it = j.find("diagonals_first"); it != j.end()) {
    if (!it->is_boolean()) throw InvalidInput("diagonals_first must be a boolean");
    s.diagonals_first = it->get<bool>();
  }
  return s;
}

Json to_json(const BlowupSchedule& schedule) {
  return Json{{"diagonals", kind_name(schedule.diagonals)},
              {"components", kind_name(schedule.components)},
              {"diagonals_first", schedule.diagonals_first}};
}

Json to_json(const Subcurve& y) {
  Json out = Json::array();
  for (int c : y.component_list()) out.push_back(c + 1);
  return out;
}

Json to_json(const TwistVector& twist) { return Json(twist.coeffs); }

Json to_json(const Witness& witness, int condition) {
  Json out{{"subcurve", to_json(witness.subcurve)}};
  if (condition == 1) {
    out["node"] = witness.node + 1;
    out["j1"] = witness.j1 + 1;
    out["j2"] = witness.j2 + 1;
  } else {
    Json f = Json::array();
    for (int j : witness.function) f.push_back(j + 1);
    out["function"] = f;
    out["value"] = to_string(witness.value);
  }
  return out;
}

Json to_json(const ExtensionReport& report) {
  const auto& p = report.params;
  Json params{{"d", p.d},
              {"q", p.data.q},
              {"L", Json::array({p.data.deg_c1, p.data.deg_c2})},
              {"pol", Json::array({to_string(p.data.e_c1), to_string(p.data.e_c2)})},
              {"order", p.schedule ? to_json(*p.schedule) : Json("paper")},
              {"mode", p.mode == Condition2Mode::brute ? "brute" : "separable"}};
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back(Json{{"index", f.index},
                            {"point", to_json(f.point)},
                            {"condition", f.condition},
                            {"witness", to_json(f.witness, f.condition)}});
  }
  return Json{{"params", params},
              {"points", report.points},
              {"failures", failures},
              {"verdict", report.verdict() ? "pass" : "fail"}};
}

}  // namespace abelmap::io
