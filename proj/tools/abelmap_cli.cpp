// abelmap: command-line front end.
//
// Exit codes: 0 pass, 1 fail, 2 input error.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abelmap/chain_curves.hpp"
#include "abelmap/curve_model.hpp"
#include "abelmap/errors.hpp"
#include "abelmap/extension_checker.hpp"
#include "abelmap/io.hpp"
#include "abelmap/local_blowup.hpp"
#include "abelmap/special_points.hpp"

using namespace abelmap;
using io::Json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, sep);) out.push_back(part);
  return out;
}

std::string list(const std::vector<int>& v, int offset = 0) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i] + offset);
  }
  return out;
}

std::string subcurve_text(const Subcurve& y) { return "{" + list(y.component_list(), 1) + "}"; }

std::string point_text(const SpecialPointData& p) {
  std::string out = "(" + list(p.ells, 1) + ")";
  for (const auto& l : p.labels) out += " [" + l.str() + "]";
  return out;
}

std::string integers_text(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

int check_stability(const std::string& path, bool json) {
  const auto file = io::curve_from_json(io::read_json(path));
  const auto result = is_quasistable(file.graph, file.pol, file.md);
  if (json) {
    Json out{{"quasistable", result.quasistable}};
    out["witness"] = result.witness ? io::to_json(*result.witness) : Json(nullptr);
    std::cout << out.dump() << "\n";
  } else if (result) {
    std::cout << "quasistable\n";
  } else {
    std::cout << "not quasistable: Y = " << subcurve_text(*result.witness) << "\n";
  }
  return result ? kPass : kFail;
}

int twist_search(const std::string& path, std::optional<Integer> bound, bool json) {
  const auto file = io::curve_from_json(io::read_json(path));
  const auto twist = quasistable_twist_search(file.graph, file.pol, file.md, bound);
  const auto md = twist_action(file.graph, file.md, twist);
  if (json) {
    std::cout << Json{{"twist", io::to_json(twist)}, {"multidegree", md.degs}}.dump() << "\n";
  } else {
    std::cout << "twist " << integers_text(twist.coeffs) << "\n";
    std::cout << "multidegree " << integers_text(md.degs) << "\n";
  }
  return kPass;
}

int semistabilize_cmd(const std::string& path, bool json) {
  const auto file = io::chain_from_json(io::read_json(path));
  const auto check = check_pushforward(file.curve, file.pol);
  const auto result = semistabilize(file.curve);
  const auto& c = result.curve;
  if (json) {
    Json chains = Json::object();
    Json twister = Json::object();
    for (int n = 0; n < c.base.node_count(); ++n) {
      chains[std::to_string(n + 1)] = c.chain_degs[n];
      twister[std::to_string(n + 1)] = result.twister.multiplicity[n];
    }
    Json out{{"base_degs", c.base_degs},
             {"chain_degs", chains},
             {"twister", twister},
             {"steps", result.windows.size()},
             {"pushforward_quasistable", check.hypotheses}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "steps " << result.windows.size() << "\n";
    std::cout << "base " << integers_text(c.base_degs) << "\n";
    for (int n = 0; n < c.base.node_count(); ++n) {
      std::cout << "node " << n + 1 << " chain " << integers_text(c.chain_degs[n]) << " Z "
                << integers_text(result.twister.multiplicity[n]) << "\n";
    }
    std::cout << "pushforward quasistable: " << (check.hypotheses ? "yes" : "no");
    if (check.witness) std::cout << " (Y = " << subcurve_text(*check.witness) << ")";
    std::cout << "\n";
  }
  return check.hypotheses ? kPass : kFail;
}

int collection_order(const std::string& path, bool json) {
  const auto col = io::collection_from_json(io::read_json(path));
  if (!is_smooth_collection(col)) {
    if (json) std::cout << Json{{"smooth", false}}.dump() << "\n";
    else std::cout << "not smooth\n";
    return kFail;
  }
  const auto eta = a_order(col);
  if (json) {
    Json nodes = Json::array();
    for (int i = 0; i < col.n; ++i) {
      const auto inc = strict_transform_incidence(col, i);
      Json x = Json::array(), y = Json::array();
      for (int e : inc.x_side.elements()) x.push_back(e + 1);
      for (int e : inc.y_side.elements()) y.push_back(e + 1);
      nodes.push_back(Json{{"node", i + 1}, {"sigma", eta[i] + 1}, {"x", x}, {"y", y}});
    }
    std::cout << Json{{"smooth", true}, {"nodes", nodes}}.dump() << "\n";
  } else {
    std::cout << "order " << list(eta, 1) << "\n";
    for (int i = 0; i < col.n; ++i) {
      const auto inc = strict_transform_incidence(col, i);
      std::vector<int> x = inc.x_side.elements(), y = inc.y_side.elements();
      std::cout << "N" << i + 1 << " on Sigma_" << eta[i] + 1 << "  x: {" << list(x, 1)
                << "}  y: {" << list(y, 1) << "}\n";
    }
  }
  return kPass;
}

int enumerate_cmd(int d, int q, bool json, bool count_only, bool symbolic) {
  if (d < 1 || q < 1) throw InvalidInput("--d and --q must be at least 1");
  if (count_only) {
    std::uint64_t count = 0;
    if (symbolic) {
      std::vector<SpecialPointData> seen;
      for_each_special_point(d, q, ell_order, [&](const SpecialPointData& p) { seen.push_back(symbolic_form(p)); });
      std::sort(seen.begin(), seen.end());
      count = static_cast<std::uint64_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
    } else {
      count = special_point_count(d, q);
    }
    std::cout << (json ? Json{{"count", count}}.dump() : std::to_string(count)) << "\n";
    return kPass;
  }
  if (symbolic) {
    std::vector<SpecialPointData> seen;
    for_each_special_point(d, q, ell_order, [&](const SpecialPointData& p) { seen.push_back(symbolic_form(p)); });
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    if (json) {
      Json out = Json::array();
      for (const auto& p : seen) out.push_back(io::to_json(p));
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& p : seen) std::cout << point_text(p) << "\n";
    }
    return kPass;
  }
  // Literal enumeration streams; JSON is one array, written incrementally.
  bool first = true;
  if (json) std::cout << "[";
  for_each_special_point(d, q, ell_order, [&](const SpecialPointData& p) {
    if (json) {
      std::cout << (first ? "" : ",") << io::to_json(p).dump();
      first = false;
    } else {
      std::cout << point_text(p) << "\n";
    }
  });
  if (json) std::cout << "]\n";
  return kPass;
}

struct VerifyArgs {
  int d = 0;
  int q = 0;
  std::string degrees;
  std::string pol;
  std::string order = "paper";
  std::string mode = "separable";
  int shards = 1;
};

int verify_cmd(const VerifyArgs& args, bool json) {
  VerifyParams params;
  params.d = args.d;
  params.shards = args.shards;
  params.data.q = args.q;
  const auto degs = split(args.degrees, ',');
  const auto weights = split(args.pol, ',');
  if (degs.size() != 2) throw InvalidInput("--L takes two degrees d1,d2");
  if (weights.size() != 2) throw InvalidInput("--pol takes two weights a/b,c/d");
  const Rational d1 = parse_rational(degs[0]), d2 = parse_rational(degs[1]);
  if (!is_integer(d1) || !is_integer(d2)) throw InvalidInput("--L degrees must be integers");
  params.data.deg_c1 = d1.numerator();
  params.data.deg_c2 = d2.numerator();
  params.data.e_c1 = parse_rational(weights[0]);
  params.data.e_c2 = parse_rational(weights[1]);
  if (args.mode == "brute") params.mode = Condition2Mode::brute;
  else if (args.mode != "separable") throw InvalidInput("--mode is brute or separable");
  if (args.order != "paper") params.schedule = io::schedule_from_json(io::read_json(args.order));

  const auto report = verify_extension(params);
  if (json) {
    std::cout << io::to_json(report).dump() << "\n";
  } else {
    std::cout << "points " << report.points << "\n";
    for (const auto& f : report.failures) {
      std::cout << "FAIL condition " << f.condition << " at #" << f.index << " " << point_text(f.point)
                << ": Y = " << subcurve_text(f.witness.subcurve);
      if (f.condition == 1) {
        std::cout << " node " << f.witness.node + 1 << " j1 " << f.witness.j1 + 1 << " j2 "
                  << f.witness.j2 + 1;
      } else {
        std::cout << " function (" << list(f.witness.function, 1) << ") value "
                  << to_string(f.witness.value);
      }
      std::cout << "\n";
    }
    std::cout << "verdict " << (report.verdict() ? "pass" : "fail (sufficient conditions not met)")
              << "\n";
  }
  return report.verdict() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abel map extension checks on nodal curves"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string path;
  auto* stability = app.add_subcommand("check-stability", "P-quasistability of a multidegree");
  stability->add_option("curve", path, "curve file")->required();
  stability->add_flag("--json", json);

  auto* semi = app.add_subcommand("semistabilize", "twist a bundle on C(d) until quasistable");
  semi->add_option("chain", path, "chain file")->required();
  semi->add_flag("--json", json);

  auto* collection = app.add_subcommand("collection", "smooth collections");
  collection->require_subcommand(1);
  auto* order = collection->add_subcommand("order", "A-ordering and node incidence");
  order->add_option("collection", path, "collection file")->required();
  order->add_flag("--json", json);

  int d = 0, q = 0;
  bool count_only = false, symbolic = false;
  auto* enumerate = app.add_subcommand("enumerate", "special point data");
  enumerate->add_option("--d", d)->required();
  enumerate->add_option("--q", q)->required();
  enumerate->add_flag("--json", json);
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_flag("--symbolic", symbolic, "rename nodes by first appearance and dedup");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check both extension conditions at every special point");
  verify->add_option("--d", va.d)->required();
  verify->add_option("--q", va.q)->required();
  verify->add_option("--L", va.degrees, "d1,d2")->required();
  verify->add_option("--pol", va.pol, "a/b,c/d")->required();
  verify->add_option("--order", va.order, "paper or a schedule file");
  verify->add_option("--mode", va.mode, "brute or separable");
  verify->add_option("--shards", va.shards);
  verify->add_flag("--json", json);

  std::optional<Integer> bound;
  auto* oracle = app.add_subcommand("oracle", "reference computations");
  oracle->require_subcommand(1);
  auto* twist = oracle->add_subcommand("twist-search", "quasistable twist of a multidegree");
  twist->add_option("curve", path, "curve file")->required();
  twist->add_option("--bound", bound);
  twist->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (stability->parsed()) return check_stability(path, json);
    if (semi->parsed()) return semistabilize_cmd(path, json);
    if (order->parsed()) return collection_order(path, json);
    if (enumerate->parsed()) return enumerate_cmd(d, q, json, count_only, symbolic);
    if (verify->parsed()) return verify_cmd(va, json);
    if (twist->parsed()) return twist_search(path, bound, json);
  } catch (const NotAdmissible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const SearchExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
