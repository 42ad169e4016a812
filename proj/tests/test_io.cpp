#include <doctest.h>

#include "abelmap/errors.hpp"
#include "abelmap/io.hpp"

using namespace abelmap;
using io::Json;

namespace {

std::string data_file(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("curve files") {
  const auto f = io::curve_from_json(io::read_json(data_file("curve_two_nodes.json")));
  CHECK(f.graph.components() == 2);
  CHECK(f.graph.node_count() == 2);
  CHECK(f.graph.marked() == 0);
  CHECK(f.pol.weights() == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(f.md.degs == std::vector<Integer>{1, 0});

  CHECK_THROWS_AS(io::curve_from_json(io::read_json(data_file("curve_missing_field.json"))), InvalidInput);
  CHECK_THROWS_AS(io::read_json(data_file("nope.json")), InvalidInput);

  auto j = Json::parse(R"({"components": 2, "nodes": [[1, 2]], "marked": 1,
                           "polarization": ["1/2", "x"], "multidegree": [0, 0]})");
  CHECK_THROWS_AS(io::curve_from_json(j), InvalidInput);
  j["polarization"] = {"0", "0"};
  j["multidegree"] = {0, 0, 0};
  CHECK_THROWS_AS(io::curve_from_json(j), InvalidInput);
  j["multidegree"] = {0, 0};
  j["nodes"] = {{1, 3}};
  CHECK_THROWS_AS(io::curve_from_json(j), InvalidInput);
  j["nodes"] = {{1, 2}};
  j["marked"] = "1";
  CHECK_THROWS_AS(io::curve_from_json(j), InvalidInput);
  CHECK_THROWS_AS(io::curve_from_json(Json::array()), InvalidInput);
}

TEST_CASE("chain files") {
  const auto f = io::chain_from_json(io::read_json(data_file("chain_010.json")));
  CHECK(f.curve.chain_len == 3);
  CHECK(f.curve.chain_degs[0] == std::vector<Integer>{0, 1, 0});

  auto j = Json::parse(R"({"base": {"components": 2, "nodes": [[1, 2], [1, 2]], "marked": 1,
                                    "polarization": ["0", "0"], "multidegree": [0, 0]},
                           "d": 2, "base_degs": [0, 0], "chain_degs": {"2": [1, -1]}})");
  const auto g = io::chain_from_json(j);
  CHECK(g.curve.chain_degs[0] == std::vector<Integer>{0, 0});
  CHECK(g.curve.chain_degs[1] == std::vector<Integer>{1, -1});
  j["chain_degs"] = {{"3", {0, 0}}};
  CHECK_THROWS_AS(io::chain_from_json(j), InvalidInput);
  j["chain_degs"] = {{"1", {0}}};
  CHECK_THROWS_AS(io::chain_from_json(j), InvalidInput);
  j["chain_degs"] = {{"one", {0, 0}}};
  CHECK_THROWS_AS(io::chain_from_json(j), InvalidInput);
}

TEST_CASE("collection files") {
  const auto c = io::collection_from_json(io::read_json(data_file("collection_fig.json")));
  CHECK(c.n == 3);
  CHECK(c.sets == std::vector<IndexSet>{IndexSet::of({0}), IndexSet::of({1})});
  const auto k = io::collection_from_json(
      Json::parse(R"({"d_plus_1": 3, "sets": [[2, 3], [1, 2], [1]], "kinds": ["y", "diag", "x"]})"));
  CHECK(k.sets == std::vector<IndexSet>{IndexSet::of({0}), IndexSet::of({0, 1}), IndexSet::of({0})});
  CHECK_THROWS_AS(io::collection_from_json(Json::parse(R"({"d_plus_1": 3, "sets": [[4]]})")), InvalidInput);
  CHECK_THROWS_AS(io::collection_from_json(Json::parse(R"({"d_plus_1": 3, "sets": [[1, 2, 3]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(
      io::collection_from_json(Json::parse(R"({"d_plus_1": 3, "sets": [[1]], "kinds": ["z"]})")),
      InvalidInput);
}

TEST_CASE("special points and schedules") {
  const auto p = io::point_from_json(Json::parse(R"({"ells": [1, 2], "labels": ["22", "11", "12"]})"));
  CHECK(p == make_special_point({1, 2}, {"11", "12", "22"}));
  CHECK(io::to_json(p).dump() == R"({"ells":[1,2],"labels":["11","12","22"]})");
  CHECK(io::point_from_json(io::to_json(p)) == p);
  CHECK_THROWS_AS(io::point_from_json(Json::parse(R"({"ells": [0], "labels": ["1", "2"]})")), InvalidInput);
  CHECK_THROWS_AS(io::point_from_json(Json::parse(R"({"ells": [1], "labels": ["1", "3"]})")), InvalidInput);

  const auto s = io::schedule_from_json(io::read_json(data_file("schedule_components_first.json")));
  CHECK_FALSE(s.diagonals_first);
  CHECK(io::schedule_from_json(io::read_json(data_file("schedule_paper.json"))) == BlowupSchedule::paper());
  CHECK(io::schedule_from_json(io::to_json(s)) == s);
  CHECK_THROWS_AS(io::schedule_from_json(Json::parse(R"({"diagonals": "sideways"})")), InvalidInput);
}

TEST_CASE("report json") {
  VerifyParams params;
  params.d = 2;
  params.data = TwoComponentData{2, 0, 0, Rational(0), Rational(0)};
  params.schedule = io::schedule_from_json(io::read_json(data_file("schedule_components_first.json")));
  const auto j = io::to_json(verify_extension(params));
  CHECK(j["verdict"] == "fail");
  CHECK(j["points"] == 8);
  REQUIRE(j["failures"].size() == 4);
  const auto& f = j["failures"][0];
  CHECK(f["condition"] == 2);
  CHECK(f["point"]["ells"] == Json::array({1, 1}));
  CHECK(f["witness"]["subcurve"] == Json::array({1}));
  CHECK(f["witness"]["value"] == "-1");
  CHECK(j["params"]["order"]["diagonals_first"] == false);

  params.schedule.reset();
  const auto ok = io::to_json(verify_extension(params));
  CHECK(ok["verdict"] == "pass");
  CHECK(ok["params"]["order"] == "paper");
  CHECK(ok["failures"].empty());
}
