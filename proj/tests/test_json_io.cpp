#include <doctest.h>

#include <json.hpp>

#include "dcut/errors.hpp"
#include "dcut/json_io.hpp"
#include "dcut/oracle.hpp"
#include "support/common.hpp"

using namespace dcut;

TEST_CASE("certificate json round trip") {
  auto cert = oracle_solve(testsupport::cycle(6), 1);
  REQUIRE(cert.has_value());
  std::string text = certificate_to_json(*cert);
  DCutCertificate back = certificate_from_json(text);
  CHECK(back.d == cert->d);
  CHECK(back.red == cert->red);
  CHECK(back.blue == cert->blue);
  CHECK(back.cut_edges == cert->cut_edges);

  auto j = nlohmann::json::parse(text);
  CHECK(j.at("d") == 1);
  CHECK(j.at("red").is_array());
  CHECK(j.at("cut_edges").at(0).size() == 2);
  CHECK(text.back() == '\n');

  // reversed pairs normalise on the way in
  DCutCertificate rev = certificate_from_json(
      R"({"d":1,"red":[0],"blue":[1],"cut_edges":[[1,0]]})");
  CHECK(rev.cut_edges == std::vector<Edge>{{0, 1}});
}

TEST_CASE("certificate json rejections") {
  CHECK_THROWS_AS(certificate_from_json("{"), ParseError);
  CHECK_THROWS_AS(certificate_from_json("[]"), ParseError);
  CHECK_THROWS_AS(certificate_from_json(R"({"d":1,"red":[0],"blue":[1]})"),
                  ParseError);  // cut_edges missing
  CHECK_THROWS_AS(
      certificate_from_json(R"({"d":1,"red":[0],"blue":[1],"cut_edges":[[0]]})"),
      ParseError);
  CHECK_THROWS_AS(
      certificate_from_json(R"({"d":"two","red":[],"blue":[],"cut_edges":[]})"),
      ParseError);
}

TEST_CASE("edge colouring json round trip") {
  EdgeColouring ec;
  ec[{0, 1}] = Colour::Red;
  ec[{1, 2}] = Colour::Blue;
  std::string text = edge_colouring_to_json(ec);
  CHECK(edge_colouring_from_json(text) == ec);

  auto j = nlohmann::json::parse(text);
  CHECK(j.at("0-1") == "red");
  CHECK(j.at("1-2") == "blue");

  CHECK(edge_colouring_from_json("{}").empty());
}

TEST_CASE("edge colouring json rejections") {
  CHECK_THROWS_AS(edge_colouring_from_json("[1,2]"), ParseError);
  CHECK_THROWS_WITH(edge_colouring_from_json(R"({"0-1":"green"})"),
                    "edge-colouring JSON: colour \"green\" is neither \"red\" nor \"blue\"");
  CHECK_THROWS_WITH(edge_colouring_from_json(R"({"01":"red"})"),
                    "edge-colouring JSON: key \"01\" is not of the form \"u-v\"");
  CHECK_THROWS_AS(edge_colouring_from_json(R"({"a-b":"red"})"), ParseError);
}

TEST_CASE("role map json shape") {
  std::vector<GadgetRole> roles{{"S", {0}}, {"Vx", {2, 0}}, {"aux", {1, 3}}};
  auto j = nlohmann::json::parse(role_map_to_json(roles));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0].at("vertex") == 0);
  CHECK(j[0].at("role") == "S");
  CHECK(j[1].at("index") == nlohmann::json::array({2, 0}));
  CHECK(j[2].at("role") == "aux");
}

TEST_CASE("stats json shape") {
  SolveStats stats;
  stats.branches_by_phase["diam2/seed"] = 3;
  stats.propagation_calls = 17;
  stats.wall_time_ms = 1.25;
  auto j = nlohmann::json::parse(stats_to_json(stats));
  CHECK(j.at("branches_by_phase").at("diam2/seed") == 3);
  CHECK(j.at("propagation_calls") == 17);
  CHECK(j.at("wall_time_ms") == 1.25);
}
