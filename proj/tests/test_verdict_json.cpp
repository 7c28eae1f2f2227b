#include "doctest.h"
#include "lpa/simplicity.hpp"
#include "lpa/verdict_json.hpp"
#include "support.hpp"

using namespace lpa;
using test::graph;

TEST_CASE("verdict json for the ball") {
  Graph ball = graph(test::kBall);
  auto j = verdict_to_json(ball, decide_lie_simple(ball, FieldSpec::rational()));
  CHECK(j["outcome"] == "simple");
  CHECK(j["case"] == "theorem-two");
  CHECK(j["field"] == "q");
  CHECK(j["W"] == nlohmann::ordered_json::array({"w"}));
  CHECK(j["balloons"][0]["v"] == "v");
  CHECK(j["balloons"][0]["loop"] == "c");
  CHECK(j["balloons"][0]["edges_to_W"] == nlohmann::ordered_json::array({"e"}));
  CHECK(j["balloons"][0]["conditions"]["iv"] == true);
  CHECK(j["memberships"][0]["coefficients"] == nlohmann::ordered_json::array({"-1"}));
  CHECK(j["reason"].is_null());

  Graph toe = graph(test::kToe);
  j = verdict_to_json(toe, decide_lie_simple(toe, FieldSpec::rational()));
  CHECK(j["reason"] == "membership-fails(v)");
  CHECK(j["memberships"][0]["ranks"] == nlohmann::ordered_json::array({0, 1}));
}

TEST_CASE("verdict json round-trips through verification") {
  for (const Graph& g : test::small_corpus(3, 3)) {
    for (FieldSpec f : {FieldSpec::rational(), FieldSpec::prime(2)}) {
      auto v = decide_lie_simple(g, f);
      auto j = verdict_to_json(g, v);
      auto back = verdict_from_json(g, nlohmann::ordered_json::parse(j.dump()));
      CHECK(verify_certificate(g, f, back).ok);
      CHECK(verdict_to_json(g, back) == j);
    }
  }
}

TEST_CASE("malformed verdict json") {
  Graph ball = graph(test::kBall);
  auto j = verdict_to_json(ball, decide_lie_simple(ball, FieldSpec::rational()));
  auto bad = j;
  bad["outcome"] = "maybe";
  CHECK_THROWS_AS(verdict_from_json(ball, bad), VerdictFormatError);
  bad = j;
  bad.erase("balloons");
  CHECK_THROWS_AS(verdict_from_json(ball, bad), VerdictFormatError);
  bad = j;
  bad["W"] = nlohmann::ordered_json::array({"nowhere"});
  CHECK_THROWS_AS(verdict_from_json(ball, bad), GraphError);
}
