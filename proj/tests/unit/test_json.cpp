#include <doctest.h>

#include "canonlift/errors.hpp"
#include "canonlift/json_io.hpp"

using namespace canonlift;

TEST_SUITE("json") {
  TEST_CASE("abelian groups") {
    CHECK(to_json(AbelianGroup{4, {BigInt(2)}}).dump() == R"({"rank":4,"torsion":[2]})");
    BigInt huge = BigInt(1) << 80;
    CHECK(to_json(AbelianGroup{0, {huge}})["torsion"][0] == huge.str());
  }

  TEST_CASE("multicurves round trip") {
    Surface s(2, 1);
    WeightedMulticurve c{TwistCurve{s.alphabet().parse("a1 d1'"), 3, {{0, 2, -1}, {1, 0, 1}}}};
    CHECK(multicurve_from_json(multicurve_to_json(c, s), s) == c);
    CHECK_THROWS_AS(multicurve_from_json(Json::parse(R"([{"word":"a1","weight":1}])"), s), Error);
    CHECK_THROWS_AS(multicurve_from_json(Json::parse(R"([{"word":"a1","weight":1,"sites":[[0,1]]}])"), s), Error);
    CHECK_THROWS_AS(multicurve_from_json(Json::parse(R"([{"word":"zz","weight":1,"sites":[]}])"), s), Error);
  }

  TEST_CASE("transvection files") {
    Surface s(2, 0);
    auto g = transvections_from_json(
        Json::parse(R"({"generators":[[{"word":"b1","weight":1,"sites":[[0,1,1]]}],[]]})"), s);
    REQUIRE(g.size() == 2);
    CHECK(g[0][0].weight == 1);
    CHECK(g[1].empty());
    CHECK_THROWS_AS(transvections_from_json(Json::parse("[]"), s), Error);
  }

  TEST_CASE("relabelings") {
    Surface s(2, 0);
    auto r = relabeling_from_json(Json::parse(R"({"a1":"a1 b1"})"), s);
    CHECK(r.at(0) == s.alphabet().parse("a1 b1"));
    CHECK_THROWS_AS(relabeling_from_json(Json::parse(R"({"c9":"a1"})"), s), Error);
    CHECK_THROWS_AS(relabeling_from_json(Json::parse(R"({"a1":3})"), s), Error);
  }

  TEST_CASE("verdicts") {
    Surface s(2, 0);
    EquivalenceVerdict v;
    v.kind = EquivalenceVerdict::Kind::Distinguished;
    v.invariant = "component_count";
    v.values1 = "1";
    v.values2 = "2";
    v.states = 0;
    Json j = verdict_to_json(v, s);
    CHECK(j["verdict"] == "Distinguished");
    CHECK(j["values"] == Json::array({"1", "2"}));
    CHECK_FALSE(j.contains("certificate"));
    v.kind = EquivalenceVerdict::Kind::Unknown;
    CHECK_FALSE(verdict_to_json(v, s).contains("invariant"));
  }
}
