#include "doctest.h"

#include <cstdio>

#include "support.hpp"
#include "vertexlab/model_json.hpp"

using namespace vertexlab;
using testsupport::Rng;

TEST_CASE("spec round-trips through JSON") {
  Rng rng(61);
  LatticeSpec spec =
      LatticeSpec::staggered_lattice(4, 6, Staggering::bipartite, rng.weights(), rng.weights());
  BondFugacities fug;
  fug.s_h = cplx(2.0, 0.0);
  fug.d_v = cplx(0.5, -1.0);
  spec.fugacities = fug;

  LatticeSpec back = spec_from_json(spec_to_json(spec));
  CHECK(back.rows == spec.rows);
  CHECK(back.cols == spec.cols);
  CHECK(back.staggering == spec.staggering);
  CHECK(back.cellA == spec.cellA);
  REQUIRE(back.cellB.has_value());
  CHECK(*back.cellB == *spec.cellB);
  REQUIRE(back.fugacities.has_value());
  CHECK(*back.fugacities == *spec.fugacities);
}

TEST_CASE("file round trip") {
  Rng rng(62);
  LatticeSpec spec = LatticeSpec::homogeneous_lattice(2, 3, rng.weights());
  std::string path = "test_model_roundtrip.json";
  spec_to_file(spec, path);
  LatticeSpec back = spec_from_file(path);
  CHECK(back.cellA == spec.cellA);
  CHECK(!back.cellB);
  CHECK(!back.fugacities);
  std::remove(path.c_str());
}

TEST_CASE("minimal document parses with defaults") {
  json j = {{"lattice", {{"rows", 1}, {"cols", 1}}},
            {"weights", weights_to_json(Weights16::all_ones())}};
  LatticeSpec spec = spec_from_json(j);
  CHECK(spec.staggering == Staggering::homogeneous);
  CHECK(spec.cellA == Weights16::all_ones());
}

TEST_CASE("schema violations are reported as such") {
  json good = {{"lattice", {{"rows", 2}, {"cols", 2}, {"staggering", "homogeneous"}}},
               {"weights", weights_to_json(Weights16::all_ones())}};
  CHECK_NOTHROW(spec_from_json(good));

  SUBCASE("missing weights") {
    json j = good;
    j.erase("weights");
    CHECK_THROWS_AS(spec_from_json(j), SchemaError);
  }
  SUBCASE("non-integer rows") {
    json j = good;
    j["lattice"]["rows"] = 2.5;
    CHECK_THROWS_AS(spec_from_json(j), SchemaError);
  }
  SUBCASE("rows out of range") {
    json j = good;
    j["lattice"]["rows"] = 0;
    CHECK_THROWS_AS(spec_from_json(j), SchemaError);
  }
  SUBCASE("unknown staggering") {
    json j = good;
    j["lattice"]["staggering"] = "diagonal";
    CHECK_THROWS_AS(spec_from_json(j), SchemaError);
  }
  SUBCASE("staggered without second cell") {
    json j = good;
    j["lattice"]["staggering"] = "column";
    CHECK_THROWS_AS(spec_from_json(j), SchemaError);
  }
  SUBCASE("complex entries must be [re, im]") {
    json j = good;
    j["weights"]["w"][3] = 1.25;  // bare scalar
    CHECK_THROWS_AS(spec_from_json(j), SchemaError);
    j["weights"]["w"][3] = json::array({1.0, 2.0, 3.0});
    CHECK_THROWS_AS(spec_from_json(j), SchemaError);
  }
  SUBCASE("short weight list") {
    json j = good;
    j["weights"]["v"].erase(7);
    CHECK_THROWS_AS(spec_from_json(j), SchemaError);
  }
}

TEST_CASE("unreadable and malformed files") {
  CHECK_THROWS_AS(spec_from_file("does_not_exist.json"), SchemaError);
  std::string path = "test_model_bad.json";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f);
    std::fputs("{not json", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(spec_from_file(path), SchemaError);
  std::remove(path.c_str());
}
