#include "doctest.h"

#include "ratext/io.hpp"

using nlohmann::json;
using namespace ratext;
using exact::Polynomial;
using exact::Rational;
using exact::RationalFunction;

template <typename T>
T round_trip(const T& value) {
  return json::parse(json(value).dump()).get<T>();
}

TEST_CASE("scalar and polynomial JSON forms") {
  CHECK(json(Rational(-6, 4)) == "-3/2");
  CHECK(json(Rational(5)) == "5");
  CHECK(json(Polynomial{Rational(1), Rational(1, 2)}) == json::array({"1", "1/2"}));
  CHECK(json(Polynomial{}) == json::array());
  CHECK(round_trip(Rational(-22, 7)) == Rational(-22, 7));
  CHECK(round_trip(Polynomial{Rational(3), Rational(0), Rational(-5, 9)}) == Polynomial{Rational(3), Rational(0), Rational(-5, 9)});
  CHECK_THROWS(json("x/2").get<Rational>());
}

TEST_CASE("rational function and quasi-rational function round-trip") {
  const auto model = extension::ExtendedModel::build(parajacobi::ParaJacobiIndex(3, 2, 2), Rational(1));
  CHECK(round_trip(model.potential) == model.potential);
  const json seed = model.seed;
  for (const char* key : {"scale", "exp_one_minus_z", "exp_one_plus_z", "num_coeffs", "den_coeffs"})
    CHECK(seed.contains(key));
  CHECK(round_trip(model.seed) == model.seed);
  CHECK(round_trip(model.spectrum) == model.spectrum);
}

TEST_CASE("window summary matches the documented shape and round-trips") {
  const auto w = parajacobi::nodeless_window(parajacobi::ParaJacobiIndex(2, 2, 2));
  const json j = io::window_summary(w);
  CHECK(j == json::parse(R"({"case":"ii","intervals":[["0","2"]],"lambda_n":"2"})"));
  CHECK(io::window_from_summary(j) == w);

  const auto w322 = parajacobi::nodeless_window(parajacobi::ParaJacobiIndex(3, 2, 2));
  CHECK(io::window_summary(w322).at("intervals") == json::parse(R"([["-inf","-1/2"],["0","+inf"]])"));
  CHECK(io::window_from_summary(json::parse(io::window_summary(w322).dump())) == w322);
  CHECK(io::window_intervals(w322).at(1) == json::parse(R"({"lo":"0","hi":"+inf","case":"i"})"));
}

TEST_CASE("model dump") {
  const auto model = extension::ExtendedModel::build(parajacobi::ParaJacobiIndex(2, 2, 2), Rational(1, 2), 2);
  const json j = io::model_dump(model);
  CHECK(j.at("schema_version") == kSchemaVersion);
  CHECK(j.at("index") == json::parse(R"({"n":2,"N":2,"M":2})"));
  CHECK(j.at("lambda") == "1/2");
  CHECK(j.at("spectrum").size() == 4);
  CHECK(j.at("q_polynomials").at(0).at("k") == -3);
  CHECK(j.at("q_polynomials").at(0).at("coeffs") == json::array({"1"}));
  CHECK(j.at("potential").get<RationalFunction>() == model.potential);
  // deterministic
  CHECK(io::model_dump(model).dump() == j.dump());
}

TEST_CASE("gram dump") {
  numverify::GramMatrix g{{-3, 0}, {{2.0, 0.0}, {0.0, 3.0}}};
  const json j = io::gram_dump(g);
  CHECK(j.at("levels") == json::array({-3, 0}));
  CHECK(j.at("matrix").at(1).at(1) == 3.0);
  CHECK(j.at("max_normalized_offdiag") == 0.0);
}
