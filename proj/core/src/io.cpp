#include "ratext/io.hpp"

namespace ratext {

using nlohmann::json;

namespace exact {

void to_json(json& j, const Rational& r) { j = r.str(); }

void from_json(const json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

void to_json(json& j, const Polynomial& p) {
  j = json::array();
  for (const auto& c : p.coeffs()) j.push_back(c.str());
}

void from_json(const json& j, Polynomial& p) { p = Polynomial(j.get<std::vector<Rational>>()); }

void to_json(json& j, const RationalFunction& f) { j = json{{"num", f.num()}, {"den", f.den()}}; }

void from_json(const json& j, RationalFunction& f) {
  f = RationalFunction(j.at("num").get<Polynomial>(), j.at("den").get<Polynomial>());
}

}  // namespace exact

namespace tdpt {

void to_json(json& j, const QuasiRationalFunction& f) {
  j = json{{"scale", f.scale()},
           {"exp_one_minus_z", f.exp_one_minus_z()},
           {"exp_one_plus_z", f.exp_one_plus_z()},
           {"num_coeffs", f.rf().num()},
           {"den_coeffs", f.rf().den()}};
}

void from_json(const json& j, QuasiRationalFunction& f) {
  f = QuasiRationalFunction(j.at("exp_one_minus_z").get<Rational>(), j.at("exp_one_plus_z").get<Rational>(),
                            RationalFunction(j.at("num_coeffs").get<Polynomial>(), j.at("den_coeffs").get<Polynomial>()),
                            j.at("scale").get<Rational>());
}

}  // namespace tdpt

namespace extension {

void to_json(json& j, const Level& level) { j = json{{"k", level.k}, {"E", level.energy}}; }

void from_json(const json& j, Level& level) {
  level.k = j.at("k").get<int>();
  level.energy = j.at("E").get<Rational>();
}

}  // namespace extension

namespace io {

json window_summary(const parajacobi::LambdaWindow& w) {
  json intervals = json::array();
  for (const auto& iv : w.intervals) intervals.push_back(json::array({iv.lo.str(), iv.hi.str()}));
  return json{{"case", parajacobi::to_string(w.window_case)}, {"intervals", intervals}, {"lambda_n", w.threshold}};
}

parajacobi::LambdaWindow window_from_summary(const json& j) {
  parajacobi::LambdaWindow w{parajacobi::window_case_from_string(j.at("case").get<std::string>()),
                             j.at("lambda_n").get<exact::Rational>(),
                             {}};
  for (const auto& iv : j.at("intervals"))
    w.intervals.push_back({parajacobi::ExtendedRational::parse(iv.at(0).get<std::string>()),
                           parajacobi::ExtendedRational::parse(iv.at(1).get<std::string>())});
  return w;
}

json window_intervals(const parajacobi::LambdaWindow& w) {
  json out = json::array();
  for (const auto& iv : w.intervals)
    out.push_back({{"lo", iv.lo.str()}, {"hi", iv.hi.str()}, {"case", parajacobi::to_string(w.window_case)}});
  return out;
}

json model_dump(const extension::ExtendedModel& model) {
  json q_table = json::array();
  for (const auto& level : model.spectrum) {
    const auto q = extension::q_polynomial(level.k, model.index, model.lambda);
    q_table.push_back({{"k", level.k}, {"coeffs", q.poly}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"index", {{"n", model.index.n()}, {"N", model.index.N()}, {"M", model.index.M()}}},
              {"lambda", model.lambda},
              {"potential", model.potential},
              {"spectrum", model.spectrum},
              {"q_polynomials", q_table}};
}

json gram_dump(const numverify::GramMatrix& g) {
  return json{{"levels", g.levels}, {"matrix", g.entries}, {"max_normalized_offdiag", g.max_normalized_offdiag()}};
}

}  // namespace io

}  // namespace ratext
