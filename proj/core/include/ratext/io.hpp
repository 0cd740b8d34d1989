#pragma once

// JSON forms of the library's values. Rationals are "num/den" strings in
// lowest terms ("5" for 5/1); polynomials are arrays of such strings,
// constant term first.

#include <vector>

#include "json.hpp"

#include "ratext/exactmath.hpp"
#include "ratext/extension.hpp"
#include "ratext/numverify.hpp"
#include "ratext/parajacobi.hpp"
#include "ratext/tdpt.hpp"

namespace ratext {

/// Bumped whenever an emitted schema changes shape.
inline constexpr int kSchemaVersion = 1;

namespace exact {
void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);
void to_json(nlohmann::json& j, const Polynomial& p);
void from_json(const nlohmann::json& j, Polynomial& p);
/// {"num": [...], "den": [...]}
void to_json(nlohmann::json& j, const RationalFunction& f);
void from_json(const nlohmann::json& j, RationalFunction& f);
}  // namespace exact

namespace tdpt {
/// {scale, exp_one_minus_z, exp_one_plus_z, num_coeffs, den_coeffs}
void to_json(nlohmann::json& j, const QuasiRationalFunction& f);
void from_json(const nlohmann::json& j, QuasiRationalFunction& f);
}  // namespace tdpt

namespace extension {
/// {"k": int, "E": "num/den"}
void to_json(nlohmann::json& j, const Level& level);
void from_json(const nlohmann::json& j, Level& level);
}  // namespace extension

namespace io {

/// {"case": "ii", "intervals": [["0", "2"]], "lambda_n": "2"}
nlohmann::json window_summary(const parajacobi::LambdaWindow& w);
parajacobi::LambdaWindow window_from_summary(const nlohmann::json& j);

/// [{"lo": ..., "hi": ..., "case": ...}, ...]
nlohmann::json window_intervals(const parajacobi::LambdaWindow& w);

/// index, lambda, potential, spectrum and the Q coefficient table for every
/// listed level.
nlohmann::json model_dump(const extension::ExtendedModel& model);

/// 2-D array of doubles plus the level labels.
nlohmann::json gram_dump(const numverify::GramMatrix& g);

}  // namespace io

}  // namespace ratext
