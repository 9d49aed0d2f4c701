#pragma once

#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <json.hpp>

#include "lcurve/classify.hpp"
#include "lcurve/clifford_exact.hpp"
#include "lcurve/curves.hpp"
#include "lcurve/spin_numeric.hpp"

namespace lcurve {

using Json = nlohmann::json;

// "sqrt2/2", "-3/4", "(1+sqrt2)/4".
std::string format_coefficient(const ExactCoefficient& c);
// "sqrt2/2 + sqrt2/2 e12"; blades listed in mask order.
std::string format_spin(const ExactSpinElement& z);

Json to_json(const ExactCoefficient& c);
// {"m": m, "blades": [{"mask": .., "a": .., "b": .., "k": ..}, ...]} sorted by mask.
Json to_json(const ExactSpinElement& z);
ExactSpinElement spin_from_json(const Json& j);

Json to_json(const Eigen::MatrixXd& x);
Eigen::MatrixXd matrix_from_json(const Json& j);
// m lines of m whitespace-separated numbers.
Eigen::MatrixXd parse_matrix(std::string_view text);
std::string format_matrix(const Eigen::MatrixXd& x);

// {"times": [...], "frames": [[row-major entries], ...], "lifts": [[dense coefficients], ...]}
Json to_json(const FramePath& path);
FramePath frame_path_from_json(const Json& j);

Json to_json(const CurveSpec& spec);
CurveSpec curve_spec_from_json(const Json& j);

Json to_json(const ClassificationReport& report, bool timing = false);
// Columns n, level, class, representative, size, s.
std::string to_csv(const ClassificationReport& report);

}  // namespace lcurve
