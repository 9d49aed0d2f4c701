#include "lcurve/serialization.hpp"

#include <bit>
#include <sstream>

#include "lcurve/errors.hpp"

namespace lcurve {

std::string format_coefficient(const ExactCoefficient& c) {
  const std::string denominator = c.k() == 0 ? "" : "/" + std::to_string(std::int64_t{1} << c.k());
  const auto sqrt_part = [](std::int64_t b) {
    if (b == 1) return std::string("sqrt2");
    if (b == -1) return std::string("-sqrt2");
    return std::to_string(b) + "sqrt2";
  };
  if (c.b() == 0) return std::to_string(c.a()) + denominator;
  if (c.a() == 0) return sqrt_part(c.b()) + denominator;
  std::string numerator = std::to_string(c.a()) + (c.b() > 0 ? "+" : "") + sqrt_part(c.b());
  return c.k() == 0 ? numerator : "(" + numerator + ")" + denominator;
}

std::string format_spin(const ExactSpinElement& z) {
  const int m = z.dimension();
  std::string out;
  for (const auto& [mask, c] : z.multivector().terms()) {
    std::string coefficient = format_coefficient(c);
    const bool negative = coefficient.front() == '-';
    if (negative) coefficient.erase(0, 1);
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mask == 0) {
      out += coefficient;
      continue;
    }
    if (coefficient != "1") out += coefficient + " ";
    out += "e";
    bool first = true;
    for (int i = 0; i < m; ++i) {
      if (!(mask & (BladeMask{1} << i))) continue;
      if (!first && m >= 10) out += ".";
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out.empty() ? "0" : out;
}

Json to_json(const ExactCoefficient& c) { return Json{{"a", c.a()}, {"b", c.b()}, {"k", c.k()}}; }

Json to_json(const ExactSpinElement& z) {
  Json blades = Json::array();
  for (const auto& [mask, c] : z.multivector().terms()) {
    blades.push_back(Json{{"mask", mask}, {"a", c.a()}, {"b", c.b()}, {"k", c.k()}});
  }
  return Json{{"m", z.dimension()}, {"blades", blades}};
}

ExactSpinElement spin_from_json(const Json& j) {
  try {
    const int m = j.at("m").get<int>();
    std::vector<ExactMultivector::Term> terms;
    for (const auto& b : j.at("blades")) {
      terms.emplace_back(b.at("mask").get<BladeMask>(),
                         ExactCoefficient(b.at("a").get<std::int64_t>(), b.at("b").get<std::int64_t>(),
                                          b.at("k").get<int>()));
    }
    return ExactSpinElement(ExactMultivector(m, std::move(terms)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad spin element JSON: ") + e.what());
  }
}

Json to_json(const Eigen::MatrixXd& x) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < x.cols(); ++j) row.push_back(x(i, j));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const Json& j) {
  try {
    const auto rows = static_cast<Eigen::Index>(j.size());
    if (rows == 0) throw ParseError("empty matrix");
    Eigen::MatrixXd x(rows, rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (static_cast<Eigen::Index>(j[i].size()) != rows) throw ParseError("matrix JSON is not square");
      for (Eigen::Index k = 0; k < rows; ++k) x(i, k) = j[i][k].get<double>();
    }
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad matrix JSON: ") + e.what());
  }
}

Eigen::MatrixXd parse_matrix(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<double> row;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(token, &used));
        if (used != token.size()) throw ParseError("bad matrix entry '" + token + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad matrix entry '" + token + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const auto m = static_cast<Eigen::Index>(rows.size());
  if (m == 0) throw ParseError("empty matrix");
  Eigen::MatrixXd x(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != m) throw ParseError("matrix text is not square");
    for (Eigen::Index j = 0; j < m; ++j) x(i, j) = rows[i][j];
  }
  return x;
}

std::string format_matrix(const Eigen::MatrixXd& x) {
  std::ostringstream out;
  out.precision(17);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) out << (j ? " " : "") << x(i, j);
    out << '\n';
  }
  return out.str();
}

Json to_json(const FramePath& path) {
  Json frames = Json::array();
  for (const auto& f : path.frames) {
    Json flat = Json::array();
    for (Eigen::Index i = 0; i < f.rows(); ++i) {
      for (Eigen::Index j = 0; j < f.cols(); ++j) flat.push_back(f(i, j));
    }
    frames.push_back(flat);
  }
  Json lifts = Json::array();
  for (const auto& z : path.lifts) lifts.push_back(z.coeffs());
  return Json{{"m", path.dimension()}, {"times", path.times}, {"frames", frames}, {"lifts", lifts}};
}

FramePath frame_path_from_json(const Json& j) {
  try {
    const int m = j.at("m").get<int>();
    FramePath path;
    path.times = j.at("times").get<std::vector<double>>();
    for (const auto& flat : j.at("frames")) {
      const auto v = flat.get<std::vector<double>>();
      if (static_cast<int>(v.size()) != m * m) throw ParseError("frame has the wrong number of entries");
      Eigen::MatrixXd f(m, m);
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) f(r, c) = v[r * m + c];
      }
      path.frames.push_back(f);
    }
    if (j.contains("lifts")) {
      for (const auto& dense : j.at("lifts")) path.lifts.emplace_back(m, dense.get<std::vector<double>>());
    }
    return path;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad frame path JSON: ") + e.what());
  }
}

Json to_json(const CurveSpec& spec) { return Json{{"n", spec.n()}, {"c", spec.c()}, {"a", spec.a()}}; }

CurveSpec curve_spec_from_json(const Json& j) {
  try {
    return CurveSpec(j.at("n").get<int>(), j.at("c").get<std::vector<double>>(),
                     j.at("a").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad curve spec JSON: ") + e.what());
  }
}

Json to_json(const ClassificationReport& report, bool timing) {
  Json classes = Json::array();
  for (const auto& c : report.classes) {
    Json s_values = Json::array();
    Json by_s = Json::object();
    for (const auto& [s, count] : c.members_by_s) {
      s_values.push_back(s);
      by_s[std::to_string(s)] = count;
    }
    classes.push_back(Json{{"rep", c.representative_text},
                           {"size", c.size},
                           {"s_values", s_values},
                           {"members_by_s", by_s},
                           {"named_reps", c.named}});
  }
  Json moves = Json::object();
  for (std::size_t i = 0; i < kMoveNames.size(); ++i) moves[kMoveNames[i]] = report.merges[i];
  Json out{{"level", level_name(report.level)},
           {"n", report.m - 1},
           {"m", report.m},
           {"group_order", report.group_order},
           {"expected_classes", report.expected_classes},
           {"classes", classes},
           {"move_counts", moves},
           {"passed", report.passed()},
           {"failures", report.failures}};
  if (timing) out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

std::string to_csv(const ClassificationReport& report) {
  const auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
  };
  std::string out = "n,level,class,representative,size,s\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& c = report.classes[i];
    std::string s;
    for (const auto& [value, count] : c.members_by_s) s += (s.empty() ? "" : ";") + std::to_string(value);
    out += std::to_string(report.m - 1) + "," + level_name(report.level) + "," + std::to_string(i) + "," +
           quote(c.representative_text) + "," + std::to_string(c.size) + "," + s + "\n";
  }
  return out;
}

}  // namespace lcurve
