#pragma once

// File formats shared by the command line and the tests: the square
// complex-matrix JSON layout, the energy-spectrum JSON layout with its
// small affine rule grammar, and round-trip-safe CSV number formatting.

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kms.hpp"
#include "matrix.hpp"

namespace modbox::io {

using nlohmann::json;

// 17 significant digits: doubles survive a write-parse round trip.
inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

inline std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += fields[i];
  }
  out += '\n';
  return out;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(path + ": " + err.what());
  }
}

// Output files are written in one shot from a fully built buffer, so a
// failed computation never leaves a partial file behind.
inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("short write to " + path);
}

// ------------------------------ matrix format ------------------------------
//
// {"dim": n, "entries": [[[re, im], ...], ...]} with n^2 row-major pairs.

inline Matrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("matrix json: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
    throw std::invalid_argument("matrix json: \"dim\" must be a positive integer");
  const auto n = j["dim"].get<long long>();
  if (n > 4096) throw std::invalid_argument("matrix json: \"dim\" larger than 4096");
  if (!j.contains("entries") || !j["entries"].is_array() ||
      (long long)(j["entries"].size()) != n)
    throw std::invalid_argument("matrix json: \"entries\" must be an array of " +
                                std::to_string(n) + " rows");
  Matrix m(n, n);
  for (long long r = 0; r < n; ++r) {
    const json& row = j["entries"][std::size_t(r)];
    if (!row.is_array() || (long long)(row.size()) != n)
      throw std::invalid_argument("matrix json: entries[" + std::to_string(r) + "] must be an "
                                  "array of " + std::to_string(n) + " columns");
    for (long long c = 0; c < n; ++c) {
      const json& cell = row[std::size_t(c)];
      const std::string where =
          "entries[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
        throw std::invalid_argument("matrix json: " + where + " must be a [re, im] pair");
      const double re = cell[0].get<double>();
      const double im = cell[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        throw std::invalid_argument("matrix json: " + where + " is not finite");
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

inline json matrix_to_json(const Matrix& m) {
  require_square(m, "matrix_to_json");
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

inline Matrix read_matrix_file(const std::string& path) {
  const json j = read_json_file(path);
  try {
    return matrix_from_json(j);
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(path + ": " + err.what());
  }
}

// ------------------------------ rule grammar ------------------------------
//
// Affine expressions in the level index n: signed terms that are either a
// number, the variable n, or a number times n ("2*n" or "2n").

struct Affine {
  double offset = 0.0;
  double slope = 0.0;
};

inline Affine parse_affine(std::string_view expr) {
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("affine expression: empty");

  Affine out;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("affine expression: expected '+' or '-' at position " +
                                  std::to_string(pos));
    }
    first = false;

    double coef = 1.0;
    bool have_number = false;
    if (pos < s.size() &&
        (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
      std::size_t used = 0;
      coef = std::stod(s.substr(pos), &used);
      pos += used;
      have_number = true;
    }
    if (pos < s.size() && s[pos] == '*') {
      if (!have_number || pos + 1 >= s.size() || s[pos + 1] != 'n')
        throw std::invalid_argument("affine expression: '*' must join a number and n");
      ++pos;
    }
    if (pos < s.size() && s[pos] == 'n') {
      ++pos;
      out.slope += sign * coef;
    } else if (have_number) {
      out.offset += sign * coef;
    } else {
      throw std::invalid_argument("affine expression: expected a number or n at position " +
                                  std::to_string(pos));
    }
  }
  return out;
}

// ------------------------------ spectrum format ------------------------------
//
// Either explicit levels,
//   {"levels": [{"energy": E, "degeneracy": d | "unbounded"}, ...]}
// or a rule with affine expressions in n,
//   {"rule": {"energy": "n+0.5", "degeneracy": "1" | "n+1" | "k-n+1"}}.
// A degeneracy expression naming the box parameter k means the level count
// grows without bound in the box limit. Optional "schedule": increasing
// positive integers used as partial-sum cuts.

inline long long integer_coefficient(double value, const std::string& what) {
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > 1e-9)
    throw std::invalid_argument("spectrum json: " + what + " must be an integer, got " +
                                format_real(value));
  return (long long)(rounded);
}

inline kms::EnergySpectrum spectrum_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("spectrum json: expected an object");

  std::vector<long long> schedule;
  if (j.contains("schedule")) {
    if (!j["schedule"].is_array())
      throw std::invalid_argument("spectrum json: \"schedule\" must be an array");
    for (const auto& cut : j["schedule"]) {
      if (!cut.is_number_integer())
        throw std::invalid_argument("spectrum json: schedule entries must be integers");
      schedule.push_back(cut.get<long long>());
    }
  }

  if (j.contains("levels")) {
    if (!j["levels"].is_array() || j["levels"].empty())
      throw std::invalid_argument("spectrum json: \"levels\" must be a nonempty array");
    std::vector<kms::Level> levels;
    for (std::size_t i = 0; i < j["levels"].size(); ++i) {
      const json& item = j["levels"][i];
      const std::string where = "levels[" + std::to_string(i) + "]";
      if (!item.is_object() || !item.contains("energy") || !item["energy"].is_number())
        throw std::invalid_argument("spectrum json: " + where + " needs a numeric \"energy\"");
      kms::Level level;
      level.energy = item["energy"].get<double>();
      if (!item.contains("degeneracy")) {
        level.degeneracy = 1;
      } else if (item["degeneracy"].is_string()) {
        if (item["degeneracy"].get<std::string>() != "unbounded")
          throw std::invalid_argument("spectrum json: " + where +
                                      " degeneracy string must be \"unbounded\"");
        level.degeneracy = std::nullopt;
      } else if (item["degeneracy"].is_number_integer()) {
        level.degeneracy = item["degeneracy"].get<long long>();
      } else {
        throw std::invalid_argument("spectrum json: " + where +
                                    " degeneracy must be an integer or \"unbounded\"");
      }
      levels.push_back(level);
    }
    return kms::spectrum_from_levels(std::move(levels), std::move(schedule));
  }

  if (j.contains("rule")) {
    const json& r = j["rule"];
    if (!r.is_object() || !r.contains("energy") || !r["energy"].is_string())
      throw std::invalid_argument("spectrum json: \"rule\" needs an \"energy\" expression");
    Affine energy = parse_affine(r["energy"].get<std::string>());
    kms::SpectrumRule rule;
    rule.energy_offset = energy.offset;
    rule.energy_slope = energy.slope;
    if (r.contains("degeneracy")) {
      if (r["degeneracy"].is_number_integer()) {
        rule.deg_offset = r["degeneracy"].get<long long>();
      } else if (r["degeneracy"].is_string()) {
        const std::string expr = r["degeneracy"].get<std::string>();
        if (expr.find('k') != std::string::npos) {
          rule.deg_unbounded = true;
        } else {
          Affine deg = parse_affine(expr);
          rule.deg_offset = integer_coefficient(deg.offset, "degeneracy offset");
          rule.deg_slope = integer_coefficient(deg.slope, "degeneracy slope");
        }
      } else {
        throw std::invalid_argument(
            "spectrum json: rule degeneracy must be an integer or an expression");
      }
    }
    return kms::spectrum_from_rule(rule, std::move(schedule));
  }

  throw std::invalid_argument("spectrum json: expected \"levels\" or \"rule\"");
}

inline kms::EnergySpectrum read_spectrum_file(const std::string& path) {
  const json j = read_json_file(path);
  try {
    return spectrum_from_json(j);
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(path + ": " + err.what());
  }
}

}  // namespace modbox::io
