#include "qcausal/scenario_json.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <vector>

#include "qcausal/scenarios.hpp"

namespace qcausal {

using nlohmann::json;

namespace {

Complex parse_entry(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw InvalidInput("matrix entries must be [re, im] pairs");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

/// Accepts either n rows of n entries or a flat list of n*n entries.
std::vector<Complex> parse_square(const json& j, int n, const char* key) {
  if (!j.is_array()) throw InvalidInput(std::string(key) + " must be an array");
  std::vector<Complex> out;
  // n rows versus n*n flat entries; the sizes never coincide for n >= 2.
  if (j.size() == static_cast<std::size_t>(n)) {
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
        throw InvalidInput(std::string(key) + " rows must have " + std::to_string(n) + " entries");
      }
      for (const auto& e : row) out.push_back(parse_entry(e));
    }
  } else {
    if (j.size() != static_cast<std::size_t>(n * n)) {
      throw InvalidInput(std::string(key) + " must have " + std::to_string(n * n) + " entries");
    }
    for (const auto& e : j) out.push_back(parse_entry(e));
  }
  return out;
}

json entry_json(Complex c) { return json::array({c.real(), c.imag()}); }

AxisAngle canonical_axis_angle(const Vec3& axis, double angle) {
  if (!axis.allFinite() || std::abs(axis.norm() - 1.0) > kTolerances.input) {
    throw InvalidInput("dc.axis must be a unit 3-vector");
  }
  if (!std::isfinite(angle)) throw InvalidInput("dc.angle must be finite");
  // Rotation by angle about n equals rotation by 2 pi - angle about -n.
  double a = std::fmod(angle, 2.0 * std::numbers::pi);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  Vec3 n = axis.normalized();
  if (a > std::numbers::pi) {
    a = 2.0 * std::numbers::pi - a;
    n = -n;
  }
  return AxisAngle(BlochVector(n), a);
}

}  // namespace

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("scenario must be a JSON object");
  int keys = 0;
  for (const char* k : {"dc", "dc_matrix", "cc_bell_diagonal", "cc_matrix"}) keys += j.contains(k) ? 1 : 0;
  if (keys != 1) {
    throw InvalidInput("scenario needs exactly one of dc, dc_matrix, cc_bell_diagonal, cc_matrix");
  }

  try {
    if (j.contains("dc")) {
      const json& dc = j.at("dc");
      const auto axis = dc.at("axis").get<std::vector<double>>();
      if (axis.size() != 3) throw InvalidInput("dc.axis must have 3 components");
      const double angle = dc.at("angle").get<double>();
      return DirectCause(unitary_from_axis_angle(canonical_axis_angle(Vec3(axis[0], axis[1], axis[2]), angle)));
    }
    if (j.contains("dc_matrix")) {
      const auto e = parse_square(j.at("dc_matrix"), 2, "dc_matrix");
      Mat2 u;
      u << e[0], e[1], e[2], e[3];
      return DirectCause(u);
    }
    if (j.contains("cc_bell_diagonal")) {
      const auto w = j.at("cc_bell_diagonal").get<std::vector<double>>();
      if (w.size() != 4) throw InvalidInput("cc_bell_diagonal needs 4 weights");
      return CommonCause{bell_diagonal({w[0], w[1], w[2], w[3]})};
    }
    const auto e = parse_square(j.at("cc_matrix"), 4, "cc_matrix");
    Mat4 rho;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) rho(r, c) = e[4 * r + c];
    }
    return CommonCause{TwoQubitState(rho)};
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("malformed scenario: ") + ex.what());
  }
}

json scenario_to_json(const Scenario& s) {
  if (const auto* dc = std::get_if<DirectCause>(&s)) {
    const AxisAngle aa = axis_angle_from_rotation(rotation_from_unitary(dc->unitary));
    const Vec3& n = aa.axis.vec();
    return json{{"dc", {{"axis", {n[0], n[1], n[2]}}, {"angle", aa.angle}}}};
  }
  const Mat4& rho = std::get<CommonCause>(s).state.rho();
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(entry_json(rho(r, c)));
    rows.push_back(row);
  }
  return json{{"cc_matrix", rows}};
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open scenario file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw InvalidInput("scenario file is not valid JSON: " + std::string(ex.what()));
  }
  return scenario_from_json(j);
}

}  // namespace qcausal
