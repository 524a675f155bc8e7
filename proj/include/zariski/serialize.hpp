#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "zariski/closure.hpp"

namespace zariski {

using Json = nlohmann::json;

// ---- matrices: {"n": int, "entries": [["p/q", ...], ...]} ----

inline Json matrix_to_json(const RatMatrix& m) {
  Json entries = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"n", m.rows()}, {"entries", std::move(entries)}};
}

inline Rational rational_from_json(const Json& v) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  fail(ErrorKind::ParseError, "expected a rational as string or integer");
}

inline RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries"))
    fail(ErrorKind::ParseError, "matrix JSON must be {\"n\":..., \"entries\":[[...],...]}");
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.empty())
    fail(ErrorKind::ParseError, "matrix entries must be a non-empty array");
  size_t n = entries.size();
  if (j.contains("n") && j.at("n").get<size_t>() != n)
    fail(ErrorKind::ParseError, "matrix size field disagrees with the entry rows");
  RatMatrix m(n, entries.front().size());
  for (size_t i = 0; i < n; ++i) {
    const Json& row = entries.at(i);
    if (!row.is_array() || row.size() != m.cols())
      fail(ErrorKind::ParseError, "ragged matrix rows");
    for (size_t jj = 0; jj < m.cols(); ++jj) m.at(i, jj) = rational_from_json(row.at(jj));
  }
  return m;
}

// ---- lattices and points: arrays of integer arrays ----

inline Json lattice_to_json(const Lattice& l) {
  Json a = Json::array();
  for (const auto& v : l.basis) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(x.get_str());
    a.push_back(std::move(row));
  }
  return a;
}

inline std::vector<std::vector<Int>> points_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::ParseError, "points JSON must be [[int,...],...]");
  std::vector<std::vector<Int>> pts;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorKind::ParseError, "each point must be an array of integers");
    std::vector<Int> p;
    for (const auto& v : row) {
      if (v.is_number_integer())
        p.emplace_back(static_cast<long>(v.get<long long>()));
      else if (v.is_string())
        p.emplace_back(v.get<std::string>());
      else
        fail(ErrorKind::ParseError, "point coordinates must be integers");
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

inline Json points_to_json(const std::vector<std::vector<Int>>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) {
    Json row = Json::array();
    for (const auto& x : p) row.push_back(x.get_str());
    a.push_back(std::move(row));
  }
  return a;
}

// ---- symbolic diagonal input: [{"rational": "p/q", "phase": "a/b"}, ...] ----

inline std::vector<std::pair<Rational, Rational>> symbolic_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    fail(ErrorKind::ParseError, "symbolic input must be [{\"rational\":...,\"phase\":...},...]");
  std::vector<std::pair<Rational, Rational>> eigs;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("rational"))
      fail(ErrorKind::ParseError, "each symbolic eigenvalue needs a \"rational\" field");
    Rational value = rational_from_json(e.at("rational"));
    Rational phase = e.contains("phase") ? rational_from_json(e.at("phase")) : Rational(0);
    eigs.emplace_back(value, phase);
  }
  return eigs;
}

// ---- ideals: lists of polynomial strings in the documented grammar ----

inline Json ideal_to_json(const Ideal& i, Order order, const GroebnerLimits& limits = {}) {
  Json a = Json::array();
  for (const auto& g : reduced_basis(i, order, limits)) a.push_back(poly_to_string(g));
  return a;
}

inline Ideal ideal_from_json(const RingPtr& ring, const Json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "ideal JSON must be an array of strings");
  std::vector<MultiPoly> gens;
  for (const auto& s : j) gens.push_back(parse_poly(ring, s.get<std::string>()));
  return Ideal(ring, std::move(gens));
}

inline Json toric_to_json(const ToricData& t, Order order, const GroebnerLimits& limits = {}) {
  Json a_rows = Json::array();
  for (size_t i = 0; i < t.a_matrix.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < t.a_matrix.cols(); ++j) row.push_back(t.a_matrix.at(i, j).get_str());
    a_rows.push_back(std::move(row));
  }
  return Json{{"points", points_to_json(t.points)},
              {"A", std::move(a_rows)},
              {"kernel", lattice_to_json(t.kernel_lattice)},
              {"dimension", t.dimension},
              {"ideal", ideal_to_json(t.ideal, order, limits)}};
}

// ---- closure report ----

inline Json report_to_json(const ClosureReport& rep, Order order,
                           const GroebnerLimits& limits = {}) {
  Json isolated = Json::array();
  for (const auto& pt : rep.isolated_points) isolated.push_back(matrix_to_json(pt));
  Json components = nullptr;
  if (rep.component_ideals) {
    components = Json::array();
    for (const auto& c : *rep.component_ideals) components.push_back(ideal_to_json(c, order, limits));
  }
  return Json{{"mode", mode_name(rep.mode)},
              {"nu", rep.nu},
              {"has_zero_eigenvalue", rep.has_zero_eigenvalue},
              {"rank", rep.rank_g},
              {"torsion", rep.torsion_order.get_si()},
              {"diagonalizable_part", rep.diagonalizable_part},
              {"dimension", rep.dimension},
              {"components", rep.num_components},
              {"isolated_points", std::move(isolated)},
              {"ideal", ideal_to_json(rep.ideal, order, limits)},
              {"component_ideals", std::move(components)},
              {"toric", rep.toric ? toric_to_json(*rep.toric, order, limits) : Json(nullptr)}};
}

}  // namespace zariski
