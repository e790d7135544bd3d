#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gcryst/grid.hpp"
#include "gcryst/gt_pattern.hpp"
#include "gcryst/grsk.hpp"
#include "gcryst/loop_poly.hpp"
#include "gcryst/loopsym.hpp"
#include "gcryst/tableau.hpp"
#include "gcryst/trop_comb.hpp"

namespace gcryst {

// Insertion-ordered JSON keeps output byte-stable for fixed inputs.
using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& r) { return r.to_string(); }

inline Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  return Rat::from_string(j.get<std::string>());
}

// Rational matrices: {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}.
inline Json to_json(const Grid<Rat>& g) {
  Json entries = Json::array();
  for (int i = 1; i <= g.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= g.cols(); ++j) row.push_back(g.at(i, j).to_string());
    entries.push_back(row);
  }
  return Json{{"rows", g.rows()}, {"cols", g.cols()}, {"entries", entries}};
}

inline Grid<Rat> grid_from_json(const Json& j) {
  int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  Grid<Rat> g(rows, cols);
  const Json& entries = j.at("entries");
  for (int i = 1; i <= rows; ++i)
    for (int c = 1; c <= cols; ++c) g.at(i, c) = rat_from_json(entries.at(i - 1).at(c - 1));
  return g;
}

// Integer matrices serialize as plain arrays.
inline Json to_json(const IntMatrix& a) {
  Json out = Json::array();
  for (int i = 1; i <= a.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= a.cols(); ++j) row.push_back(a.at(i, j));
    out.push_back(row);
  }
  return out;
}

inline IntMatrix int_matrix_from_json(const Json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  IntMatrix a(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int c = 1; c <= cols; ++c) a.at(i, c) = j.at(i - 1).at(c - 1).get<long long>();
  return a;
}

// Patterns: {"m": width, "n": height, "entries": {"i,j": value}}.
inline std::string ij_key(int i, int j) {
  return std::to_string(i) + "," + std::to_string(j);
}

inline Json to_json(const Pattern<Rat>& z) {
  Json entries = Json::object();
  z.for_each([&](int i, int j, const Rat& v) { entries[ij_key(i, j)] = v.to_string(); });
  return Json{{"m", z.width()}, {"n", z.height()}, {"entries", entries}};
}

inline Json to_json(const IntPattern& z) {
  Json entries = Json::object();
  z.for_each([&](int i, int j, long long v) { entries[ij_key(i, j)] = v; });
  return Json{{"m", z.width()}, {"n", z.height()}, {"entries", entries}};
}

inline Pattern<Rat> pattern_from_json(const Json& j) {
  Pattern<Rat> z(j.at("m").get<int>(), j.at("n").get<int>());
  for (int i = 1; i <= z.p(); ++i)
    for (int col = i; col <= z.height(); ++col)
      z.at(i, col) = rat_from_json(j.at("entries").at(ij_key(i, col)));
  return z;
}

// Tableaux serialize as arrays of rows.
inline Json to_json(const Tableau& t) {
  Json out = Json::array();
  for (const auto& row : t.rows()) out.push_back(row);
  return out;
}

// Polynomials: [{"coeff": "p/q", "exps": {"i,j": e}}, ...], leading term first.
inline Json to_json(const LoopPoly& p) {
  Json out = Json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    Json exps = Json::object();
    for (const auto& [var, e] : mono.terms())
      exps[ij_key(var_row(var), var_col(var))] = e;
    out.push_back(Json{{"coeff", coeff.to_string()}, {"exps", exps}});
  }
  return out;
}

inline LoopPoly poly_from_json(const Json& j) {
  LoopPoly p;
  for (const Json& term : j) {
    Mono mono;
    for (auto it = term.at("exps").begin(); it != term.at("exps").end(); ++it) {
      auto comma = it.key().find(',');
      int a = std::stoi(it.key().substr(0, comma));
      int b = std::stoi(it.key().substr(comma + 1));
      mono = mono * Mono::var(a, b, it.value().get<std::uint32_t>());
    }
    p.add_term(mono, rat_from_json(term.at("coeff")));
  }
  return p;
}

inline Json to_json(const PQPair<Rat>& pq) {
  Json shape = Json::array();
  for (const Rat& s : pq.P.shape()) shape.push_back(s.to_string());
  return Json{{"P", to_json(pq.P)},
              {"Q", to_json(pq.Q)},
              {"glued", to_json(glue(pq))},
              {"shape", shape}};
}

inline Json to_json(const PQPair<long long>& pq) {
  return Json{{"P", to_json(pq.P)},
              {"Q", to_json(pq.Q)},
              {"glued", to_json(glue(pq))},
              {"shape", pq.P.shape()}};
}

inline Json to_json(const std::vector<QAnalogueRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json coeffs = Json::object();
    for (const auto& [charge, count] : row.coeffs)
      coeffs[std::to_string(charge)] = count;
    out.push_back(Json{{"shape", row.shape}, {"coeffs", coeffs}});
  }
  return out;
}

}  // namespace gcryst
