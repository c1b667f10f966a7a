#pragma once

// JSON and alist serialization.

#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "unitcodes/block.hpp"
#include "unitcodes/conv.hpp"
#include "unitcodes/grouprings.hpp"
#include "unitcodes/polymat.hpp"
#include "unitcodes/scheme.hpp"

namespace unitcodes::io {

using json = nlohmann::ordered_json;

inline json to_json(const Mat& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) data.push_back(m.row(i));
  return {{"field", m.field().literal()}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

inline Mat mat_from_json(const json& j) {
  const Field f = Field::parse(j.at("field").get<std::string>());
  const auto rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
  const auto& data = j.at("data");
  if (data.size() != rows) throw std::invalid_argument("matrix JSON: data has " + std::to_string(data.size()) + " rows, expected " + std::to_string(rows));
  std::vector<std::vector<Rep>> r;
  for (const auto& row : data) {
    if (row.size() != cols) throw std::invalid_argument("matrix JSON: ragged row");
    r.push_back(row.get<std::vector<Rep>>());
  }
  if (rows == 0) return Mat(f, 0, cols);
  return Mat::from_reps(f, r);
}

inline json to_json(const PolyMat& p) {
  json entries = json::array();
  for (std::size_t i = 0; i < p.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < p.cols(); ++j) row.push_back(p(i, j));
    entries.push_back(row);
  }
  return {{"field", p.field().literal()}, {"rows", p.rows()}, {"cols", p.cols()}, {"entries", entries}};
}

inline PolyMat polymat_from_json(const json& j) {
  const Field f = Field::parse(j.at("field").get<std::string>());
  PolyMat p(f, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& e = j.at("entries");
  if (e.size() != p.rows()) throw std::invalid_argument("PolyMat JSON: wrong row count");
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (e[i].size() != p.cols()) throw std::invalid_argument("PolyMat JSON: ragged row");
    for (std::size_t jj = 0; jj < p.cols(); ++jj) {
      Poly c = e[i][jj].get<Poly>();
      for (Rep x : c)
        if (!f.contains(x)) throw std::out_of_range("PolyMat JSON: coefficient outside field");
      poly::trim(c);
      p(i, jj) = std::move(c);
    }
  }
  return p;
}

inline json to_json(const UnitScheme& s) {
  return {{"field", s.field().literal()}, {"alpha", s.alpha()}, {"U", to_json(s.u())}, {"V", to_json(s.v())}};
}

/// {"U": matrix} (V computed) or {"U": ..., "V": ...}.
inline UnitScheme scheme_from_json(const json& j) {
  Mat u = mat_from_json(j.at("U"));
  if (j.contains("V")) return make_scaled(u, mat_from_json(j.at("V")));
  return make_scheme(u);
}

inline json to_json(const BlockCode& c) {
  return {{"field", c.field().literal()}, {"n", c.n()}, {"k", c.r()}, {"generator", to_json(c.generator())}, {"control", to_json(c.control())}};
}

inline BlockCode block_code_from_json(const json& j) {
  Mat g = mat_from_json(j.at("generator"));
  if (j.contains("control")) return BlockCode(g, mat_from_json(j.at("control")));
  return BlockCode::from_generator(g);
}

inline json to_json(const CodeReport& r) {
  json flags = {{"lcd", r.lcd}, {"dc", r.dc}, {"self_dual", r.self_dual}};
  flags["mds"] = r.mds ? json(*r.mds) : json(nullptr);
  json out = {{"n", r.n}, {"k", r.k}, {"d", r.d ? json(*r.d) : json(nullptr)}, {"flags", flags}, {"intersection_dim", r.intersection_dim}};
  out["css"] = r.css ? json::array({r.css->n, r.css->k, r.css->d}) : json(nullptr);
  if (r.distance_note) out["distance_note"] = *r.distance_note;
  return out;
}

inline json to_json(const ConvCode& c) {
  json out = {{"field", c.field().literal()}, {"n", c.n()}, {"k", c.k()}, {"delta", c.delta()}, {"memory", c.memory()},
              {"generator", to_json(c.generator())}};
  out["control"] = c.control() ? to_json(*c.control()) : json(nullptr);
  out["right_inverse"] = c.stored_right_inverse() ? to_json(*c.stored_right_inverse()) : json(nullptr);
  return out;
}

inline ConvCode conv_code_from_json(const json& j) {
  PolyMat g = polymat_from_json(j.at("generator"));
  std::optional<PolyMat> h, r;
  if (j.contains("control") && !j["control"].is_null()) h = polymat_from_json(j["control"]);
  if (j.contains("right_inverse") && !j["right_inverse"].is_null()) r = polymat_from_json(j["right_inverse"]);
  return ConvCode(std::move(g), std::move(h), std::move(r));
}

/// alist: "N M", max column and row degrees, per-column degrees, per-row
/// degrees, then 1-based neighbour lists padded with 0 to the max degree.
/// Columns of `h` are variable nodes, rows are check nodes.
inline std::string to_alist(const Mat& h) {
  const std::size_t m = h.rows(), n = h.cols();
  std::vector<std::vector<std::size_t>> col_nb(n), row_nb(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h(i, j)) {
        col_nb[j].push_back(i + 1);
        row_nb[i].push_back(j + 1);
      }
  std::size_t max_col = 0, max_row = 0;
  for (const auto& c : col_nb) max_col = std::max(max_col, c.size());
  for (const auto& r : row_nb) max_row = std::max(max_row, r.size());
  std::ostringstream out;
  out << n << ' ' << m << '\n' << max_col << ' ' << max_row << '\n';
  auto degrees = [&](const std::vector<std::vector<std::size_t>>& nb) {
    for (std::size_t i = 0; i < nb.size(); ++i) out << (i ? " " : "") << nb[i].size();
    out << '\n';
  };
  degrees(col_nb);
  degrees(row_nb);
  auto lists = [&](const std::vector<std::vector<std::size_t>>& nb, std::size_t width) {
    for (const auto& l : nb) {
      for (std::size_t k = 0; k < width; ++k) out << (k ? " " : "") << (k < l.size() ? l[k] : 0);
      out << '\n';
    }
  };
  lists(col_nb, max_col);
  lists(row_nb, max_row);
  return out.str();
}

inline Mat from_alist(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0, m = 0, max_col = 0, max_row = 0;
  if (!(in >> n >> m >> max_col >> max_row)) throw std::invalid_argument("alist: bad header");
  std::vector<std::size_t> col_deg(n), row_deg(m);
  for (auto& d : col_deg) in >> d;
  for (auto& d : row_deg) in >> d;
  Mat h(Field::gf(2), m, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < max_col; ++k) {
      std::size_t r = 0;
      if (!(in >> r)) throw std::invalid_argument("alist: truncated column lists");
      if (r > m) throw std::out_of_range("alist: row index out of range");
      if (r) h(r - 1, j) = 1;
    }
  return h;
}

}  // namespace unitcodes::io
