#pragma once

// JSON readers/writers for the on-disk formats:
//   abelian group   {"orders":[n1,...,nk]}
//   group table     {"size":n,"table":[...],"labels":[...]}
//   bilinear form   {"gamma":{...},"g":{...},"torus":{...},"values":[[[...]]]}
//   alternating     {"p":{...},"torus":{...},"table":[[...],...]}
//   cocycle         {"p":{...},"torus":{...},"table":[[...],...]}

#include <fstream>
#include <sstream>

#include "hforge/cohom.hpp"
#include "json.hpp"

namespace hforge {

using json = nlohmann::json;

inline json to_json(const FinAbGroup& g) { return json{{"orders", g.orders}}; }

inline FinAbGroup finab_from_json(const json& j) {
  if (!j.contains("orders")) throw std::invalid_argument("missing \"orders\"");
  return FinAbGroup(j.at("orders").get<std::vector<Coord>>());
}

inline json to_json(const FiniteGroup& g) {
  return json{{"size", g.n}, {"table", g.table}, {"labels", g.labels}};
}

inline FiniteGroup group_from_json(const json& j) {
  int n = j.at("size").get<int>();
  auto table = j.at("table").get<std::vector<int>>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FiniteGroup(n, std::move(table), std::move(labels));
}

inline json to_json(const BilinearForm& b) {
  json vals = json::array();
  for (const auto& row : b.values) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v);
    vals.push_back(r);
  }
  return json{{"gamma", to_json(b.gamma)},
              {"g", to_json(b.g)},
              {"torus", to_json(b.torus)},
              {"values", vals}};
}

inline BilinearForm form_from_json(const json& j) {
  FinAbGroup gamma = finab_from_json(j.at("gamma"));
  FinAbGroup g = finab_from_json(j.at("g"));
  FinAbGroup t = finab_from_json(j.at("torus"));
  auto vals = j.at("values").get<std::vector<std::vector<AbElement>>>();
  return BilinearForm(gamma, g, t, vals);
}

inline json to_json(const AlternatingForm& w) {
  Coord n = w.p.size();
  json tbl = json::array();
  for (Coord z = 0; z < n; ++z) {
    json row = json::array();
    for (Coord v = 0; v < n; ++v) row.push_back(w.at(z, v));
    tbl.push_back(row);
  }
  return json{{"p", to_json(w.p)}, {"torus", to_json(w.torus)}, {"table", tbl}};
}

inline AlternatingForm alternating_from_json(const json& j) {
  FinAbGroup p = finab_from_json(j.at("p"));
  FinAbGroup t = finab_from_json(j.at("torus"));
  auto rows = j.at("table").get<std::vector<std::vector<AbElement>>>();
  Coord n = p.size();
  if (static_cast<Coord>(rows.size()) != n)
    throw std::invalid_argument("alternating table has wrong row count");
  std::vector<AbElement> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (static_cast<Coord>(row.size()) != n)
      throw std::invalid_argument("alternating table has a ragged row");
    for (const auto& v : row) flat.push_back(v);
  }
  return AlternatingForm(p, t, std::move(flat));
}

inline json to_json(const Cochain& c) {
  json tbl = json::array();
  for (const auto& v : c.table) tbl.push_back(v);
  return json{{"degree", c.degree},
              {"p", to_json(c.p)},
              {"torus", to_json(c.torus)},
              {"table", tbl}};
}

inline Cochain cochain_from_json(const json& j) {
  FinAbGroup p = finab_from_json(j.at("p"));
  FinAbGroup t = finab_from_json(j.at("torus"));
  int degree = j.contains("degree") ? j.at("degree").get<int>() : 2;
  auto tbl = j.at("table").get<std::vector<AbElement>>();
  return Cochain(degree, p, t, std::move(tbl));
}

inline Cocycle cocycle_from_json(const json& j) {
  return Cocycle(cochain_from_json(j));
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace hforge
