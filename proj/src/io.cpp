#include "rltlab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rltlab {

namespace {

Rational require_rational(const std::string& text) {
  const std::optional<Rational> r = parse_rational(text);
  if (!r) throw std::runtime_error("malformed rational '" + text + "'");
  return *r;
}

}  // namespace

std::string relation_text(Relation rel) {
  switch (rel) {
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEq: return ">=";
  }
  throw std::logic_error("relation_text: bad enum value");
}

Relation relation_from_text(const std::string& s) {
  if (s == "<=") return Relation::LessEq;
  if (s == "=" || s == "==") return Relation::Equal;
  if (s == ">=") return Relation::GreaterEq;
  throw std::runtime_error("unknown relation '" + s + "'");
}

nlohmann::ordered_json vec_to_json(const RatVector& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Rational& r : v) arr.push_back(rat_str(r));
  return arr;
}

RatVector vec_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::runtime_error("expected an array of rationals");
  RatVector v;
  for (const auto& entry : j) v.push_back(require_rational(entry.get<std::string>()));
  return v;
}

nlohmann::ordered_json row_to_json(const Row& row) {
  nlohmann::ordered_json j;
  j["coef"] = vec_to_json(row.coef);
  j["rel"] = relation_text(row.rel);
  j["rhs"] = rat_str(row.rhs);
  if (!row.label.empty()) j["label"] = row.label;
  return j;
}

BoxPolytope polytope_from_json(const nlohmann::json& j) {
  BoxPolytope P;
  if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
    throw std::runtime_error("polytope document must be an object with 'n' and 'rows'");
  P.n = j.at("n").get<int>();
  if (j.contains("binary"))
    for (const auto& b : j.at("binary")) P.binary.push_back(b.get<int>() - 1);
  if (j.contains("description")) P.description = j.at("description").get<std::string>();
  for (const auto& rj : j.at("rows")) {
    Row row;
    row.coef = vec_from_json(rj.at("coef"));
    row.rel = relation_from_text(rj.at("rel").get<std::string>());
    row.rhs = require_rational(rj.at("rhs").get<std::string>());
    if (rj.contains("label")) row.label = rj.at("label").get<std::string>();
    P.rows.push_back(std::move(row));
  }
  P.check_well_formed();
  return P;
}

nlohmann::ordered_json polytope_to_json(const BoxPolytope& P) {
  nlohmann::ordered_json j;
  j["n"] = P.n;
  nlohmann::ordered_json bin = nlohmann::ordered_json::array();
  for (int b : P.binary) bin.push_back(b + 1);
  j["binary"] = bin;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Row& row : P.rows) rows.push_back(row_to_json(row));
  j["rows"] = rows;
  if (!P.description.empty()) j["description"] = P.description;
  return j;
}

BoxPolytope load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polytope file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
    return polytope_from_json(j);
  } catch (const std::exception& e) {
    throw std::runtime_error("while reading '" + path + "': " + e.what());
  }
}

RatVector parse_point(const std::string& text) {
  RatVector v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // Trim surrounding spaces so "1/2, 0" parses.
    const auto first = tok.find_first_not_of(" \t");
    const auto last = tok.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::runtime_error("empty coordinate in point");
    v.push_back(require_rational(tok.substr(first, last - first + 1)));
  }
  if (v.empty()) throw std::runtime_error("empty point");
  return v;
}

std::string point_text(const RatVector& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += rat_str(x[i]);
  }
  return s;
}

}  // namespace rltlab
