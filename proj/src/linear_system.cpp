#include "rltlab/linear_system.hpp"

#include <stdexcept>

namespace rltlab {

std::string relation_str(Relation rel) {
  switch (rel) {
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEq: return ">=";
  }
  return "?";
}

void LinearSystem::add_row(Row r) {
  if (r.coef.size() != vars.size())
    throw std::invalid_argument("add_row: width mismatch");
  rows.push_back(std::move(r));
}

void LinearSystem::add_row(RatVector coef, Relation rel, Rational rhs, std::string label) {
  add_row(Row(std::move(coef), rel, std::move(rhs), std::move(label)));
}

int LinearSystem::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

void LinearSystem::check_well_formed() const {
  for (const Row& r : rows)
    if (r.coef.size() != vars.size())
      throw std::invalid_argument("LinearSystem: row width mismatch");
  if (!lower.empty() && lower.size() != vars.size())
    throw std::invalid_argument("LinearSystem: lower bound array size mismatch");
  if (!upper.empty() && upper.size() != vars.size())
    throw std::invalid_argument("LinearSystem: upper bound array size mismatch");
}

RowEval evaluate_row(const Row& row, const RatVector& point) {
  RowEval ev;
  ev.activity = dot(row.coef, point);
  switch (row.rel) {
    case Relation::LessEq:
      ev.slack = row.rhs - ev.activity;
      ev.satisfied = ev.slack >= 0;
      break;
    case Relation::GreaterEq:
      ev.slack = ev.activity - row.rhs;
      ev.satisfied = ev.slack >= 0;
      break;
    case Relation::Equal:
      ev.slack = row.rhs - ev.activity;
      ev.satisfied = ev.slack == 0;
      break;
  }
  ev.tight = (ev.activity == row.rhs);
  return ev;
}

std::vector<RowEval> evaluate(const LinearSystem& sys, const RatVector& point) {
  if (point.size() != sys.n_vars())
    throw std::invalid_argument("evaluate: point dimension mismatch");
  std::vector<RowEval> out;
  out.reserve(sys.rows.size());
  for (const Row& r : sys.rows) out.push_back(evaluate_row(r, point));
  return out;
}

bool satisfies(const LinearSystem& sys, const RatVector& point) {
  if (point.size() != sys.n_vars())
    throw std::invalid_argument("satisfies: point dimension mismatch");
  for (const Row& r : sys.rows)
    if (!evaluate_row(r, point).satisfied) return false;
  for (std::size_t v = 0; v < sys.lower.size(); ++v)
    if (sys.lower[v] && point[v] < *sys.lower[v]) return false;
  for (std::size_t v = 0; v < sys.upper.size(); ++v)
    if (sys.upper[v] && point[v] > *sys.upper[v]) return false;
  return true;
}

LinearSystem bounds_as_rows(const LinearSystem& sys) {
  LinearSystem out;
  out.vars = sys.vars;
  out.rows = sys.rows;
  for (std::size_t v = 0; v < sys.lower.size(); ++v) {
    if (!sys.lower[v]) continue;
    RatVector c = zeros(sys.n_vars());
    c[v] = 1;
    out.add_row(std::move(c), Relation::GreaterEq, *sys.lower[v], "lb(" + sys.vars[v] + ")");
  }
  for (std::size_t v = 0; v < sys.upper.size(); ++v) {
    if (!sys.upper[v]) continue;
    RatVector c = zeros(sys.n_vars());
    c[v] = 1;
    out.add_row(std::move(c), Relation::LessEq, *sys.upper[v], "ub(" + sys.vars[v] + ")");
  }
  return out;
}

}  // namespace rltlab
