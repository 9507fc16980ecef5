#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rltlab/rational.hpp"

namespace rltlab {

enum class Relation { LessEq, Equal, GreaterEq };

std::string relation_str(Relation rel);

/// One linear constraint: coef · x  (<= | = | >=)  rhs.
struct Row {
  RatVector coef;
  Relation rel = Relation::LessEq;
  Rational rhs = 0;
  std::string label;  // optional, for human-readable certificates

  Row() = default;
  Row(RatVector c, Relation r, Rational b, std::string lbl = "")
      : coef(std::move(c)), rel(r), rhs(std::move(b)), label(std::move(lbl)) {}
};

/// A system of linear constraints over named variables, with optional
/// per-variable bounds. Relations are explicit; nothing is implied.
struct LinearSystem {
  std::vector<std::string> vars;
  std::vector<Row> rows;
  std::vector<std::optional<Rational>> lower;  // empty or per-variable
  std::vector<std::optional<Rational>> upper;

  std::size_t n_vars() const { return vars.size(); }
  std::size_t n_rows() const { return rows.size(); }

  void add_row(Row r);
  void add_row(RatVector coef, Relation rel, Rational rhs, std::string label = "");
  int var_index(const std::string& name) const;  // -1 when absent
  /// Throws std::invalid_argument when any row width or bound array
  /// disagrees with the variable list.
  void check_well_formed() const;
};

/// Exact per-row evaluation at a point.
struct RowEval {
  Rational activity;  // coef · point
  Rational slack;     // rhs - activity for <=, activity - rhs for >=, rhs - activity for =
  bool satisfied = false;
  bool tight = false;
};

std::vector<RowEval> evaluate(const LinearSystem& sys, const RatVector& point);
RowEval evaluate_row(const Row& row, const RatVector& point);

/// True iff every row and every bound holds at the point.
bool satisfies(const LinearSystem& sys, const RatVector& point);

/// Returns an equivalent system with every bound materialized as a row
/// (labels "lb(var)" / "ub(var)"), in variable order after the original rows.
LinearSystem bounds_as_rows(const LinearSystem& sys);

}  // namespace rltlab
