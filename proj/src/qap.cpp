#include "rltlab/qap.hpp"

#include <fstream>
#include <random>
#include <stdexcept>

namespace rltlab {

namespace {

constexpr int kMaxSize = 4;  // exact LP guard: the product block has n^4 variables

void check_size_guard(const QapInstance& inst) {
  inst.check_well_formed();
  if (inst.n > kMaxSize)
    throw std::invalid_argument("qap: instance size exceeds the exact-LP guard (n <= 4)");
}

}  // namespace

const Rational& QapInstance::cost(int i, int j, int k, int l) const {
  return q[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
}

Rational& QapInstance::cost(int i, int j, int k, int l) {
  return q[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
}

void QapInstance::check_well_formed() const {
  if (n <= 0) throw std::invalid_argument("QapInstance: n must be positive");
  const std::size_t want = static_cast<std::size_t>(n) * n * n * n;
  if (q.size() != want) throw std::invalid_argument("QapInstance: cost tensor size mismatch");
  for (const Rational& v : q)
    if (v < 0) throw std::invalid_argument("QapInstance: costs must be nonnegative");
}

QapInstance zero_instance(int n) {
  QapInstance inst;
  inst.n = n;
  inst.q.assign(static_cast<std::size_t>(n) * n * n * n, Rational(0));
  return inst;
}

QapInstance seeded_instance(int n, std::uint64_t seed) {
  QapInstance inst = zero_instance(n);
  std::mt19937_64 g(seed);
  for (Rational& v : inst.q) v = Rational(static_cast<long>(g() % 6));
  return inst;
}

QapInstance load_qap(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  int n = 0;
  if (!(in >> n) || n <= 0)
    throw std::runtime_error("instance file '" + path + "' must start with a positive size");
  QapInstance inst = zero_instance(n);
  for (Rational& v : inst.q) {
    std::string tok;
    if (!(in >> tok))
      throw std::runtime_error("instance file '" + path + "' is missing cost entries");
    const std::optional<Rational> r = parse_rational(tok);
    if (!r) throw std::runtime_error("malformed cost '" + tok + "' in '" + path + "'");
    v = *r;
  }
  inst.check_well_formed();
  return inst;
}

BoxPolytope assignment_polytope(int n) {
  if (n < 1) throw std::invalid_argument("assignment_polytope: n must be positive");
  BoxPolytope P;
  P.n = n * n;
  for (int v = 0; v < n * n; ++v) P.binary.push_back(v);
  for (int i = 0; i < n; ++i) {
    RatVector coef = zeros(n * n);
    for (int j = 0; j < n; ++j) coef[i * n + j] = 1;
    P.rows.push_back(Row{coef, Relation::Equal, Rational(1), "rowsum" + std::to_string(i + 1)});
  }
  for (int j = 0; j < n; ++j) {
    RatVector coef = zeros(n * n);
    for (int i = 0; i < n; ++i) coef[i * n + j] = 1;
    P.rows.push_back(Row{coef, Relation::Equal, Rational(1), "colsum" + std::to_string(j + 1)});
  }
  return P;
}

int QapLpModel::y_index(int i, int j, int k, int l) const {
  if (!has_y) throw std::logic_error("QapLpModel: this model has no product block");
  return n * n + (i * n + j) * n * n + (k * n + l);
}

int QapLpModel::w_index(int i, int j) const {
  return (has_y ? n * n + n * n * n * n : n * n) + i * n + j;
}

namespace {

/// Shared head: x-variables named after matrix entries plus the assignment
/// rows (box included) widened to the model's variable count.
void add_assignment_block(QapLpModel& model, int nv) {
  const int n = model.n;
  const LinearSystem base = to_system(assignment_polytope(n));
  for (const Row& row : base.rows) {
    RatVector coef(nv, Rational(0));
    for (int v = 0; v < n * n; ++v) coef[v] = row.coef[v];
    model.sys.add_row(std::move(coef), row.rel, row.rhs, row.label);
  }
}

std::string entry(int i, int j) {
  return std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

QapLpModel build_adams_johnson(const QapInstance& inst) {
  check_size_guard(inst);
  const int n = inst.n;
  QapLpModel model;
  model.n = n;
  model.has_y = true;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) model.sys.vars.push_back("x" + entry(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          model.sys.vars.push_back("y" + entry(i, j) + "_" + entry(k, l));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) model.sys.vars.push_back("w" + entry(i, j));
  const int nv = static_cast<int>(model.sys.vars.size());

  add_assignment_block(model, nv);

  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        RatVector coef(nv, Rational(0));
        for (int i = 0; i < n; ++i) coef[model.y_index(i, j, k, l)] = 1;
        coef[model.x_index(k, l)] = -1;
        model.sys.add_row(std::move(coef), Relation::Equal, Rational(0),
                          "ysum-i" + entry(j, k) + "_" + std::to_string(l + 1));
      }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        RatVector coef(nv, Rational(0));
        for (int j = 0; j < n; ++j) coef[model.y_index(i, j, k, l)] = 1;
        coef[model.x_index(k, l)] = -1;
        model.sys.add_row(std::move(coef), Relation::Equal, Rational(0),
                          "ysum-j" + entry(i, k) + "_" + std::to_string(l + 1));
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVector coef(nv, Rational(0));
      coef[model.y_index(i, j, i, j)] = 1;
      coef[model.x_index(i, j)] = -1;
      model.sys.add_row(std::move(coef), Relation::Equal, Rational(0), "ydiag" + entry(i, j));
    }
  for (int a = 0; a < n * n; ++a)
    for (int b = a + 1; b < n * n; ++b) {
      RatVector coef(nv, Rational(0));
      coef[n * n + a * n * n + b] = 1;
      coef[n * n + b * n * n + a] = -1;
      model.sys.add_row(std::move(coef), Relation::Equal, Rational(0),
                        "ysym" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
    }
  for (int a = 0; a < n * n; ++a)
    for (int b = 0; b < n * n; ++b) {
      RatVector coef(nv, Rational(0));
      coef[n * n + a * n * n + b] = 1;
      model.sys.add_row(std::move(coef), Relation::GreaterEq, Rational(0),
                        "ynn" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVector coef(nv, Rational(0));
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          coef[model.y_index(i, j, k, l)] = inst.cost(i, j, k, l);
      coef[model.w_index(i, j)] = -1;
      model.sys.add_row(std::move(coef), Relation::Equal, Rational(0), "wdef" + entry(i, j));
    }

  model.objective.assign(nv, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) model.objective[model.w_index(i, j)] = 1;
  return model;
}

namespace {

QapLpModel build_kb_common(const QapInstance& inst) {
  const int n = inst.n;
  QapLpModel model;
  model.n = n;
  model.has_y = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) model.sys.vars.push_back("x" + entry(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) model.sys.vars.push_back("w" + entry(i, j));
  const int nv = static_cast<int>(model.sys.vars.size());
  add_assignment_block(model, nv);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVector coef(nv, Rational(0));
      coef[model.w_index(i, j)] = 1;
      model.sys.add_row(std::move(coef), Relation::GreaterEq, Rational(0), "wnn" + entry(i, j));
    }
  model.objective.assign(nv, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) model.objective[model.w_index(i, j)] = 1;
  return model;
}

Rational total_cost(const QapInstance& inst, int i, int j) {
  Rational a(0);
  for (int k = 0; k < inst.n; ++k)
    for (int l = 0; l < inst.n; ++l) a += inst.cost(i, j, k, l);
  return a;
}

}  // namespace

QapLpModel build_kaufman_broeckx(const QapInstance& inst) {
  check_size_guard(inst);
  QapLpModel model = build_kb_common(inst);
  const int n = inst.n;
  const int nv = static_cast<int>(model.sys.vars.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational a = total_cost(inst, i, j);
      RatVector coef(nv, Rational(0));
      coef[model.x_index(i, j)] += a;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) coef[model.x_index(k, l)] += inst.cost(i, j, k, l);
      coef[model.w_index(i, j)] -= 1;
      model.sys.add_row(std::move(coef), Relation::LessEq, a, "couple" + entry(i, j));
    }
  return model;
}

QapLpModel build_kaufman_broeckx_column(const QapInstance& inst) {
  check_size_guard(inst);
  QapLpModel model = build_kb_common(inst);
  const int n = inst.n;
  const int nv = static_cast<int>(model.sys.vars.size());
  for (int j = 0; j < n; ++j) {
    RatVector coef(nv, Rational(0));
    Rational rhs(0);
    for (int i = 0; i < n; ++i) {
      const Rational a = total_cost(inst, i, j);
      coef[model.x_index(i, j)] += a;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) coef[model.x_index(k, l)] += inst.cost(i, j, k, l);
      coef[model.w_index(i, j)] -= 1;
      rhs += a;
    }
    model.sys.add_row(std::move(coef), Relation::LessEq, rhs,
                      "couple-col" + std::to_string(j + 1));
  }
  return model;
}

QapLpSolution lp_solve(const QapLpModel& model) {
  const LpOutcome out = solve(model.sys, model.objective, Sense::Minimize);
  if (!out.is_optimal()) throw std::logic_error("lp_solve: relaxation not solvable");
  return QapLpSolution{out.optimal->value, out.optimal->point};
}

Rational lp_bound(const QapLpModel& model) { return lp_solve(model).value; }

DecompositionWitness decompose_aj_column(const QapInstance& inst, const QapLpModel& aj,
                                         const RatVector& solution, int j) {
  check_size_guard(inst);
  const int n = inst.n;
  if (!aj.has_y || aj.n != n)
    throw std::invalid_argument("decompose_aj_column: model/instance mismatch");
  if (j < 0 || j >= n) throw std::invalid_argument("decompose_aj_column: column out of range");
  if (!satisfies(aj.sys, solution))
    throw std::invalid_argument("decompose_aj_column: solution infeasible for the model");

  DecompositionWitness wit;
  wit.j = j;
  for (int i = 0; i < n; ++i) {
    const Rational& xij = solution[aj.x_index(i, j)];
    if (xij == 0) {
      // Zero weight forces the whole product slab and its cost to zero.
      if (solution[aj.w_index(i, j)] != 0)
        throw std::logic_error("decompose_aj_column: cost without weight");
      continue;
    }
    wit.iplus.push_back(i);
    wit.weights.push_back(xij);
    RatVector xbar(n * n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        xbar[k * n + l] = Rational(solution[aj.y_index(i, j, k, l)] / xij);
    RatVector vbar = zeros(n);
    vbar[i] = Rational(solution[aj.w_index(i, j)] / xij);
    wit.xbars.push_back(std::move(xbar));
    wit.vbars.push_back(std::move(vbar));
  }

  const BoxPolytope birkhoff = assignment_polytope(n);
  Rational weight_sum(0);
  for (std::size_t t = 0; t < wit.iplus.size(); ++t) {
    const int i = wit.iplus[t];
    if (wit.weights[t] <= 0) throw std::logic_error("decompose_aj_column: nonpositive weight");
    weight_sum += wit.weights[t];
    if (!polytope_member(birkhoff, wit.xbars[t]))
      throw std::logic_error("decompose_aj_column: piece leaves the assignment polytope");
    if (wit.xbars[t][aj.x_index(i, j)] != 1)
      throw std::logic_error("decompose_aj_column: piece does not fix its own entry");
    Rational piece_cost(0);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) piece_cost += inst.cost(i, j, k, l) * wit.xbars[t][k * n + l];
    if (wit.vbars[t][i] != piece_cost)
      throw std::logic_error("decompose_aj_column: concentrated cost mismatch");
  }
  if (weight_sum != 1) throw std::logic_error("decompose_aj_column: weights do not sum to one");

  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      Rational recomb(0);
      for (std::size_t t = 0; t < wit.iplus.size(); ++t)
        recomb += wit.weights[t] * wit.xbars[t][k * n + l];
      if (recomb != solution[aj.x_index(k, l)])
        throw std::logic_error("decompose_aj_column: x recombination mismatch");
    }
  for (int i = 0; i < n; ++i) {
    Rational recomb(0);
    for (std::size_t t = 0; t < wit.iplus.size(); ++t)
      recomb += wit.weights[t] * wit.vbars[t][i];
    if (recomb != solution[aj.w_index(i, j)])
      throw std::logic_error("decompose_aj_column: w recombination mismatch");
  }
  return wit;
}

}  // namespace rltlab
