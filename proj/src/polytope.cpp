#include "rltlab/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "rltlab/linalg.hpp"

namespace rltlab {

bool BoxPolytope::is_binary(int v) const {
  return std::binary_search(binary.begin(), binary.end(), v);
}

void BoxPolytope::check_well_formed() const {
  if (n <= 0) throw std::invalid_argument("BoxPolytope: n must be positive");
  int prev = -1;
  for (int b : binary) {
    if (b < 0 || b >= n) throw std::invalid_argument("BoxPolytope: binary index out of range");
    if (b <= prev) throw std::invalid_argument("BoxPolytope: binary indices must strictly increase");
    prev = b;
  }
  for (const Row& row : rows)
    if (static_cast<int>(row.coef.size()) != n)
      throw std::invalid_argument("BoxPolytope: row width mismatch");
}

std::vector<std::string> coordinate_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

LinearSystem to_system(const BoxPolytope& P) {
  P.check_well_formed();
  LinearSystem sys;
  sys.vars = coordinate_names(P.n);
  for (const Row& row : P.rows) sys.rows.push_back(row);
  for (int i = 0; i < P.n; ++i) {
    RatVector unit = zeros(P.n);
    unit[i] = 1;
    sys.rows.push_back(Row{unit, Relation::GreaterEq, Rational(0), "x" + std::to_string(i + 1) + ">=0"});
    sys.rows.push_back(Row{unit, Relation::LessEq, Rational(1), "x" + std::to_string(i + 1) + "<=1"});
  }
  return sys;
}

bool box_member(const RatVector& x) {
  for (const Rational& v : x)
    if (v < 0 || v > 1) return false;
  return true;
}

bool polytope_member(const BoxPolytope& P, const RatVector& x) {
  if (static_cast<int>(x.size()) != P.n)
    throw std::invalid_argument("polytope_member: dimension mismatch");
  return satisfies(to_system(P), x);
}

BoxPolytope complement(const BoxPolytope& P, int k) {
  P.check_well_formed();
  if (k < 0 || k >= P.n) throw std::invalid_argument("complement: index out of range");
  BoxPolytope Q = P;
  Q.description.clear();
  // Substituting x_k <- 1 - x_k negates the k-th coefficient and shifts the
  // right-hand side by it; the box rows are symmetric under the flip.
  for (Row& row : Q.rows) {
    row.rhs -= row.coef[k];
    row.coef[k] = Rational(-row.coef[k]);
  }
  return Q;
}

BoxPolytope face(const BoxPolytope& P, const RatVector& a, const Rational& beta) {
  P.check_well_formed();
  if (static_cast<int>(a.size()) != P.n) throw std::invalid_argument("face: width mismatch");
  const Row candidate{a, Relation::LessEq, beta, "face"};
  const RedundancyCertificate cert = is_redundant(to_system(P), candidate);
  if (!cert.redundant)
    throw std::invalid_argument("face: the inequality is not valid for the polytope");
  BoxPolytope Q = P;
  Q.description.clear();
  Q.rows.push_back(Row{a, Relation::Equal, beta, "face"});
  return Q;
}

namespace {

/// Calls fn(idx) for every size-k subset of {0..m-1}, in lexicographic order.
template <typename Fn>
void for_each_subset(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

unsigned long long subset_count(int m, int k) {
  if (k < 0 || k > m) return 0;
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned long long>(m - k + i) / static_cast<unsigned long long>(i);
    if (c > 10'000'000ULL) return 10'000'001ULL;
  }
  return c;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

}  // namespace

std::vector<RatVector> vertices(const BoxPolytope& P, int max_dim) {
  P.check_well_formed();
  if (P.n > max_dim)
    throw std::invalid_argument("vertices: dimension exceeds the enumeration guard");
  const LinearSystem sys = to_system(P);
  std::vector<RatVector> eq_coefs;
  RatVector eq_rhs;
  std::vector<int> ineq_idx;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    if (sys.rows[r].rel == Relation::Equal) {
      eq_coefs.push_back(sys.rows[r].coef);
      eq_rhs.push_back(sys.rows[r].rhs);
    } else {
      ineq_idx.push_back(static_cast<int>(r));
    }
  }
  const int eq_rank = static_cast<int>(rank(eq_coefs));
  const int need = P.n - eq_rank;
  if (need < 0) return {};
  const int m = static_cast<int>(ineq_idx.size());
  if (subset_count(m, need) > 5'000'000ULL)
    throw std::invalid_argument("vertices: too many tight-row subsets to enumerate");

  std::vector<RatVector> found;
  for_each_subset(m, need, [&](const std::vector<int>& pick) {
    std::vector<RatVector> A = eq_coefs;
    RatVector b = eq_rhs;
    for (int j : pick) {
      A.push_back(sys.rows[ineq_idx[j]].coef);
      b.push_back(sys.rows[ineq_idx[j]].rhs);
    }
    const std::optional<RatVector> x = solve_unique(std::move(A), std::move(b));
    if (x && satisfies(sys, *x)) found.push_back(*x);
  });
  std::sort(found.begin(), found.end(), lex_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

BoxPolytope hull_from_vertices(const std::vector<RatVector>& V, int max_dim) {
  if (V.empty()) throw std::invalid_argument("hull_from_vertices: empty point set");
  const int n = static_cast<int>(V[0].size());
  if (n == 0 || n > max_dim)
    throw std::invalid_argument("hull_from_vertices: dimension outside the supported range");
  for (const RatVector& v : V)
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("hull_from_vertices: ragged point set");

  const RatVector& v0 = V[0];
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < V.size(); ++i) {
    RatVector d(n);
    for (int c = 0; c < n; ++c) d[c] = Rational(V[i][c] - v0[c]);
    diffs.push_back(std::move(d));
  }

  // Basis of the direction space in reduced echelon form; its pivot columns
  // give exact affine coordinates u(v)_k = (v - v0)[p_k].
  std::vector<RatVector> basis = diffs;
  const std::vector<int> pivots = rref(basis);
  const int d = static_cast<int>(pivots.size());
  basis.resize(d);

  BoxPolytope H;
  H.n = n;

  std::vector<RatVector> eq_normals =
      d == 0 ? [&] {
        std::vector<RatVector> full;
        for (int c = 0; c < n; ++c) {
          RatVector e = zeros(n);
          e[c] = 1;
          full.push_back(std::move(e));
        }
        return full;
      }()
             : nullspace(basis);
  int eq_no = 0;
  for (RatVector& a : eq_normals) {
    ++eq_no;
    H.rows.push_back(Row{a, Relation::Equal, dot(a, v0), "hull-eq" + std::to_string(eq_no)});
  }

  if (d > 0) {
    std::vector<RatVector> pts;
    for (const RatVector& v : V) {
      RatVector u(d);
      for (int k = 0; k < d; ++k) u[k] = Rational(v[pivots[k]] - v0[pivots[k]]);
      pts.push_back(std::move(u));
    }
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int np = static_cast<int>(pts.size());
    if (subset_count(np, d) > 2'000'000ULL)
      throw std::invalid_argument("hull_from_vertices: too many facet candidates");

    std::set<std::pair<RatVector, Rational>> facets;
    for_each_subset(np, d, [&](const std::vector<int>& pick) {
      RatVector g;
      if (d == 1) {
        g = RatVector{Rational(1)};
      } else {
        std::vector<RatVector> M;
        for (int j = 1; j < d; ++j) {
          RatVector diff(d);
          for (int c = 0; c < d; ++c)
            diff[c] = Rational(pts[pick[j]][c] - pts[pick[0]][c]);
          M.push_back(std::move(diff));
        }
        std::vector<RatVector> ns = nullspace(std::move(M));
        if (ns.size() != 1) return;  // affinely dependent pick
        g = std::move(ns[0]);
      }
      Rational gamma = dot(g, pts[pick[0]]);
      bool any_below = false, any_above = false;
      for (const RatVector& u : pts) {
        const Rational val = dot(g, u);
        if (val < gamma) any_below = true;
        if (val > gamma) any_above = true;
      }
      if (any_below && any_above) return;  // not a supporting hyperplane
      if (any_above) {
        for (Rational& c : g) c = Rational(-c);
        gamma = Rational(-gamma);
      }
      Rational lead(0);
      for (const Rational& c : g)
        if (c != 0) {
          lead = abs(c);
          break;
        }
      for (Rational& c : g) c /= lead;
      gamma /= lead;
      facets.emplace(std::move(g), std::move(gamma));
    });

    std::vector<Row> facet_rows;
    for (const auto& [g, gamma] : facets) {
      RatVector a = zeros(n);
      Rational beta = gamma;
      for (int k = 0; k < d; ++k) {
        a[pivots[k]] = g[k];
        beta += g[k] * v0[pivots[k]];
      }
      facet_rows.push_back(Row{std::move(a), Relation::LessEq, Rational(beta), ""});
    }
    std::sort(facet_rows.begin(), facet_rows.end(), [](const Row& r1, const Row& r2) {
      if (lex_less(r1.coef, r2.coef)) return true;
      if (lex_less(r2.coef, r1.coef)) return false;
      return r1.rhs < r2.rhs;
    });
    for (std::size_t i = 0; i < facet_rows.size(); ++i) {
      facet_rows[i].label = "hull-ineq" + std::to_string(i + 1);
      H.rows.push_back(std::move(facet_rows[i]));
    }
  }

  for (const RatVector& v : V)
    for (const Row& row : H.rows)
      if (!evaluate_row(row, v).satisfied)
        throw std::logic_error("hull_from_vertices: input point violates the computed hull");
  return H;
}

ConvMembership conv_member(const std::vector<RatVector>& V, const RatVector& p) {
  if (V.empty()) throw std::invalid_argument("conv_member: empty point set");
  const int n = static_cast<int>(p.size());
  for (const RatVector& v : V)
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("conv_member: dimension mismatch");
  const int k = static_cast<int>(V.size());

  LinearSystem sys;
  for (int i = 0; i < k; ++i) sys.vars.push_back("lam" + std::to_string(i + 1));
  sys.lower.assign(k, Rational(0));
  for (int c = 0; c < n; ++c) {
    RatVector coef(k);
    for (int i = 0; i < k; ++i) coef[i] = V[i][c];
    sys.add_row(std::move(coef), Relation::Equal, p[c], "coord" + std::to_string(c + 1));
  }
  sys.add_row(RatVector(k, Rational(1)), Relation::Equal, Rational(1), "convex");

  const LpOutcome out = solve(sys, zeros(k), Sense::Minimize);
  ConvMembership result;
  if (out.is_optimal()) {
    result.member = true;
    result.multipliers = out.optimal->point;
    return result;
  }
  if (!out.is_infeasible()) throw std::logic_error("conv_member: unexpected LP outcome");

  // Farkas aggregate: for every column i, sum_c m_c V[i][c] + m_s = mu_i >= 0
  // while sum_c m_c p[c] + m_s < 0, so a = -m, beta = m_s separates.
  const FarkasCertificate& cert = *out.infeasible;
  RatVector a(n);
  for (int c = 0; c < n; ++c) a[c] = Rational(-cert.row_mults[c]);
  const Rational beta = cert.row_mults[n];
  result.member = false;
  result.separator = Row{a, Relation::LessEq, beta, "separator"};
  for (const RatVector& v : V)
    if (!evaluate_row(result.separator, v).satisfied)
      throw std::logic_error("conv_member: separator not valid on the point set");
  if (evaluate_row(result.separator, p).satisfied)
    throw std::logic_error("conv_member: separator fails to cut the query point");
  return result;
}

}  // namespace rltlab
