#include "rltlab/lp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rltlab {

namespace {

[[noreturn]] void certificate_error(const std::string& what) {
  throw std::logic_error("certificate verification failed: " + what);
}

int sense_sign(Sense sense) { return sense == Sense::Maximize ? 1 : -1; }

// ---------------------------------------------------------------------------
// Core simplex. Operates on a system whose only bounds are lower bounds;
// upper bounds are materialized as rows by the public solve() wrapper.
// ---------------------------------------------------------------------------

struct ColInfo {
  enum Kind { Plus, Minus, Slack, Art } kind;
  int var = -1;  // for Plus/Minus
  int row = -1;  // for Slack/Art
};

class CoreSimplex {
 public:
  CoreSimplex(const LinearSystem& sys, const RatVector& objective, Sense sense)
      : sys_(sys), c_(objective), sense_(sense) {}

  LpOutcome run() {
    build();
    if (need_phase1_ && !phase1()) return extract_infeasible();
    drive_out_artificials();
    install_phase2_costs();
    int unbounded_col = phase2();
    if (unbounded_col >= 0) return extract_unbounded(unbounded_col);
    return extract_optimal();
  }

 private:
  const LinearSystem& sys_;
  const RatVector& c_;
  Sense sense_;

  std::size_t m_ = 0;  // rows
  std::vector<ColInfo> cols_;
  std::vector<RatVector> tab_;        // m x ncols
  RatVector rhs_;                     // m, kept >= 0
  std::vector<int> basis_;            // m, column index
  std::vector<int> sigma_;            // m, +1/-1 normalization
  std::vector<Relation> eff_rel_;     // post-normalization relation
  std::vector<int> identity_col_;     // per row
  std::vector<bool> deleted_;         // dependent rows dropped after phase 1
  RatVector shift_;                   // per variable (lower bound or 0)
  std::vector<bool> shifted_;         // per variable
  RatVector obj_;                     // current reduced-cost row
  Rational obj_val_ = 0;              // current phase objective value
  bool need_phase1_ = false;
  bool in_phase1_ = false;

  void build() {
    const std::size_t n = sys_.n_vars();
    m_ = sys_.n_rows();
    shift_.assign(n, Rational(0));
    shifted_.assign(n, false);
    for (std::size_t v = 0; v < sys_.lower.size(); ++v) {
      if (sys_.lower[v]) {
        shift_[v] = *sys_.lower[v];
        shifted_[v] = true;
      }
    }
    // Structural columns.
    std::vector<int> plus_col(n, -1), minus_col(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
      plus_col[v] = static_cast<int>(cols_.size());
      cols_.push_back({ColInfo::Plus, static_cast<int>(v), -1});
      if (!shifted_[v]) {
        minus_col[v] = static_cast<int>(cols_.size());
        cols_.push_back({ColInfo::Minus, static_cast<int>(v), -1});
      }
    }
    // Row normalization: shifted rhs, then sign flip to keep rhs >= 0.
    rhs_.assign(m_, Rational(0));
    sigma_.assign(m_, 1);
    eff_rel_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const Row& row = sys_.rows[r];
      Rational b = row.rhs;
      for (std::size_t v = 0; v < n; ++v)
        if (shifted_[v] && row.coef[v] != 0) b -= row.coef[v] * shift_[v];
      Relation rel = row.rel;
      if (b < 0) {
        sigma_[r] = -1;
        b = -b;
        if (rel == Relation::LessEq) rel = Relation::GreaterEq;
        else if (rel == Relation::GreaterEq) rel = Relation::LessEq;
      }
      rhs_[r] = b;
      eff_rel_[r] = rel;
    }
    // Slack / surplus columns, then artificials.
    std::vector<int> slack_col(m_, -1), art_col(m_, -1);
    for (std::size_t r = 0; r < m_; ++r) {
      if (eff_rel_[r] != Relation::Equal) {
        slack_col[r] = static_cast<int>(cols_.size());
        cols_.push_back({ColInfo::Slack, -1, static_cast<int>(r)});
      }
    }
    for (std::size_t r = 0; r < m_; ++r) {
      if (eff_rel_[r] != Relation::LessEq) {
        art_col[r] = static_cast<int>(cols_.size());
        cols_.push_back({ColInfo::Art, -1, static_cast<int>(r)});
        need_phase1_ = true;
      }
    }
    // Tableau.
    const std::size_t ncols = cols_.size();
    tab_.assign(m_, RatVector(ncols, Rational(0)));
    for (std::size_t r = 0; r < m_; ++r) {
      const Row& row = sys_.rows[r];
      for (std::size_t v = 0; v < n; ++v) {
        if (row.coef[v] == 0) continue;
        Rational a = Rational(sigma_[r]) * row.coef[v];
        tab_[r][plus_col[v]] = a;
        if (minus_col[v] >= 0) tab_[r][minus_col[v]] = -a;
      }
      if (slack_col[r] >= 0)
        tab_[r][slack_col[r]] = eff_rel_[r] == Relation::LessEq ? 1 : -1;
      if (art_col[r] >= 0) tab_[r][art_col[r]] = 1;
    }
    basis_.assign(m_, -1);
    identity_col_.assign(m_, -1);
    deleted_.assign(m_, false);
    for (std::size_t r = 0; r < m_; ++r) {
      basis_[r] = eff_rel_[r] == Relation::LessEq ? slack_col[r] : art_col[r];
      identity_col_[r] = basis_[r];
    }
    // Phase-1 reduced costs: cost 1 on artificials minus rows with
    // artificial basis.
    obj_.assign(ncols, Rational(0));
    obj_val_ = 0;
    if (need_phase1_) {
      in_phase1_ = true;
      for (const ColInfo& ci : cols_)
        if (ci.kind == ColInfo::Art) obj_[art_col[ci.row]] = 1;
      for (std::size_t r = 0; r < m_; ++r) {
        if (cols_[basis_[r]].kind != ColInfo::Art) continue;
        for (std::size_t j = 0; j < ncols; ++j)
          if (tab_[r][j] != 0) obj_[j] -= tab_[r][j];
        obj_val_ += rhs_[r];
      }
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    Rational p = tab_[r][j];
    if (p != 1) {
      Rational inv = 1 / p;
      for (Rational& t : tab_[r])
        if (t != 0) t *= inv;
      rhs_[r] *= inv;
      tab_[r][j] = 1;  // guard against drift (exact anyway)
    }
    const std::size_t ncols = cols_.size();
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || deleted_[i]) continue;
      Rational f = tab_[i][j];
      if (f == 0) continue;
      for (std::size_t k = 0; k < ncols; ++k)
        if (tab_[r][k] != 0) tab_[i][k] -= f * tab_[r][k];
      tab_[i][j] = 0;
      if (rhs_[r] != 0) rhs_[i] -= f * rhs_[r];
    }
    Rational f = obj_[j];
    if (f != 0) {
      obj_val_ += f * rhs_[r];
      for (std::size_t k = 0; k < ncols; ++k)
        if (tab_[r][k] != 0) obj_[k] -= f * tab_[r][k];
      obj_[j] = 0;
    }
    basis_[r] = static_cast<int>(j);
  }

  /// Simplex iteration on the current objective row. Entering column by the
  /// most negative reduced cost; after a long streak of degenerate pivots the
  /// selection switches to Bland's rule (smallest index), which cannot cycle,
  /// until a pivot makes strict progress again. Returns -1 on optimality,
  /// otherwise the entering column of an unbounded direction.
  int iterate() {
    const std::size_t ncols = cols_.size();
    int degenerate_streak = 0;
    bool bland = false;
    while (true) {
      int enter = -1;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (cols_[j].kind == ColInfo::Art) continue;  // artificials never re-enter
        if (obj_[j] >= 0) continue;
        if (bland) {
          enter = static_cast<int>(j);
          break;
        }
        if (enter < 0 || obj_[j] < obj_[enter]) enter = static_cast<int>(j);
      }
      if (enter < 0) return -1;
      int leave = -1;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (deleted_[r]) continue;
        if (tab_[r][enter] <= 0) continue;
        Rational ratio = rhs_[r] / tab_[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = static_cast<int>(r);
          best = ratio;
        }
      }
      if (leave < 0) return enter;  // unbounded direction
      const bool degenerate = rhs_[leave] == 0;
      pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
      if (degenerate) {
        if (++degenerate_streak >= 64) bland = true;
      } else {
        degenerate_streak = 0;
        bland = false;
      }
    }
  }

  /// Returns false when the system is infeasible.
  bool phase1() {
    int u = iterate();
    if (u >= 0)
      throw std::logic_error("phase 1 unbounded: impossible for nonnegative objective");
    return obj_val_ == 0;
  }

  void drive_out_artificials() {
    if (!need_phase1_) return;
    for (std::size_t r = 0; r < m_; ++r) {
      if (deleted_[r] || cols_[basis_[r]].kind != ColInfo::Art) continue;
      int target = -1;
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (cols_[j].kind == ColInfo::Art) continue;
        if (tab_[r][j] != 0) {
          target = static_cast<int>(j);
          break;
        }
      }
      if (target >= 0) {
        pivot(r, static_cast<std::size_t>(target));  // degenerate: rhs is 0
      } else {
        deleted_[r] = true;  // dependent row, zero over all real columns
      }
    }
  }

  RatVector internal_costs() const {
    // Internal minimization costs per column.
    RatVector cost(cols_.size(), Rational(0));
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      const ColInfo& ci = cols_[j];
      if (ci.kind == ColInfo::Plus) cost[j] = c_[ci.var];
      else if (ci.kind == ColInfo::Minus) cost[j] = -c_[ci.var];
      if (sense_ == Sense::Maximize && cost[j] != 0) cost[j] = -cost[j];
    }
    return cost;
  }

  void install_phase2_costs() {
    in_phase1_ = false;
    RatVector cost = internal_costs();
    obj_ = cost;
    obj_val_ = 0;
    // Price out the current basis.
    for (std::size_t r = 0; r < m_; ++r) {
      if (deleted_[r]) continue;
      Rational cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t k = 0; k < cols_.size(); ++k)
        if (tab_[r][k] != 0) obj_[k] -= cb * tab_[r][k];
      obj_[basis_[r]] = 0;
      obj_val_ += cb * rhs_[r];
    }
  }

  int phase2() { return iterate(); }

  RatVector map_point() const {
    RatVector x(sys_.n_vars(), Rational(0));
    for (std::size_t v = 0; v < sys_.n_vars(); ++v) x[v] = shift_[v];
    for (std::size_t r = 0; r < m_; ++r) {
      if (deleted_[r]) continue;
      const ColInfo& ci = cols_[basis_[r]];
      if (ci.kind == ColInfo::Plus) x[ci.var] += rhs_[r];
      else if (ci.kind == ColInfo::Minus) x[ci.var] -= rhs_[r];
    }
    return x;
  }

  LpOutcome extract_infeasible() const {
    // Simplex multipliers of the phase-1 optimum, read from identity columns.
    RatVector y1(m_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      int col = identity_col_[r];
      y1[r] = cols_[col].kind == ColInfo::Art ? Rational(Rational(1) - obj_[col])
                                              : Rational(-obj_[col]);
    }
    FarkasCertificate cert;
    cert.row_mults.assign(m_, Rational(0));
    cert.lower_mults.assign(sys_.n_vars(), Rational(0));
    cert.upper_mults.assign(sys_.n_vars(), Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      Rational lam = Rational(-sigma_[r]) * y1[r];
      cert.row_mults[r] = sys_.rows[r].rel == Relation::GreaterEq ? -lam : lam;
    }
    for (std::size_t v = 0; v < sys_.n_vars(); ++v) {
      if (!shifted_[v]) continue;
      Rational mu = 0;
      for (std::size_t r = 0; r < m_; ++r)
        if (sys_.rows[r].coef[v] != 0)
          mu -= y1[r] * Rational(sigma_[r]) * sys_.rows[r].coef[v];
      cert.lower_mults[v] = mu;
    }
    LpOutcome out;
    out.kind = LpOutcome::Kind::Infeasible;
    out.infeasible = std::move(cert);
    return out;
  }

  LpOutcome extract_optimal() const {
    OptimalOutcome opt;
    opt.point = map_point();
    opt.value = dot(c_, opt.point);
    opt.row_duals.assign(m_, Rational(0));
    opt.lower_duals.assign(sys_.n_vars(), Rational(0));
    opt.upper_duals.assign(sys_.n_vars(), Rational(0));
    const Rational flip = sense_ == Sense::Maximize ? -1 : 1;
    for (std::size_t r = 0; r < m_; ++r) {
      if (deleted_[r]) continue;
      Rational y2 = -obj_[identity_col_[r]];
      opt.row_duals[r] = flip * y2 * Rational(sigma_[r]);
    }
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      const ColInfo& ci = cols_[j];
      if (ci.kind == ColInfo::Plus && shifted_[ci.var])
        opt.lower_duals[ci.var] = flip * obj_[j];
    }
    LpOutcome out;
    out.kind = LpOutcome::Kind::Optimal;
    out.optimal = std::move(opt);
    return out;
  }

  LpOutcome extract_unbounded(int enter) const {
    UnboundedOutcome ub;
    ub.point = map_point();
    RatVector ray(sys_.n_vars(), Rational(0));
    const ColInfo& ec = cols_[enter];
    if (ec.kind == ColInfo::Plus) ray[ec.var] += 1;
    else if (ec.kind == ColInfo::Minus) ray[ec.var] -= 1;
    for (std::size_t r = 0; r < m_; ++r) {
      if (deleted_[r] || tab_[r][enter] == 0) continue;
      const ColInfo& ci = cols_[basis_[r]];
      if (ci.kind == ColInfo::Plus) ray[ci.var] -= tab_[r][enter];
      else if (ci.kind == ColInfo::Minus) ray[ci.var] += tab_[r][enter];
    }
    ub.ray = std::move(ray);
    LpOutcome out;
    out.kind = LpOutcome::Kind::Unbounded;
    out.unbounded = std::move(ub);
    return out;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

LpOutcome solve(const LinearSystem& sys, const RatVector& objective, Sense sense) {
  sys.check_well_formed();
  if (objective.size() != sys.n_vars())
    throw std::invalid_argument("solve: objective dimension mismatch");

  const std::size_t n = sys.n_vars();
  const std::size_t m = sys.n_rows();
  auto finish = [&](LpOutcome out) {
    verify_outcome(sys, objective, sense, out);
    return out;
  };

  // -------------------------------------------------------------------------
  // Presolve: singleton rows are absorbed into native variable bounds (the
  // tightest wins); all-zero rows are dropped or turned into an immediate
  // Farkas certificate. Every dropped row keeps its certificate slot; the
  // winning bound's multiplier is folded back into its source row below.
  // -------------------------------------------------------------------------
  std::vector<std::optional<Rational>> lower(n), upper(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (v < sys.lower.size()) lower[v] = sys.lower[v];
    if (v < sys.upper.size()) upper[v] = sys.upper[v];
  }
  std::vector<int> lower_src(n, -1), upper_src(n, -1);  // -1 = native bound
  RatVector lower_coef(n, Rational(0)), upper_coef(n, Rational(0));
  std::vector<char> drop(m, 0);

  auto empty_farkas = [&]() {
    FarkasCertificate f;
    f.row_mults.assign(m, Rational(0));
    f.lower_mults.assign(n, Rational(0));
    f.upper_mults.assign(n, Rational(0));
    return f;
  };
  auto infeasible_outcome = [&](FarkasCertificate f) {
    LpOutcome out;
    out.kind = LpOutcome::Kind::Infeasible;
    out.infeasible = std::move(f);
    return out;
  };

  for (std::size_t r = 0; r < m; ++r) {
    const Row& row = sys.rows[r];
    int nz = -1;
    int count = 0;
    for (std::size_t v = 0; v < n && count < 2; ++v) {
      if (row.coef[v] != 0) {
        nz = static_cast<int>(v);
        ++count;
      }
    }
    if (count >= 2) continue;
    drop[r] = 1;
    if (count == 0) {
      const bool ok = row.rel == Relation::LessEq      ? row.rhs >= 0
                      : row.rel == Relation::GreaterEq ? row.rhs <= 0
                                                       : row.rhs == 0;
      if (ok) continue;
      FarkasCertificate f = empty_farkas();
      f.row_mults[r] = row.rel == Relation::Equal ? Rational(row.rhs > 0 ? -1 : 1) : Rational(1);
      return finish(infeasible_outcome(std::move(f)));
    }
    const std::size_t v = static_cast<std::size_t>(nz);
    const Rational c = row.coef[v];
    const Rational bound = Rational(row.rhs / c);
    const bool gives_lower = row.rel == Relation::Equal ||
                             (row.rel == Relation::GreaterEq && c > 0) ||
                             (row.rel == Relation::LessEq && c < 0);
    const bool gives_upper = row.rel == Relation::Equal ||
                             (row.rel == Relation::LessEq && c > 0) ||
                             (row.rel == Relation::GreaterEq && c < 0);
    if (gives_lower && (!lower[v] || bound > *lower[v])) {
      lower[v] = bound;
      lower_src[v] = static_cast<int>(r);
      lower_coef[v] = c;
    }
    if (gives_upper && (!upper[v] || bound < *upper[v])) {
      upper[v] = bound;
      upper_src[v] = static_cast<int>(r);
      upper_coef[v] = c;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!lower[v] || !upper[v] || *lower[v] <= *upper[v]) continue;
    // Crossing bounds: combine the two sources into a direct refutation.
    FarkasCertificate f = empty_farkas();
    if (lower_src[v] >= 0) {
      const Rational& c = lower_coef[v];
      f.row_mults[lower_src[v]] +=
          sys.rows[lower_src[v]].rel == Relation::Equal ? Rational(-1 / c) : Rational(1 / abs(c));
    } else {
      f.lower_mults[v] = 1;
    }
    if (upper_src[v] >= 0) {
      const Rational& c = upper_coef[v];
      f.row_mults[upper_src[v]] +=
          sys.rows[upper_src[v]].rel == Relation::Equal ? Rational(1 / c) : Rational(1 / abs(c));
    } else {
      f.upper_mults[v] = 1;
    }
    return finish(infeasible_outcome(std::move(f)));
  }

  // Reduced system: surviving rows, native lower bounds, upper bounds as rows.
  LinearSystem work;
  work.vars = sys.vars;
  work.lower = lower;
  std::vector<int> kept;
  for (std::size_t r = 0; r < m; ++r) {
    if (!drop[r]) {
      work.rows.push_back(sys.rows[r]);
      kept.push_back(static_cast<int>(r));
    }
  }
  std::vector<int> ub_row_of(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (!upper[v]) continue;
    ub_row_of[v] = static_cast<int>(work.rows.size());
    RatVector cv = zeros(n);
    cv[v] = 1;
    work.add_row(std::move(cv), Relation::LessEq, *upper[v], "ub(" + sys.vars[v] + ")");
  }

  LpOutcome out = CoreSimplex(work, objective, sense).run();

  // Map certificates from the reduced system back to the original rows.
  if (out.is_optimal()) {
    OptimalOutcome& o = *out.optimal;
    RatVector row_duals(m, Rational(0));
    for (std::size_t i = 0; i < kept.size(); ++i) row_duals[kept[i]] = o.row_duals[i];
    o.upper_duals.assign(n, Rational(0));
    for (std::size_t v = 0; v < n; ++v) {
      if (ub_row_of[v] >= 0) o.upper_duals[v] = o.row_duals[ub_row_of[v]];
      if (lower_src[v] >= 0 && o.lower_duals[v] != 0) {
        row_duals[lower_src[v]] += o.lower_duals[v] / lower_coef[v];
        o.lower_duals[v] = 0;
      }
      if (upper_src[v] >= 0 && o.upper_duals[v] != 0) {
        row_duals[upper_src[v]] += o.upper_duals[v] / upper_coef[v];
        o.upper_duals[v] = 0;
      }
    }
    o.row_duals = std::move(row_duals);
  } else if (out.is_infeasible()) {
    FarkasCertificate& f = *out.infeasible;
    RatVector row_mults(m, Rational(0));
    for (std::size_t i = 0; i < kept.size(); ++i) row_mults[kept[i]] = f.row_mults[i];
    f.upper_mults.assign(n, Rational(0));
    for (std::size_t v = 0; v < n; ++v) {
      if (ub_row_of[v] >= 0) f.upper_mults[v] = f.row_mults[ub_row_of[v]];
      if (lower_src[v] >= 0 && f.lower_mults[v] != 0) {
        const Rational& c = lower_coef[v];
        row_mults[lower_src[v]] += sys.rows[lower_src[v]].rel == Relation::Equal
                                       ? Rational(-f.lower_mults[v] / c)
                                       : Rational(f.lower_mults[v] / abs(c));
        f.lower_mults[v] = 0;
      }
      if (upper_src[v] >= 0 && f.upper_mults[v] != 0) {
        const Rational& c = upper_coef[v];
        row_mults[upper_src[v]] += sys.rows[upper_src[v]].rel == Relation::Equal
                                       ? Rational(f.upper_mults[v] / c)
                                       : Rational(f.upper_mults[v] / abs(c));
        f.upper_mults[v] = 0;
      }
    }
    f.row_mults = std::move(row_mults);
  }

  return finish(std::move(out));
}

void verify_outcome(const LinearSystem& sys, const RatVector& objective, Sense sense,
                    const LpOutcome& outcome) {
  const std::size_t n = sys.n_vars();
  const std::size_t m = sys.n_rows();
  const int s = sense_sign(sense);
  auto lower_at = [&](std::size_t v) -> const std::optional<Rational>& {
    static const std::optional<Rational> none;
    return v < sys.lower.size() ? sys.lower[v] : none;
  };
  auto upper_at = [&](std::size_t v) -> const std::optional<Rational>& {
    static const std::optional<Rational> none;
    return v < sys.upper.size() ? sys.upper[v] : none;
  };

  if (outcome.is_optimal()) {
    const OptimalOutcome& o = *outcome.optimal;
    if (o.point.size() != n || o.row_duals.size() != m ||
        o.lower_duals.size() != n || o.upper_duals.size() != n)
      certificate_error("optimal: size mismatch");
    if (!satisfies(sys, o.point)) certificate_error("optimal: primal infeasible");
    if (o.value != dot(objective, o.point))
      certificate_error("optimal: value != objective at point");
    Rational dual_value = 0;
    for (std::size_t r = 0; r < m; ++r) {
      const Row& row = sys.rows[r];
      const Rational& y = o.row_duals[r];
      if (row.rel == Relation::LessEq && Rational(s) * y < 0)
        certificate_error("optimal: dual sign on <= row");
      if (row.rel == Relation::GreaterEq && Rational(s) * y > 0)
        certificate_error("optimal: dual sign on >= row");
      if (y != 0) {
        dual_value += y * row.rhs;
        if (dot(row.coef, o.point) != row.rhs)
          certificate_error("optimal: complementary slackness on row " + std::to_string(r));
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      const Rational& mu = o.lower_duals[v];
      const Rational& nu = o.upper_duals[v];
      if (mu != 0) {
        if (!lower_at(v)) certificate_error("optimal: lower dual without bound");
        if (Rational(s) * mu > 0) certificate_error("optimal: lower dual sign");
        if (o.point[v] != *lower_at(v))
          certificate_error("optimal: slackness on lower bound");
        dual_value += mu * *lower_at(v);
      }
      if (nu != 0) {
        if (!upper_at(v)) certificate_error("optimal: upper dual without bound");
        if (Rational(s) * nu < 0) certificate_error("optimal: upper dual sign");
        if (o.point[v] != *upper_at(v))
          certificate_error("optimal: slackness on upper bound");
        dual_value += nu * *upper_at(v);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      Rational lhs = o.lower_duals[v] + o.upper_duals[v];
      for (std::size_t r = 0; r < m; ++r)
        if (sys.rows[r].coef[v] != 0) lhs += o.row_duals[r] * sys.rows[r].coef[v];
      if (lhs != objective[v])
        certificate_error("optimal: stationarity at variable " + sys.vars[v]);
    }
    if (dual_value != o.value) certificate_error("optimal: dual value != primal value");
    return;
  }

  if (outcome.is_infeasible()) {
    const FarkasCertificate& f = *outcome.infeasible;
    if (f.row_mults.size() != m || f.lower_mults.size() != n || f.upper_mults.size() != n)
      certificate_error("farkas: size mismatch");
    RatVector agg = zeros(n);
    Rational agg_rhs = 0;
    for (std::size_t r = 0; r < m; ++r) {
      const Row& row = sys.rows[r];
      const Rational& mult = f.row_mults[r];
      if (mult == 0) continue;
      if (row.rel != Relation::Equal && mult < 0)
        certificate_error("farkas: negative multiplier on inequality row");
      Rational signed_mult = row.rel == Relation::GreaterEq ? -mult : mult;
      for (std::size_t v = 0; v < n; ++v)
        if (row.coef[v] != 0) agg[v] += signed_mult * row.coef[v];
      agg_rhs += signed_mult * row.rhs;
    }
    for (std::size_t v = 0; v < n; ++v) {
      const Rational& mu = f.lower_mults[v];
      const Rational& nu = f.upper_mults[v];
      if (mu != 0) {
        if (!lower_at(v)) certificate_error("farkas: lower mult without bound");
        if (mu < 0) certificate_error("farkas: negative lower mult");
        agg[v] -= mu;
        agg_rhs -= mu * *lower_at(v);
      }
      if (nu != 0) {
        if (!upper_at(v)) certificate_error("farkas: upper mult without bound");
        if (nu < 0) certificate_error("farkas: negative upper mult");
        agg[v] += nu;
        agg_rhs += nu * *upper_at(v);
      }
    }
    for (std::size_t v = 0; v < n; ++v)
      if (agg[v] != 0) certificate_error("farkas: aggregate coefficient nonzero");
    if (agg_rhs >= 0) certificate_error("farkas: aggregate rhs not negative");
    return;
  }

  const UnboundedOutcome& u = *outcome.unbounded;
  if (u.point.size() != n || u.ray.size() != n)
    certificate_error("unbounded: size mismatch");
  if (!satisfies(sys, u.point)) certificate_error("unbounded: start point infeasible");
  for (std::size_t r = 0; r < m; ++r) {
    Rational along = dot(sys.rows[r].coef, u.ray);
    if (sys.rows[r].rel == Relation::LessEq && along > 0)
      certificate_error("unbounded: ray leaves <= row");
    if (sys.rows[r].rel == Relation::GreaterEq && along < 0)
      certificate_error("unbounded: ray leaves >= row");
    if (sys.rows[r].rel == Relation::Equal && along != 0)
      certificate_error("unbounded: ray leaves = row");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (lower_at(v) && u.ray[v] < 0) certificate_error("unbounded: ray leaves lower bound");
    if (upper_at(v) && u.ray[v] > 0) certificate_error("unbounded: ray leaves upper bound");
  }
  Rational gain = dot(objective, u.ray);
  if (Rational(s) * gain <= 0) certificate_error("unbounded: ray does not improve");
}

// ---------------------------------------------------------------------------
// Redundancy
// ---------------------------------------------------------------------------

namespace {

/// Maps optimal duals of max/min (coef over sys) into a <=-normalized
/// aggregation certificate proving coef·x <= achieved (direction = Maximize)
/// or -coef·x <= -achieved (direction = Minimize).
AggregationCertificate aggregation_from_duals(const LinearSystem& sys, Sense sense,
                                              const OptimalOutcome& o) {
  AggregationCertificate cert;
  const std::size_t m = sys.n_rows();
  const std::size_t n = sys.n_vars();
  const Rational flip = sense == Sense::Maximize ? 1 : -1;
  cert.row_mults.assign(m, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    Rational y = flip * o.row_duals[r];
    cert.row_mults[r] = sys.rows[r].rel == Relation::GreaterEq ? -y : y;
  }
  cert.lower_mults.assign(n, Rational(0));
  cert.upper_mults.assign(n, Rational(0));
  for (std::size_t v = 0; v < n; ++v) {
    cert.lower_mults[v] = -flip * o.lower_duals[v];
    cert.upper_mults[v] = flip * o.upper_duals[v];
  }
  cert.achieved = o.value;
  return cert;
}

void verify_aggregation(const LinearSystem& sys, const RatVector& target,
                        const Rational& target_rhs, const AggregationCertificate& cert) {
  const std::size_t n = sys.n_vars();
  RatVector agg = zeros(n);
  Rational agg_rhs = 0;
  for (std::size_t r = 0; r < sys.n_rows(); ++r) {
    const Row& row = sys.rows[r];
    const Rational& mult = cert.row_mults[r];
    if (mult == 0) continue;
    if (row.rel != Relation::Equal && mult < 0)
      certificate_error("aggregation: negative multiplier on inequality row");
    Rational sm = row.rel == Relation::GreaterEq ? -mult : mult;
    for (std::size_t v = 0; v < n; ++v)
      if (row.coef[v] != 0) agg[v] += sm * row.coef[v];
    agg_rhs += sm * row.rhs;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (cert.lower_mults[v] != 0) {
      if (cert.lower_mults[v] < 0) certificate_error("aggregation: lower mult sign");
      agg[v] -= cert.lower_mults[v];
      agg_rhs -= cert.lower_mults[v] * *sys.lower[v];
    }
    if (cert.upper_mults[v] != 0) {
      if (cert.upper_mults[v] < 0) certificate_error("aggregation: upper mult sign");
      agg[v] += cert.upper_mults[v];
      agg_rhs += cert.upper_mults[v] * *sys.upper[v];
    }
  }
  if (agg != target) certificate_error("aggregation: coefficients do not match");
  if (agg_rhs > target_rhs) certificate_error("aggregation: rhs too large");
}

}  // namespace

RedundancyCertificate is_redundant(const LinearSystem& sys, const Row& candidate) {
  sys.check_well_formed();
  if (candidate.coef.size() != sys.n_vars())
    throw std::invalid_argument("is_redundant: candidate width mismatch");

  RedundancyCertificate out;
  bool need_le = candidate.rel != Relation::GreaterEq;
  bool need_ge = candidate.rel != Relation::LessEq;
  bool le_ok = true, ge_ok = true;

  if (need_le) {
    LpOutcome r = solve(sys, candidate.coef, Sense::Maximize);
    if (r.is_infeasible()) throw std::invalid_argument("is_redundant: base system infeasible");
    if (r.is_unbounded()) {
      le_ok = false;
    } else {
      le_ok = r.optimal->value <= candidate.rhs;
      if (le_ok) {
        AggregationCertificate cert =
            aggregation_from_duals(sys, Sense::Maximize, *r.optimal);
        verify_aggregation(sys, candidate.coef, candidate.rhs, cert);
        out.le_cert = std::move(cert);
      }
    }
  }
  if (need_ge) {
    LpOutcome r = solve(sys, candidate.coef, Sense::Minimize);
    if (r.is_infeasible()) throw std::invalid_argument("is_redundant: base system infeasible");
    if (r.is_unbounded()) {
      ge_ok = false;
    } else {
      ge_ok = r.optimal->value >= candidate.rhs;
      if (ge_ok) {
        AggregationCertificate cert =
            aggregation_from_duals(sys, Sense::Minimize, *r.optimal);
        RatVector neg(candidate.coef.size());
        for (std::size_t v = 0; v < neg.size(); ++v) neg[v] = -candidate.coef[v];
        verify_aggregation(sys, neg, -candidate.rhs, cert);
        out.ge_cert = std::move(cert);
      }
    }
  }
  out.redundant = le_ok && ge_ok;
  if (!out.redundant) {
    out.le_cert.reset();
    out.ge_cert.reset();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fourier–Motzkin projection
// ---------------------------------------------------------------------------

LinearSystem fourier_motzkin_project(const LinearSystem& sys,
                                     const std::vector<std::string>& keep,
                                     int max_eliminations) {
  sys.check_well_formed();
  std::vector<bool> keep_mask(sys.n_vars(), false);
  for (const std::string& name : keep) {
    int idx = sys.var_index(name);
    if (idx < 0) throw std::invalid_argument("fourier_motzkin_project: unknown variable " + name);
    if (keep_mask[idx])
      throw std::invalid_argument("fourier_motzkin_project: duplicate keep variable " + name);
    keep_mask[idx] = true;
  }
  std::vector<std::size_t> elim;
  for (std::size_t v = sys.n_vars(); v-- > 0;)
    if (!keep_mask[v]) elim.push_back(v);
  if (static_cast<int>(elim.size()) > max_eliminations)
    throw std::invalid_argument("fourier_motzkin_project: elimination budget exceeded");

  auto make_kept_system = [&](const std::vector<Row>& rows) {
    LinearSystem out;
    for (std::size_t v = 0; v < sys.n_vars(); ++v)
      if (keep_mask[v]) out.vars.push_back(sys.vars[v]);
    for (const Row& r : rows) {
      RatVector coef;
      coef.reserve(out.vars.size());
      for (std::size_t v = 0; v < sys.n_vars(); ++v)
        if (keep_mask[v]) coef.push_back(r.coef[v]);
      out.add_row(std::move(coef), r.rel, r.rhs, r.label);
    }
    return out;
  };

  // Detectable infeasibility: empty input projects to the empty set.
  {
    LpOutcome feas = solve(bounds_as_rows(sys), zeros(sys.n_vars()), Sense::Minimize);
    if (feas.is_infeasible()) {
      LinearSystem out = make_kept_system({});
      out.add_row(zeros(out.n_vars()), Relation::LessEq, Rational(-1), "infeasible");
      return out;
    }
  }

  std::vector<Row> cur = bounds_as_rows(sys).rows;

  auto drop_trivial = [&](std::vector<Row>& rows) {
    std::vector<Row> kept;
    for (Row& r : rows) {
      bool zero = true;
      for (const Rational& c : r.coef)
        if (c != 0) { zero = false; break; }
      if (!zero) {
        kept.push_back(std::move(r));
        continue;
      }
      bool ok = r.rel == Relation::LessEq ? r.rhs >= 0
              : r.rel == Relation::GreaterEq ? r.rhs <= 0
                                             : r.rhs == 0;
      if (!ok) kept.push_back(std::move(r));  // inconsistent marker stays
    }
    rows = std::move(kept);
  };

  auto prune_redundant = [&](std::vector<Row>& rows) {
    for (std::size_t i = 0; i < rows.size();) {
      if (rows.size() <= 1) break;
      LinearSystem base;
      base.vars = sys.vars;
      for (std::size_t k = 0; k < rows.size(); ++k)
        if (k != i) base.rows.push_back(rows[k]);
      if (is_redundant(base, rows[i]).redundant)
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
      else
        ++i;
    }
  };

  for (std::size_t v : elim) {
    // Prefer an equation as substitution pivot.
    int eq = -1;
    for (std::size_t r = 0; r < cur.size(); ++r) {
      if (cur[r].rel == Relation::Equal && cur[r].coef[v] != 0) {
        eq = static_cast<int>(r);
        break;
      }
    }
    if (eq >= 0) {
      Row pivot_row = cur[static_cast<std::size_t>(eq)];
      cur.erase(cur.begin() + eq);
      Rational beta = pivot_row.coef[v];
      for (Row& r : cur) {
        if (r.coef[v] == 0) continue;
        Rational f = r.coef[v] / beta;
        for (std::size_t k = 0; k < r.coef.size(); ++k)
          if (pivot_row.coef[k] != 0) r.coef[k] -= f * pivot_row.coef[k];
        r.coef[v] = 0;
        r.rhs -= f * pivot_row.rhs;
      }
    } else {
      std::vector<Row> ups, downs, zero_rows;
      for (Row& r : cur) {
        // Normalize to <= for combination.
        Row s = r;
        if (s.rel == Relation::GreaterEq) {
          for (Rational& c : s.coef) c = -c;
          s.rhs = -s.rhs;
          s.rel = Relation::LessEq;
        }
        if (s.coef[v] > 0) ups.push_back(std::move(s));
        else if (s.coef[v] < 0) downs.push_back(std::move(s));
        else zero_rows.push_back(std::move(r));
      }
      std::vector<Row> next = std::move(zero_rows);
      for (const Row& up : ups) {
        for (const Row& dn : downs) {
          Rational fu = 1 / up.coef[v];
          Rational fd = -1 / dn.coef[v];
          RatVector coef(sys.n_vars(), Rational(0));
          for (std::size_t k = 0; k < coef.size(); ++k)
            coef[k] = fu * up.coef[k] + fd * dn.coef[k];
          coef[v] = 0;
          next.emplace_back(std::move(coef), Relation::LessEq,
                            fu * up.rhs + fd * dn.rhs, "fm");
        }
      }
      cur = std::move(next);
    }
    drop_trivial(cur);
    prune_redundant(cur);
  }

  return make_kept_system(cur);
}

}  // namespace rltlab
