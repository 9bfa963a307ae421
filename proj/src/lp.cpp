#include "costab/lp.hpp"

#include <stdexcept>
#include <utility>

namespace costab {

bool LinearConstraint::satisfied_by(const std::vector<Rational>& x) const {
  Rational lhs(0);
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (!coeffs[j].is_zero()) lhs += coeffs[j] * x[j];
  switch (rel) {
    case Relation::LessEq: return lhs <= rhs;
    case Relation::GreaterEq: return lhs >= rhs;
    case Relation::Equal: return lhs == rhs;
  }
  return false;
}

LinearProgram LinearProgram::minimize(std::vector<Rational> objective) {
  LinearProgram lp;
  lp.lower_bounds.assign(objective.size(), Rational(0));
  lp.objective = std::move(objective);
  return lp;
}

namespace {

// Dense simplex tableau over columns of nonnegative variables. Basis columns
// are kept as an identity submatrix; the reduced-cost row is updated by the
// same pivots.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)), b_(rows),
        basis_(rows, -1), banned_(cols, 0), reduced_(cols) {}

  Rational& at(int i, int j) { return a_[i][j]; }
  Rational& rhs(int i) { return b_[i]; }
  int basis(int i) const { return basis_[i]; }
  void set_basis(int i, int j) { basis_[i] = j; }
  void ban(int j) { banned_[j] = 1; }
  int rows() const { return rows_; }

  // Reduced costs and objective for the given cost vector, priced against
  // the current basis.
  void load_costs(const std::vector<Rational>& cost) {
    reduced_ = cost;
    objective_ = Rational(0);
    for (int i = 0; i < rows_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      objective_ += cb * b_[i];
      const auto& row = a_[i];
      for (int j = 0; j < cols_; ++j)
        if (!row[j].is_zero()) reduced_[j] -= cb * row[j];
    }
  }

  const Rational& objective() const { return objective_; }
  const Rational& basic_value(int i) const { return b_[i]; }

  void pivot(int r, int s) {
    const Rational inv = Rational(1) / a_[r][s];
    auto& prow = a_[r];
    if (inv != Rational(1)) {
      for (int j = 0; j < cols_; ++j)
        if (!prow[j].is_zero()) prow[j] *= inv;
      b_[r] *= inv;
    }
    prow[s] = Rational(1);
    for (int i = 0; i < rows_; ++i) {
      if (i == r || a_[i][s].is_zero()) continue;
      const Rational f = a_[i][s];
      auto& row = a_[i];
      for (int j = 0; j < cols_; ++j)
        if (!prow[j].is_zero()) row[j] -= f * prow[j];
      row[s] = Rational(0);
      b_[i] -= f * b_[r];
    }
    if (!reduced_[s].is_zero()) {
      const Rational f = reduced_[s];
      for (int j = 0; j < cols_; ++j)
        if (!prow[j].is_zero()) reduced_[j] -= f * prow[j];
      reduced_[s] = Rational(0);
      objective_ += f * b_[r];
    }
    basis_[r] = s;
  }

  enum class Result { Optimal, Unbounded };

  // Bland's rule: least-index entering column among negative reduced costs;
  // leaving row by minimum ratio, ties broken by least basis variable index.
  Result run() {
    for (;;) {
      int s = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!banned_[j] && reduced_[j].sign() < 0) {
          s = j;
          break;
        }
      }
      if (s < 0) return Result::Optimal;
      int r = -1;
      Rational best_ratio(0);
      for (int i = 0; i < rows_; ++i) {
        if (a_[i][s].sign() <= 0) continue;
        Rational ratio = b_[i] / a_[i][s];
        if (r < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[r])) {
          r = i;
          best_ratio = ratio;
        }
      }
      if (r < 0) return Result::Unbounded;
      pivot(r, s);
    }
  }

  void drop_rows(const std::vector<int>& rows_to_drop) {
    if (rows_to_drop.empty()) return;
    std::vector<std::vector<Rational>> na;
    std::vector<Rational> nb;
    std::vector<int> nbasis;
    for (int i = 0; i < rows_; ++i) {
      bool drop = false;
      for (int d : rows_to_drop) drop = drop || (d == i);
      if (drop) continue;
      na.push_back(std::move(a_[i]));
      nb.push_back(std::move(b_[i]));
      nbasis.push_back(basis_[i]);
    }
    a_ = std::move(na);
    b_ = std::move(nb);
    basis_ = std::move(nbasis);
    rows_ = static_cast<int>(a_.size());
  }

 private:
  int rows_, cols_;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<int> basis_;
  std::vector<char> banned_;
  std::vector<Rational> reduced_;
  Rational objective_;
};

}  // namespace

LpSolution simplex_min(const LinearProgram& lp) {
  const int n = lp.variables();
  if (static_cast<int>(lp.lower_bounds.size()) != n)
    throw DomainError("one lower bound entry per variable required");
  for (const auto& c : lp.constraints)
    if (static_cast<int>(c.coeffs.size()) != n)
      throw DomainError("constraint arity does not match the objective");

  // Column layout: shifted/split structural variables first, then slack and
  // artificial columns. x_j = lb_j + y_j for bounded variables, x_j = y+ - y-
  // for free ones.
  std::vector<int> plus_col(n), minus_col(n, -1);
  int ncols = 0;
  for (int j = 0; j < n; ++j) {
    plus_col[j] = ncols++;
    if (!lp.lower_bounds[j]) minus_col[j] = ncols++;
  }
  const int structural_cols = ncols;

  const int m = static_cast<int>(lp.constraints.size());
  struct Row {
    std::vector<Rational> a;
    Rational b;
    Relation rel;
  };
  std::vector<Row> rows;
  rows.reserve(m);
  for (const auto& c : lp.constraints) {
    Row row{std::vector<Rational>(structural_cols), Rational(0), c.rel};
    row.b = c.rhs;
    for (int j = 0; j < n; ++j) {
      if (c.coeffs[j].is_zero()) continue;
      row.a[plus_col[j]] = c.coeffs[j];
      if (minus_col[j] >= 0) row.a[minus_col[j]] = -c.coeffs[j];
      if (lp.lower_bounds[j]) row.b -= c.coeffs[j] * *lp.lower_bounds[j];
    }
    if (row.b.sign() < 0 || (row.b.is_zero() && row.rel == Relation::GreaterEq)) {
      // Normalize so rhs >= 0; a >= row with rhs 0 flips into a slack row,
      // which saves an artificial column.
      for (auto& v : row.a) v = -v;
      row.b = -row.b;
      if (row.rel == Relation::LessEq)
        row.rel = Relation::GreaterEq;
      else if (row.rel == Relation::GreaterEq)
        row.rel = Relation::LessEq;
    }
    rows.push_back(std::move(row));
  }

  int slack_count = 0, artificial_count = 0;
  for (const auto& row : rows) {
    if (row.rel != Relation::Equal) ++slack_count;
    if (row.rel != Relation::LessEq) ++artificial_count;
  }
  const int total_cols = structural_cols + slack_count + artificial_count;

  Tableau t(m, total_cols);
  int next_slack = structural_cols;
  int next_artificial = structural_cols + slack_count;
  const int first_artificial = next_artificial;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < structural_cols; ++j) t.at(i, j) = rows[i].a[j];
    t.rhs(i) = rows[i].b;
    switch (rows[i].rel) {
      case Relation::LessEq:
        t.at(i, next_slack) = Rational(1);
        t.set_basis(i, next_slack++);
        break;
      case Relation::GreaterEq:
        t.at(i, next_slack++) = Rational(-1);
        t.at(i, next_artificial) = Rational(1);
        t.set_basis(i, next_artificial++);
        break;
      case Relation::Equal:
        t.at(i, next_artificial) = Rational(1);
        t.set_basis(i, next_artificial++);
        break;
    }
  }

  if (artificial_count > 0) {
    std::vector<Rational> phase1(total_cols, Rational(0));
    for (int j = first_artificial; j < total_cols; ++j) phase1[j] = Rational(1);
    t.load_costs(phase1);
    t.run();  // phase 1 is bounded below by 0
    if (t.objective().sign() > 0) return LpSolution{LpStatus::Infeasible, {}, Rational(0)};

    // Drive surviving artificials out of the basis; rows that cannot pivot
    // are redundant and get dropped.
    std::vector<int> redundant;
    for (int i = 0; i < t.rows(); ++i) {
      if (t.basis(i) < first_artificial) continue;
      int s = -1;
      for (int j = 0; j < first_artificial; ++j) {
        if (!t.at(i, j).is_zero()) {
          s = j;
          break;
        }
      }
      if (s >= 0)
        t.pivot(i, s);
      else
        redundant.push_back(i);
    }
    t.drop_rows(redundant);
    for (int j = first_artificial; j < total_cols; ++j) t.ban(j);
  }

  std::vector<Rational> phase2(total_cols, Rational(0));
  for (int j = 0; j < n; ++j) {
    phase2[plus_col[j]] = lp.objective[j];
    if (minus_col[j] >= 0) phase2[minus_col[j]] = -lp.objective[j];
  }
  t.load_costs(phase2);
  if (t.run() == Tableau::Result::Unbounded)
    return LpSolution{LpStatus::Unbounded, {}, Rational(0)};

  std::vector<Rational> y(total_cols, Rational(0));
  for (int i = 0; i < t.rows(); ++i) y[t.basis(i)] = t.basic_value(i);
  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.values.resize(n);
  sol.objective_value = Rational(0);
  for (int j = 0; j < n; ++j) {
    sol.values[j] = y[plus_col[j]];
    if (minus_col[j] >= 0)
      sol.values[j] -= y[minus_col[j]];
    else
      sol.values[j] += *lp.lower_bounds[j];
    sol.objective_value += lp.objective[j] * sol.values[j];
  }
  return sol;
}

SeparationSolve solve_with_separation(LinearProgram relaxation, const SeparationOracle& oracle) {
  SeparationSolve out;
  const std::size_t base_rows = relaxation.constraints.size();
  std::optional<Rational> previous;
  for (;;) {
    LpSolution sol = simplex_min(relaxation);
    if (sol.status != LpStatus::Optimal) {
      out.solution = std::move(sol);
      return out;
    }
    if (previous && sol.objective_value < *previous)
      throw std::logic_error("cut monotonicity violated");
    previous = sol.objective_value;
    auto cut = oracle(sol.values);
    if (!cut) {
      out.solution = std::move(sol);
      return out;
    }
    if (static_cast<int>(cut->coeffs.size()) != relaxation.variables())
      throw std::logic_error("separation oracle returned a cut of wrong arity");
    if (cut->satisfied_by(sol.values))
      throw std::logic_error("separation oracle returned a non-violated constraint");
    for (std::size_t i = base_rows; i < relaxation.constraints.size(); ++i)
      if (relaxation.constraints[i] == *cut)
        throw std::logic_error("separation oracle repeated a cut");
    relaxation.constraints.push_back(std::move(*cut));
    ++out.cuts_generated;
  }
}

}  // namespace costab
