#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "costab/rational.hpp"

namespace costab {

enum class Relation { LessEq, GreaterEq, Equal };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::GreaterEq;
  Rational rhs;

  bool satisfied_by(const std::vector<Rational>& x) const;
  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// Minimization program over rationals. Variables may carry a lower bound or
/// be free; there are no upper bounds (encode them as constraints).
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<std::optional<Rational>> lower_bounds;  // nullopt = free

  /// Program with the given objective and every variable bounded below by 0.
  static LinearProgram minimize(std::vector<Rational> objective);

  int variables() const { return static_cast<int>(objective.size()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> values;  // meaningful when Optimal
  Rational objective_value;
};

/// Exact two-phase primal simplex with Bland's least-index pivot rule.
/// Deterministic: a given program always yields the same basic solution.
LpSolution simplex_min(const LinearProgram& lp);

/// Returns a violated constraint of the full program, or nullopt when the
/// candidate satisfies all of them. Oracles must be pure functions.
using SeparationOracle =
    std::function<std::optional<LinearConstraint>(const std::vector<Rational>&)>;

struct SeparationSolve {
  LpSolution solution;
  int cuts_generated = 0;
};

/// Constraint generation: solve the relaxation, query the oracle at the
/// optimum, add the returned cut, repeat until the oracle accepts the point.
/// The result equals the optimum of the full (possibly exponential) program.
SeparationSolve solve_with_separation(LinearProgram relaxation, const SeparationOracle& oracle);

}  // namespace costab
