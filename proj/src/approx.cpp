#include "costab/approx.hpp"

#include <algorithm>
#include <stdexcept>

#include "costab/stability.hpp"

namespace costab {

FptasParams FptasParams::make(const Rational& epsilon, int players) {
  if (epsilon.sign() <= 0) throw DomainError("approximation accuracy must be positive");
  if (players < 1) throw DomainError("at least one player required");
  FptasParams params;
  params.epsilon = epsilon;
  params.x = (Rational(1) / epsilon).ceil() * 2;
  params.epsilon_prime = Rational(BigInt(1), params.x);
  params.grid_step = Rational(BigInt(1), BigInt(players) * params.x);
  params.players = players;
  params.last_index = BigInt(players) * params.x;
  return params;
}

namespace {

LinearConstraint coalition_cut(int n, const Coalition& c) {
  LinearConstraint cut;
  cut.coeffs.assign(n, Rational(0));
  for (int i : c.members()) cut.coeffs[i] = Rational(1);
  cut.rel = Relation::GreaterEq;
  cut.rhs = Rational(1);
  return cut;
}

// Rounding oracle against the budget `baseline + eps'*k`. Checks the n+1
// plain constraints first, rounds payoffs up to the grid, and hunts for a
// winning coalition whose rounded payment stays below 1 with a dynamic
// program indexed by grid units (so binary weights stay cheap).
RoundedSeparation rounded_separation_impl(const WeightedVotingGame& g, const SuperImputation& p,
                                          const FptasParams& params, const BigInt& k,
                                          const Rational& baseline) {
  const int n = g.players();
  if (p.size() != n) throw DomainError("payoff size does not match the game");
  if (params.players != n) throw DomainError("parameters were built for a different player count");
  if (k < 1) throw DomainError("feasibility programs are indexed from 1");

  RoundedSeparation out;
  const Rational budget = baseline + params.epsilon_prime * Rational(k);
  // p >= 0 holds by construction of SuperImputation; the budget row is the
  // remaining plain constraint.
  if (p.total() > budget) {
    LinearConstraint row;
    row.coeffs.assign(n, Rational(1));
    row.rel = Relation::LessEq;
    row.rhs = budget;
    out.violated = std::move(row);
    return out;
  }

  const BigInt cells = BigInt(n + 1) * BigInt(params.last_index + 1);
  if (cells > BigInt(kFptasTableCellCap))
    throw ResourceError("rounding grid exceeds the table budget; relax epsilon");
  const std::size_t max_units = params.last_index.get_ui();  // p'(C) < 1 <=> units < n*X

  // Round up: p'_i is the least multiple of eps'/n at or above p_i.
  std::vector<BigInt> units(n);
  std::vector<Rational> rounded(n);
  for (int i = 0; i < n; ++i) {
    units[i] = (p[i] / params.grid_step).ceil();
    rounded[i] = Rational(units[i]) * params.grid_step;
  }

  // heaviest[i][t] = max weight over coalitions of the first i players whose
  // rounded payment is exactly t units. Players rounded to >= 1 can never
  // join a violating coalition and only ever copy rows.
  std::vector<std::size_t> u(n, max_units + 1);
  for (int i = 0; i < n; ++i)
    if (units[i] < params.last_index) u[i] = units[i].get_ui();
  std::vector<std::vector<std::optional<BigInt>>> heaviest(
      n + 1, std::vector<std::optional<BigInt>>(max_units));
  if (max_units > 0) heaviest[0][0] = BigInt(0);
  for (int i = 1; i <= n; ++i) {
    for (std::size_t t = 0; t < max_units; ++t) {
      heaviest[i][t] = heaviest[i - 1][t];
      if (u[i - 1] <= t && heaviest[i - 1][t - u[i - 1]]) {
        BigInt cand = *heaviest[i - 1][t - u[i - 1]] + g.weights()[i - 1];
        if (!heaviest[i][t] || cand > *heaviest[i][t]) heaviest[i][t] = std::move(cand);
      }
    }
  }

  for (std::size_t t = 0; t < max_units; ++t) {
    if (!heaviest[n][t] || *heaviest[n][t] < g.quota()) continue;
    Coalition c;
    std::size_t rem = t;
    for (int i = n; i >= 1; --i) {
      if (heaviest[i - 1][rem] && *heaviest[i - 1][rem] == *heaviest[i][rem])
        continue;  // prefer dropping high indices at ties
      c = c.with(i - 1);
      rem -= u[i - 1];
    }
    if (c.empty()) {
      // Only possible when q = 0 and t = 0; any zero-rounded player wins alone.
      int solo = -1;
      for (int i = 0; i < n && solo < 0; ++i)
        if (u[i] == 0) solo = i;
      if (solo < 0) continue;
      c = Coalition::single(solo);
    }
    out.violated = coalition_cut(n, c);
    out.violated_coalition = c;
    return out;  // p(C) <= p'(C) < 1, so the cut is violated by p as well
  }

  out.rounded_feasible = std::move(rounded);
  return out;
}

// Runs the feasibility-program ladder for `min stable total <= baseline +
// eps'*k`. Winning-coalition cuts are valid for every k, so the pool
// persists; a pool optimum above the budget of program k is an exact
// infeasibility certificate for it and lets the ladder jump ahead.
Rational additive_cos_baseline(const WeightedVotingGame& g, const Rational& epsilon,
                               const Rational& baseline) {
  const int n = g.players();
  FptasParams params = FptasParams::make(epsilon, n);
  LinearProgram pool = LinearProgram::minimize(std::vector<Rational>(n, Rational(1)));
  BigInt k = 1;
  for (;;) {
    LpSolution sol = simplex_min(pool);
    const Rational& relaxed_total = sol.objective_value;
    Rational excess = relaxed_total - baseline;
    if (excess.sign() > 0) {
      BigInt first_affordable = (excess * Rational(params.x)).ceil();
      if (first_affordable > k) k = first_affordable;
    }
    RoundedSeparation sep =
        rounded_separation_impl(g, SuperImputation(sol.values), params, k, baseline);
    if (!sep.violated) return params.epsilon_prime * Rational(BigInt(k + 1));
    if (!sep.violated_coalition)
      throw std::logic_error("pool candidates satisfy the plain constraints by construction");
    if (sep.violated->satisfied_by(sol.values))
      throw std::logic_error("rounding oracle returned a non-violated cut");
    pool.constraints.push_back(std::move(*sep.violated));
  }
}

}  // namespace

RoundedSeparation rounded_separation(const WeightedVotingGame& g, const SuperImputation& p,
                                     const FptasParams& params, const BigInt& k) {
  return rounded_separation_impl(g, p, params, k, Rational(1));
}

Rational additive_fptas(const WeightedVotingGame& g, const Rational& epsilon) {
  return additive_cos_baseline(g, epsilon, Rational(1));
}

Rational additive_fptas_cs(const WeightedVotingGame& g, const CoalitionStructure& cs,
                           const Rational& epsilon) {
  return additive_cos_baseline(g, epsilon, cs_value(Game(g), cs));
}

Rational fptas(const WeightedVotingGame& g, const Rational& epsilon) {
  if (epsilon.sign() <= 0) throw DomainError("approximation accuracy must be positive");
  if (!veto_agents(Game(g)).empty()) return Rational(0);  // nonempty core, CoS = 0
  // Veto-free voting games have CoS >= 1/n, so an additive eps/n error stays
  // within a (1+eps) factor.
  return additive_cos_baseline(g, epsilon / Rational(g.players()), Rational(1));
}

SuperImputation proportional_payoff(const WeightedVotingGame& g) {
  if (g.quota() <= 0) throw DomainError("proportional payoff needs a positive quota");
  std::vector<Rational> p;
  p.reserve(g.players());
  for (const BigInt& w : g.weights())
    p.push_back(std::min(Rational(1), Rational(w, g.quota())));
  return SuperImputation(std::move(p));
}

BoundsReport bounds_report(const Game& g) {
  const int n = g.players();
  auto [welfare, structure] = optimal_cs_value(g);
  BoundsReport report{n,  g.grand_value(), cos_of(g), std::nullopt,
                      welfare, structure.parts(), {}};

  report.least_core = least_core_value(g);

  const Rational& cos = report.cos.cos;
  auto add = [&report](std::string name, Rational lhs, std::string rel, Rational rhs, bool pass) {
    report.checks.push_back({std::move(name), std::move(lhs), std::move(rel), std::move(rhs), pass});
  };

  Rational welfare_gap = welfare - report.grand_value;
  add("cs_welfare_lower", welfare_gap, "<=", cos, welfare_gap <= cos);

  Rational vmax = g.is_wvg() ? Rational(1) : g.tabular().max_value();
  Rational upper = Rational(n) * vmax;
  add("total_value_upper", cos, "<=", upper, cos <= upper);

  if (report.least_core) {
    const Rational& eps = *report.least_core;
    Rational scaled = Rational(n) * eps;
    add("least_core_upper", cos, "<=", scaled, cos <= scaled);
    add("least_core_sign", eps, "pos-iff-pos", cos, (eps.sign() > 0) == (cos.sign() > 0));
  }

  if (g.is_wvg() && veto_agents(g).empty())
    add("veto_free_lower", Rational(1, n), "<=", cos, Rational(1, n) <= cos);

  if (n <= 12) {
    bool superadditive = is_superadditive_brute(g);
    if (superadditive) {
      // CoS <= (sqrt(n)-1)*v(I), compared exactly via squares.
      Rational lhs = (cos + report.grand_value) * (cos + report.grand_value);
      Rational rhs = Rational(n) * report.grand_value * report.grand_value;
      add("superadditive_upper_squared", lhs, "<=", rhs, lhs <= rhs);
      if (is_anonymous_brute(g)) {
        Rational twice = Rational(2) * report.grand_value;
        add("anonymous_upper", cos, "<=", twice, cos <= twice);
      }
    }
  }
  return report;
}

}  // namespace costab
