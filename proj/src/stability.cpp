#include "costab/stability.hpp"

#include <algorithm>
#include <optional>

#include "costab/lp.hpp"

namespace costab {

namespace {

// Dense 0/1 value table of a simple game; throws when the game is not simple.
std::vector<char> simple_value_table(const TabularGame& g) {
  const int n = g.players();
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<char> win(size, 0);
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    Rational v = g.value(Coalition::from_mask(mask));
    if (v == Rational(1))
      win[mask] = 1;
    else if (!v.is_zero())
      throw PreconditionError("game is not simple: values must be 0 or 1");
  }
  for (std::uint64_t mask = 1; mask < size; ++mask)
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
      if (win[mask & ~(m & -m)] > win[mask])
        throw PreconditionError("game is not simple: value function must be increasing");
  return win;
}

}  // namespace

std::vector<int> veto_agents(const Game& g) {
  const int n = g.players();
  std::vector<int> veto;
  if (g.is_wvg()) {
    const auto& wvg = g.wvg();
    // i is veto iff the complement of {i} loses (the game is increasing);
    // wins() also covers q = 0, where the empty complement still loses.
    for (int i = 0; i < n; ++i)
      if (!wvg.wins(Coalition::full(n).without(i))) veto.push_back(i);
    return veto;
  }
  std::vector<char> win = simple_value_table(g.tabular());
  // Increasing game: i is veto iff the complement of {i} loses.
  const std::uint64_t full = Coalition::full(n).mask();
  for (int i = 0; i < n; ++i)
    if (!win[full & ~(std::uint64_t{1} << i)]) veto.push_back(i);
  return veto;
}

bool simple_core_nonempty(const Game& g) { return !veto_agents(g).empty(); }

DeficitReport max_deficit_wvg_dp(const WeightedVotingGame& g, const SuperImputation& p) {
  const int n = g.players();
  if (p.size() != n) throw DomainError("payoff size does not match the game");

  if (g.quota() == 0) {
    // Every nonempty coalition wins; the cheapest one is a single player.
    int arg = 0;
    for (int i = 1; i < n; ++i)
      if (p[i] < p[arg]) arg = i;
    Rational d = Rational(1) - p[arg];
    if (d.sign() <= 0) return {Rational(0), Coalition()};
    return {std::move(d), Coalition::single(arg)};
  }

  const BigInt cells = BigInt(n + 1) * BigInt(g.total_weight() + 1);
  if (!g.total_weight().fits_ulong_p() || cells > BigInt(kDeficitTableCellCap))
    throw ResourceError(
        "weight table exceeds the budget; use max_deficit_brute or the FPTAS instead");
  const std::size_t total = g.total_weight().get_ui();
  const std::size_t quota = g.quota().get_ui();
  std::vector<std::size_t> w(n);
  for (int i = 0; i < n; ++i) w[i] = g.weights()[i].get_ui();

  // cheapest[i][x] = min p(C) over C within the first i players with w(C) = x.
  std::vector<std::vector<std::optional<Rational>>> cheapest(
      n + 1, std::vector<std::optional<Rational>>(total + 1));
  cheapest[0][0] = Rational(0);
  for (int i = 1; i <= n; ++i) {
    for (std::size_t x = 0; x <= total; ++x) {
      cheapest[i][x] = cheapest[i - 1][x];
      if (x >= w[i - 1] && cheapest[i - 1][x - w[i - 1]]) {
        Rational cand = p[i - 1] + *cheapest[i - 1][x - w[i - 1]];
        if (!cheapest[i][x] || cand < *cheapest[i][x]) cheapest[i][x] = std::move(cand);
      }
    }
  }

  std::optional<Rational> best;
  std::size_t best_weight = 0;
  for (std::size_t x = quota; x <= total; ++x) {
    if (cheapest[n][x] && (!best || *cheapest[n][x] < *best)) {
      best = cheapest[n][x];
      best_weight = x;
    }
  }
  // w(I) >= q, so some winning coalition is always reachable.
  Rational deficit = Rational(1) - *best;
  if (deficit.sign() <= 0) return {Rational(0), Coalition()};

  Coalition witness;
  std::size_t x = best_weight;
  for (int i = n; i >= 1; --i) {
    if (x >= w[i - 1] && cheapest[i - 1][x - w[i - 1]] &&
        p[i - 1] + *cheapest[i - 1][x - w[i - 1]] == *cheapest[i][x]) {
      witness = witness.with(i - 1);
      x -= w[i - 1];
    }
  }
  return {std::move(deficit), witness};
}

DeficitReport max_deficit(const Game& g, const SuperImputation& p) {
  if (g.is_wvg()) {
    const auto& wvg = g.wvg();
    const BigInt cells = BigInt(g.players() + 1) * BigInt(wvg.total_weight() + 1);
    if (wvg.total_weight().fits_ulong_p() && cells <= BigInt(kDeficitTableCellCap))
      return max_deficit_wvg_dp(wvg, p);
  }
  if (g.players() <= kEnumerationCap) return max_deficit_brute(g, p);
  throw ResourceError("instance too large for exact deficit computation; use the FPTAS");
}

bool is_stable(const Game& g, const SuperImputation& p) {
  return max_deficit(g, p).max_deficit.sign() <= 0;
}

bool cs_core_membership(const Game& g, const CoalitionStructure& cs,
                        const std::vector<Rational>& deltas, const SuperImputation& p) {
  AdjustedGame adjusted = adjust_game_cs(g, cs, deltas);
  if (!is_imputation(adjusted, cs, p))
    throw PreconditionError("payoff vector is not an imputation for the adjusted structure");
  // The parts are paid their adjusted value exactly and every other coalition
  // keeps its base value, so stability against the base game decides.
  return is_stable(g, p);
}

std::vector<std::pair<Coalition, Rational>> essential_coalition_rows(const Game& g) {
  const int n = g.players();
  if (n > kEnumerationCap)
    throw ResourceError("coalition constraint enumeration is capped at " +
                        std::to_string(kEnumerationCap) + " players");
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Rational> best(size);  // max value over subsets
  std::vector<std::pair<Coalition, Rational>> rows;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    Rational v = g.value(Coalition::from_mask(mask));
    Rational dominated(0);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const Rational& sub = best[mask & ~(m & -m)];
      if (sub > dominated) dominated = sub;
    }
    if (v.sign() > 0 && v > dominated) rows.emplace_back(Coalition::from_mask(mask), v);
    best[mask] = std::max(v, dominated);
  }
  return rows;
}

bool is_superadditive_brute(const Game& g) {
  const int n = g.players();
  if (n > kEnumerationCap)
    throw ResourceError("super-additivity check is capped at " + std::to_string(kEnumerationCap) +
                        " players");
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Rational> val(size);
  for (std::uint64_t mask = 1; mask < size; ++mask)
    val[mask] = g.value(Coalition::from_mask(mask));
  for (std::uint64_t s = 1; s < size; ++s) {
    const std::uint64_t comp = (size - 1) & ~s;
    for (std::uint64_t t = comp; t != 0; t = (t - 1) & comp)
      if (val[s] + val[t] > val[s | t]) return false;
  }
  return true;
}

bool is_anonymous_brute(const Game& g) {
  const int n = g.players();
  if (n > kEnumerationCap)
    throw ResourceError("anonymity check is capped at " + std::to_string(kEnumerationCap) +
                        " players");
  std::vector<std::optional<Rational>> by_size(n + 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Coalition c = Coalition::from_mask(mask);
    Rational v = g.value(c);
    auto& slot = by_size[c.count()];
    if (!slot)
      slot = std::move(v);
    else if (*slot != v)
      return false;
  }
  return true;
}

Rational least_core_value(const Game& g) {
  const int n = g.players();
  const Rational grand = g.grand_value();

  // Variables p_0..p_{n-1}, eps; minimize eps over payoff vectors that
  // distribute v(I) exactly (p >= 0), subject to eps >= v(C) - p(C) for
  // every coalition. Nonnegativity rather than individual rationality keeps
  // the minimum defined for every game and matches how the least core is
  // used against the cost of stability.
  LinearProgram lp;
  lp.objective.assign(n + 1, Rational(0));
  lp.objective[n] = Rational(1);
  lp.lower_bounds.resize(n + 1);
  for (int i = 0; i < n; ++i) lp.lower_bounds[i] = Rational(0);
  lp.lower_bounds[n] = std::nullopt;

  LinearConstraint budget;
  budget.coeffs.assign(n + 1, Rational(1));
  budget.coeffs[n] = Rational(0);
  budget.rel = Relation::Equal;
  budget.rhs = grand;
  lp.constraints.push_back(std::move(budget));

  LinearConstraint empty_deficit;  // the empty coalition pins eps >= 0
  empty_deficit.coeffs.assign(n + 1, Rational(0));
  empty_deficit.coeffs[n] = Rational(1);
  empty_deficit.rel = Relation::GreaterEq;
  empty_deficit.rhs = Rational(0);
  lp.constraints.push_back(std::move(empty_deficit));

  auto coalition_cut = [n, &g](const Coalition& c) {
    LinearConstraint cut;
    cut.coeffs.assign(n + 1, Rational(0));
    for (int i : c.members()) cut.coeffs[i] = Rational(1);
    cut.coeffs[n] = Rational(1);
    cut.rel = Relation::GreaterEq;
    cut.rhs = g.value(c);
    return cut;
  };

  if (g.is_wvg()) {
    SeparationOracle oracle = [&](const std::vector<Rational>& x) -> std::optional<LinearConstraint> {
      SuperImputation p(std::vector<Rational>(x.begin(), x.begin() + n));
      DeficitReport rep = max_deficit(g, p);
      if (rep.max_deficit > x[n]) return coalition_cut(rep.witness);
      return std::nullopt;
    };
    SeparationSolve run = solve_with_separation(std::move(lp), oracle);
    return run.solution.objective_value;
  }

  for (const auto& [c, v] : essential_coalition_rows(g)) lp.constraints.push_back(coalition_cut(c));
  LpSolution sol = simplex_min(lp);
  return sol.objective_value;
}

}  // namespace costab
