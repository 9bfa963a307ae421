#include "costab/cos.hpp"

#include <cassert>
#include <functional>
#include <optional>

#include "costab/lp.hpp"
#include "costab/stability.hpp"

namespace costab {

const char* to_string(CosMethod m) {
  switch (m) {
    case CosMethod::ClosedForm: return "closed_form";
    case CosMethod::FullLp: return "full_lp";
    case CosMethod::ConstraintGeneration: return "constraint_generation";
  }
  return "unknown";
}

namespace {

struct StableMin {
  Rational total;
  SuperImputation witness;
  int cuts = 0;
  CosMethod method = CosMethod::FullLp;
};

// Minimum total payment of a stable super-imputation: min sum p subject to
// p(C) >= v(C) for every coalition, p >= 0. Voting games go through the
// deficit oracle, tabular games through the enumerated program.
StableMin stable_min_total(const Game& g) {
  const int n = g.players();
  LinearProgram lp = LinearProgram::minimize(std::vector<Rational>(n, Rational(1)));

  if (g.is_wvg()) {
    const WeightedVotingGame& wvg = g.wvg();
    SeparationOracle oracle =
        [&wvg, n](const std::vector<Rational>& x) -> std::optional<LinearConstraint> {
      DeficitReport rep = max_deficit_wvg_dp(wvg, SuperImputation(x));
      if (rep.max_deficit.sign() <= 0) return std::nullopt;
      // A positive deficit under nonnegative payoffs means the witness wins.
      LinearConstraint cut;
      cut.coeffs.assign(n, Rational(0));
      for (int i : rep.witness.members()) cut.coeffs[i] = Rational(1);
      cut.rel = Relation::GreaterEq;
      cut.rhs = Rational(1);
      return cut;
    };
    SeparationSolve run = solve_with_separation(std::move(lp), oracle);
    return {run.solution.objective_value, SuperImputation(run.solution.values),
            run.cuts_generated, CosMethod::ConstraintGeneration};
  }

  for (const auto& [c, v] : essential_coalition_rows(g)) {
    LinearConstraint row;
    row.coeffs.assign(n, Rational(0));
    for (int i : c.members()) row.coeffs[i] = Rational(1);
    row.rel = Relation::GreaterEq;
    row.rhs = v;
    lp.constraints.push_back(std::move(row));
  }
  LpSolution sol = simplex_min(lp);
  return {sol.objective_value, SuperImputation(sol.values), 0, CosMethod::FullLp};
}

}  // namespace

CosResult cos_exact(const TabularGame& g) {
  Game game(g);
  StableMin sm = stable_min_total(game);
  Rational cos = sm.total - game.grand_value();
  assert(cos.sign() >= 0);
  return {std::move(cos), std::move(sm.witness), sm.cuts, sm.method};
}

CosResult cos_exact_wvg(const WeightedVotingGame& g) {
  Game game(g);
  StableMin sm = stable_min_total(game);
  Rational cos = sm.total - game.grand_value();
  assert(cos.sign() >= 0);
  return {std::move(cos), std::move(sm.witness), sm.cuts, sm.method};
}

Rational cos_uniform(int n, const BigInt& w, const BigInt& q) {
  if (n < 1) throw DomainError("at least one player required");
  if (w < 1 || q < 1) throw DomainError("uniform closed form needs positive weight and quota");
  if (q > BigInt(n) * w) throw DomainError("grand coalition must win: q <= n*w required");
  BigInt seats;  // ceil(q / w) = minimum size of a winning coalition
  mpz_cdiv_q(seats.get_mpz_t(), q.get_mpz_t(), w.get_mpz_t());
  return Rational(BigInt(n), seats) - Rational(1);
}

CosResult cos_cs(const Game& g, const CoalitionStructure& cs) {
  Rational base = cs_value(g, cs);
  StableMin sm = stable_min_total(g);
  Rational cos = sm.total - base;  // >= 0: stable payments cover every part
  assert(cos.sign() >= 0);
  return {std::move(cos), std::move(sm.witness), sm.cuts, sm.method};
}

namespace {

// First (lexicographically, as a sorted member list) subset P of S that
// contains S's smallest element and satisfies value(P) + best[S\P] = best[S].
template <class V, class ValueFn>
std::uint64_t lex_first_part(std::uint64_t s, const std::vector<V>& best, const ValueFn& value) {
  std::vector<int> elems;
  for (std::uint64_t m = s; m != 0; m &= m - 1) elems.push_back(std::countr_zero(m));
  const V& target = best[s];
  std::function<std::optional<std::uint64_t>(std::uint64_t, std::size_t)> dfs =
      [&](std::uint64_t cur, std::size_t from) -> std::optional<std::uint64_t> {
    if (value(cur) + best[s & ~cur] == target) return cur;
    for (std::size_t idx = from; idx < elems.size(); ++idx)
      if (auto hit = dfs(cur | (std::uint64_t{1} << elems[idx]), idx + 1)) return hit;
    return std::nullopt;
  };
  auto hit = dfs(std::uint64_t{1} << elems[0], 1);
  assert(hit);  // the DP optimum decomposes by construction
  return *hit;
}

template <class V, class ValueFn>
CoalitionStructure lex_least_optimal_structure(int n, const std::vector<V>& best,
                                               const ValueFn& value) {
  std::vector<Coalition> parts;
  std::uint64_t s = Coalition::full(n).mask();
  while (s != 0) {
    std::uint64_t part = lex_first_part(s, best, value);
    parts.push_back(Coalition::from_mask(part));
    s &= ~part;
  }
  return CoalitionStructure(std::move(parts), n);
}

}  // namespace

std::pair<Rational, CoalitionStructure> optimal_cs_value(const Game& g) {
  const int n = g.players();
  const int cap = g.is_wvg() ? kStructureSearchCapWvg : kStructureSearchCapTabular;
  if (n > cap)
    throw ResourceError("structure search is capped at " + std::to_string(cap) +
                        " players for this game kind");
  const std::uint64_t size = std::uint64_t{1} << n;

  if (g.is_wvg()) {
    const WeightedVotingGame& wvg = g.wvg();
    std::vector<BigInt> wsum(size);
    std::vector<char> win(size, 0);
    for (std::uint64_t mask = 1; mask < size; ++mask) {
      int low = std::countr_zero(mask);
      wsum[mask] = wsum[mask & (mask - 1)] + wvg.weights()[low];
      win[mask] = wsum[mask] >= wvg.quota() ? 1 : 0;
    }
    // best[S] = max number of disjoint winning coalitions inside S.
    std::vector<int> best(size, 0);
    for (std::uint64_t mask = 1; mask < size; ++mask) {
      const std::uint64_t low = mask & -mask;
      const std::uint64_t rest = mask ^ low;
      int b = 0;
      for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
        const std::uint64_t part = sub | low;
        int cand = win[part] + best[mask ^ part];
        if (cand > b) b = cand;
        if (sub == 0) break;
      }
      best[mask] = b;
    }
    auto value = [&win](std::uint64_t mask) { return static_cast<int>(win[mask]); };
    return {Rational(best[size - 1]), lex_least_optimal_structure(n, best, value)};
  }

  std::vector<Rational> val(size);
  for (std::uint64_t mask = 1; mask < size; ++mask)
    val[mask] = g.value(Coalition::from_mask(mask));
  std::vector<Rational> best(size);
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    const std::uint64_t low = mask & -mask;
    const std::uint64_t rest = mask ^ low;
    Rational b;
    bool first = true;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint64_t part = sub | low;
      Rational cand = val[part] + best[mask ^ part];
      if (first || cand > b) {
        b = std::move(cand);
        first = false;
      }
      if (sub == 0) break;
    }
    best[mask] = std::move(b);
  }
  auto value = [&val](std::uint64_t mask) { return val[mask]; };
  return {best[size - 1], lex_least_optimal_structure(n, best, value)};
}

CosCsResult cos_with_cs(const Game& g) {
  auto [welfare, structure] = optimal_cs_value(g);
  CosResult result = cos_cs(g, structure);
  return {std::move(result), std::move(structure)};
}

CosResult cos_of(const Game& g) {
  if (g.is_wvg()) {
    const WeightedVotingGame& wvg = g.wvg();
    if (wvg.uniform() && wvg.weights()[0] >= 1 && wvg.quota() >= 1) {
      const int n = wvg.players();
      Rational cos = cos_uniform(n, wvg.weights()[0], wvg.quota());
      BigInt seats;
      mpz_cdiv_q(seats.get_mpz_t(), wvg.quota().get_mpz_t(), wvg.weights()[0].get_mpz_t());
      SuperImputation witness(std::vector<Rational>(n, Rational(BigInt(1), seats)));
      return {std::move(cos), std::move(witness), 0, CosMethod::ClosedForm};
    }
    return cos_exact_wvg(wvg);
  }
  return cos_exact(g.tabular());
}

}  // namespace costab
