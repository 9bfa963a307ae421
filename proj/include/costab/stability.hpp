#pragma once

#include <utility>
#include <vector>

#include "costab/game.hpp"
#include "costab/rational.hpp"

namespace costab {

/// Weight-indexed deficit tables are refused beyond this many cells.
inline constexpr long kDeficitTableCellCap = 4'000'000;

/// Maximum deficit d(G,p) = max_C (v(C) - p(C)) together with a coalition
/// attaining it. The empty coalition pins the maximum at >= 0.
struct DeficitReport {
  Rational max_deficit;
  Coalition witness;
};

/// Players without whom no coalition wins. The game must be simple; for
/// tabular games this is verified (values in {0,1}, increasing).
std::vector<int> veto_agents(const Game& g);

/// A simple game has a nonempty core iff it has a veto agent.
bool simple_core_nonempty(const Game& g);

/// Exhaustive maximum over all 2^n coalitions; ties go to the smallest
/// bit-set. Refuses n above the enumeration cap.
template <GameLike G>
DeficitReport max_deficit_brute(const G& g, const SuperImputation& p) {
  const int n = g.players();
  if (n > kEnumerationCap)
    throw ResourceError("deficit enumeration is capped at " + std::to_string(kEnumerationCap) +
                        " players");
  if (p.size() != n) throw DomainError("payoff size does not match the game");
  DeficitReport report{Rational(0), Coalition()};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Coalition c = Coalition::from_mask(mask);
    Rational d = g.value(c) - p.total(c);
    if (d > report.max_deficit) {
      report.max_deficit = std::move(d);
      report.witness = c;
    }
  }
  return report;
}

/// Pseudo-polynomial deficit for weighted voting games: tabulates the minimum
/// payment of a coalition per exact weight and reads off the cheapest winning
/// coalition. Exact for arbitrary rational payoffs.
DeficitReport max_deficit_wvg_dp(const WeightedVotingGame& g, const SuperImputation& p);

/// Dispatch: weight DP for voting games within the table budget, exhaustive
/// enumeration otherwise.
DeficitReport max_deficit(const Game& g, const SuperImputation& p);

/// p(C) >= v(C) for every coalition.
bool is_stable(const Game& g, const SuperImputation& p);

/// Whether (cs, p) lies in the CS-core of the adjusted game G(deltas).
/// Throws PreconditionError when p is not an imputation for (cs, G(deltas));
/// that is a different failure than instability.
bool cs_core_membership(const Game& g, const CoalitionStructure& cs,
                        const std::vector<Rational>& deltas, const SuperImputation& p);

/// Least-core value: the smallest achievable maximum deficit over payoff
/// vectors that distribute v(I) exactly (p >= 0), with the deficit ranging
/// over all of 2^I. The empty coalition pins the value at >= 0.
Rational least_core_value(const Game& g);

/// Coalition constraint rows (C, v(C)) with subset-dominated rows removed:
/// keeps C iff v(C) > 0 and v(C) exceeds the value of every proper subset.
/// Under nonnegative payoffs the dropped rows are implied by the kept ones,
/// so "p(C) >= v(C) for the kept rows" still means stability.
std::vector<std::pair<Coalition, Rational>> essential_coalition_rows(const Game& g);

/// v(S) + v(T) <= v(S u T) for all disjoint S, T, by enumeration.
bool is_superadditive_brute(const Game& g);

/// v depends only on |C|, by enumeration.
bool is_anonymous_brute(const Game& g);

}  // namespace costab
