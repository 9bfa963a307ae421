#pragma once

#include <optional>
#include <string>
#include <vector>

#include "costab/cos.hpp"
#include "costab/game.hpp"
#include "costab/lp.hpp"

namespace costab {

inline constexpr long kFptasTableCellCap = 8'000'000;

/// Grid parameters of the additive approximation scheme:
/// X = 2*ceil(1/eps), eps' = 1/X (so eps/4 <= eps' <= eps/2 for eps <= 1),
/// payoffs are rounded up to multiples of eps'/n.
struct FptasParams {
  Rational epsilon;
  BigInt x;
  Rational epsilon_prime;
  Rational grid_step;
  int players = 0;
  BigInt last_index;  // n*X: index of the last feasibility program

  static FptasParams make(const Rational& epsilon, int players);
};

/// Answer of the rounding oracle for a candidate solution of the k-th
/// feasibility program: either a constraint of that program violated by the
/// candidate, or the rounded candidate as a feasible point of program k+1.
struct RoundedSeparation {
  std::optional<LinearConstraint> violated;
  std::optional<Coalition> violated_coalition;  // set when the cut is a coalition row
  std::optional<std::vector<Rational>> rounded_feasible;
};

RoundedSeparation rounded_separation(const WeightedVotingGame& g, const SuperImputation& p,
                                     const FptasParams& params, const BigInt& k);

/// Additive scheme: CoS(G) <= result <= CoS(G) + eps.
Rational additive_fptas(const WeightedVotingGame& g, const Rational& epsilon);

/// Additive scheme against a fixed structure's total value:
/// CoS(CS,G) <= result <= CoS(CS,G) + eps.
Rational additive_fptas_cs(const WeightedVotingGame& g, const CoalitionStructure& cs,
                           const Rational& epsilon);

/// Multiplicative scheme: returns 0 exactly when a veto agent exists,
/// otherwise a value in [CoS(G), (1+eps)*CoS(G)].
Rational fptas(const WeightedVotingGame& g, const Rational& epsilon);

/// p*_i = min{1, w_i/q}. Always stable; its total is at most twice the
/// optimal adjusted gains v(I) + CoS(G).
SuperImputation proportional_payoff(const WeightedVotingGame& g);

struct BoundCheck {
  std::string name;
  Rational lhs;
  std::string relation;
  Rational rhs;
  bool pass = false;
};

/// Exact CoS together with every bound applicable to the instance, each
/// carrying the exact quantities on both sides.
struct BoundsReport {
  int players = 0;
  Rational grand_value;
  CosResult cos;
  std::optional<Rational> least_core;  // absent when no imputations exist
  Rational optimal_welfare;
  std::vector<Coalition> optimal_structure;
  std::vector<BoundCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

BoundsReport bounds_report(const Game& g);

}  // namespace costab
