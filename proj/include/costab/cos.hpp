#pragma once

#include <utility>
#include <vector>

#include "costab/game.hpp"
#include "costab/rational.hpp"

namespace costab {

/// Welfare-maximizing structure search caps (the problem is NP-hard even for
/// unary weights).
inline constexpr int kStructureSearchCapWvg = 16;
inline constexpr int kStructureSearchCapTabular = 12;

enum class CosMethod { ClosedForm, FullLp, ConstraintGeneration };

const char* to_string(CosMethod m);

/// Cost of stability together with a stable super-imputation of the adjusted
/// game that attains it.
struct CosResult {
  Rational cos;
  SuperImputation witness;
  int cuts_generated = 0;
  CosMethod method = CosMethod::FullLp;
};

/// Exact CoS by solving the stability program with every coalition
/// constraint enumerated.
CosResult cos_exact(const TabularGame& g);

/// Exact CoS by constraint generation with the weight-table deficit oracle.
CosResult cos_exact_wvg(const WeightedVotingGame& g);

/// Closed form for uniform weights: n / ceil(q/w) - 1.
Rational cos_uniform(int n, const BigInt& w, const BigInt& q);

/// Cost of stabilizing a fixed coalition structure; the witness splits into
/// per-part supplements p(C^j) - v(C^j) >= 0.
CosResult cos_cs(const Game& g, const CoalitionStructure& cs);

/// Maximum total value over all coalition structures, with the
/// lexicographically least structure attaining it.
std::pair<Rational, CoalitionStructure> optimal_cs_value(const Game& g);

struct CosCsResult {
  CosResult result;
  CoalitionStructure structure;
};

/// Cost of stability over all coalition structures: stabilize a
/// welfare-maximizing structure.
CosCsResult cos_with_cs(const Game& g);

/// Dispatcher: closed form for uniform voting games, constraint generation
/// for other voting games, the fully enumerated program for tabular games.
CosResult cos_of(const Game& g);

}  // namespace costab
