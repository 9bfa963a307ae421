#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "costab/coalition.hpp"
#include "costab/errors.hpp"
#include "costab/rational.hpp"

namespace costab {

/// Explicit characteristic functions are exponential by nature; refuse them
/// beyond this player count.
inline constexpr int kTabularPlayerCap = 20;
/// Cap for operations that walk all 2^n coalitions.
inline constexpr int kEnumerationCap = 20;

/// Simple game [w_1,...,w_n; q]: a nonempty coalition wins iff its total
/// weight reaches the quota. Weights and quota are nonnegative integers of
/// unrestricted magnitude. The grand coalition always wins (w(I) >= q).
class WeightedVotingGame {
 public:
  WeightedVotingGame(std::vector<BigInt> weights, BigInt quota);

  int players() const { return static_cast<int>(weights_.size()); }
  const std::vector<BigInt>& weights() const { return weights_; }
  const BigInt& quota() const { return quota_; }
  const BigInt& total_weight() const { return total_weight_; }

  BigInt weight(const Coalition& c) const;
  bool wins(const Coalition& c) const;
  Rational value(const Coalition& c) const { return wins(c) ? Rational(1) : Rational(0); }

  bool uniform() const;  // all weights equal

  friend bool operator==(const WeightedVotingGame&, const WeightedVotingGame&) = default;

 private:
  std::vector<BigInt> weights_;
  BigInt quota_;
  BigInt total_weight_;
};

/// Game given by an explicit coalition -> value map. Coalitions absent from
/// the map have value 0; v(empty) = 0 always. Values are nonnegative but the
/// game need not be increasing.
class TabularGame {
 public:
  TabularGame(int players, std::map<Coalition, Rational> entries);

  int players() const { return players_; }
  Rational value(const Coalition& c) const;
  /// Canonical nonzero entries, keyed by mask order.
  const std::map<Coalition, Rational>& entries() const { return entries_; }
  Rational max_value() const;

  friend bool operator==(const TabularGame&, const TabularGame&) = default;

 private:
  int players_;
  std::map<Coalition, Rational> entries_;
};

/// A coalitional game: either weighted-voting or tabular.
class Game {
 public:
  Game(WeightedVotingGame g) : g_(std::move(g)) {}  // NOLINT: implicit by design
  Game(TabularGame g) : g_(std::move(g)) {}         // NOLINT

  bool is_wvg() const { return std::holds_alternative<WeightedVotingGame>(g_); }
  const WeightedVotingGame& wvg() const {
    if (!is_wvg()) throw DomainError("expected a weighted voting game");
    return std::get<WeightedVotingGame>(g_);
  }
  const TabularGame& tabular() const {
    if (is_wvg()) throw DomainError("expected a tabular game");
    return std::get<TabularGame>(g_);
  }

  int players() const {
    return is_wvg() ? std::get<WeightedVotingGame>(g_).players() : std::get<TabularGame>(g_).players();
  }
  Rational value(const Coalition& c) const {
    return is_wvg() ? std::get<WeightedVotingGame>(g_).value(c) : std::get<TabularGame>(g_).value(c);
  }
  Rational grand_value() const { return value(Coalition::full(players())); }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::variant<WeightedVotingGame, TabularGame> g_;
};

/// Anything that exposes a player count and a coalition value function.
template <class G>
concept GameLike = requires(const G& g, const Coalition& c) {
  { g.players() } -> std::convertible_to<int>;
  { g.value(c) } -> std::convertible_to<Rational>;
};

/// Partition of {0,...,n-1} into pairwise disjoint nonempty coalitions.
class CoalitionStructure {
 public:
  CoalitionStructure(std::vector<Coalition> parts, int players);

  static CoalitionStructure grand(int players) {
    return CoalitionStructure({Coalition::full(players)}, players);
  }

  int players() const { return players_; }
  int size() const { return static_cast<int>(parts_.size()); }
  const std::vector<Coalition>& parts() const { return parts_; }
  bool is_grand() const { return parts_.size() == 1; }

  friend bool operator==(const CoalitionStructure&, const CoalitionStructure&) = default;

 private:
  std::vector<Coalition> parts_;
  int players_;
};

/// Nonnegative payoff vector, one entry per player.
class SuperImputation {
 public:
  explicit SuperImputation(std::vector<Rational> payoffs);

  int size() const { return static_cast<int>(payoffs_.size()); }
  const Rational& operator[](int i) const { return payoffs_[i]; }
  const std::vector<Rational>& payoffs() const { return payoffs_; }

  Rational total() const;
  Rational total(const Coalition& c) const;  // p(C)

  friend bool operator==(const SuperImputation&, const SuperImputation&) = default;

 private:
  std::vector<Rational> payoffs_;
};

/// Game with externally supplemented values: either the grand coalition
/// raised by a single delta, or the parts of a structure raised
/// componentwise. All other coalition values are unchanged.
class AdjustedGame {
 public:
  static AdjustedGame grand(Game base, Rational delta);
  static AdjustedGame with_structure(Game base, CoalitionStructure cs, std::vector<Rational> deltas);

  int players() const { return base_.players(); }
  Rational value(const Coalition& c) const;

  const Game& base() const { return base_; }
  bool grand_form() const { return !cs_.has_value(); }
  const Rational& grand_delta() const;
  const CoalitionStructure& structure() const;
  const std::vector<Rational>& deltas() const { return deltas_; }

 private:
  AdjustedGame(Game base, std::optional<CoalitionStructure> cs, std::vector<Rational> deltas)
      : base_(std::move(base)), cs_(std::move(cs)), deltas_(std::move(deltas)) {}

  Game base_;
  std::optional<CoalitionStructure> cs_;  // empty => grand form
  std::vector<Rational> deltas_;          // one entry in grand form
};

/// v(C); validates that the coalition fits the game's player set.
Rational coalition_value(const Game& g, const Coalition& c);

/// Sum of part values v(CS).
Rational cs_value(const Game& g, const CoalitionStructure& cs);

AdjustedGame adjust_game(Game g, Rational delta);
AdjustedGame adjust_game_cs(Game g, CoalitionStructure cs, std::vector<Rational> deltas);

/// True iff p is an imputation for the structure: p >= 0 and p(C^j) = v(C^j)
/// exactly, for every part. For the grand structure the classical definition
/// additionally requires individual rationality p_i >= v({i}).
template <GameLike G>
bool is_imputation(const G& g, const CoalitionStructure& cs, const SuperImputation& p) {
  if (cs.players() != g.players() || p.size() != g.players())
    throw DomainError("structure or payoff size does not match the game");
  for (const Coalition& part : cs.parts())
    if (p.total(part) != g.value(part)) return false;
  if (cs.is_grand()) {
    for (int i = 0; i < g.players(); ++i)
      if (p[i] < g.value(Coalition::single(i))) return false;
  }
  return true;
}

}  // namespace costab
