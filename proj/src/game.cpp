#include "costab/game.hpp"

namespace costab {

WeightedVotingGame::WeightedVotingGame(std::vector<BigInt> weights, BigInt quota)
    : weights_(std::move(weights)), quota_(std::move(quota)), total_weight_(0) {
  if (weights_.empty()) throw DomainError("a game needs at least one player");
  if (players() > Coalition::kMaxPlayers)
    throw ResourceError("weighted voting games support at most 64 players");
  for (const BigInt& w : weights_) {
    if (w < 0) throw DomainError("weights must be nonnegative");
    total_weight_ += w;
  }
  if (quota_ < 0) throw DomainError("quota must be nonnegative");
  if (total_weight_ < quota_) throw DomainError("grand coalition must win: w(I) >= q required");
}

BigInt WeightedVotingGame::weight(const Coalition& c) const {
  if (!c.within(players())) throw DomainError("coalition contains players outside the game");
  BigInt sum = 0;
  for (std::uint64_t m = c.mask(); m != 0; m &= m - 1)
    sum += weights_[std::countr_zero(m)];
  return sum;
}

bool WeightedVotingGame::wins(const Coalition& c) const {
  if (c.empty()) return false;  // v(empty) = 0 even when q = 0
  return weight(c) >= quota_;
}

bool WeightedVotingGame::uniform() const {
  for (const BigInt& w : weights_)
    if (w != weights_[0]) return false;
  return true;
}

TabularGame::TabularGame(int players, std::map<Coalition, Rational> entries) : players_(players) {
  if (players_ < 1) throw DomainError("a game needs at least one player");
  if (players_ > kTabularPlayerCap)
    throw ResourceError("tabular games are capped at " + std::to_string(kTabularPlayerCap) + " players");
  for (auto& [c, v] : entries) {
    if (!c.within(players_)) throw DomainError("coalition contains players outside the game");
    if (v.sign() < 0) throw DomainError("coalition values must be nonnegative");
    if (c.empty() && !v.is_zero()) throw DomainError("v(empty) must be 0");
    if (!c.empty() && !v.is_zero()) entries_.emplace(c, v);  // zero entries are the default
  }
}

Rational TabularGame::value(const Coalition& c) const {
  if (!c.within(players_)) throw DomainError("coalition contains players outside the game");
  auto it = entries_.find(c);
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational TabularGame::max_value() const {
  Rational best(0);
  for (const auto& [c, v] : entries_)
    if (v > best) best = v;
  return best;
}

CoalitionStructure::CoalitionStructure(std::vector<Coalition> parts, int players)
    : parts_(std::move(parts)), players_(players) {
  if (players_ < 1 || players_ > Coalition::kMaxPlayers)
    throw DomainError("player count out of range");
  std::uint64_t seen = 0;
  for (const Coalition& part : parts_) {
    if (part.empty()) throw DomainError("structure parts must be nonempty");
    if (!part.within(players_)) throw DomainError("structure part contains players outside the game");
    if (seen & part.mask()) throw DomainError("structure parts must be pairwise disjoint");
    seen |= part.mask();
  }
  if (seen != Coalition::full(players_).mask())
    throw DomainError("structure parts must cover every player");
}

SuperImputation::SuperImputation(std::vector<Rational> payoffs) : payoffs_(std::move(payoffs)) {
  if (payoffs_.empty()) throw DomainError("payoff vector must not be empty");
  for (const Rational& p : payoffs_)
    if (p.sign() < 0) throw DomainError("payoffs must be nonnegative");
}

Rational SuperImputation::total() const {
  Rational sum(0);
  for (const Rational& p : payoffs_) sum += p;
  return sum;
}

Rational SuperImputation::total(const Coalition& c) const {
  if (!c.within(size())) throw DomainError("coalition contains players outside the payoff vector");
  Rational sum(0);
  for (std::uint64_t m = c.mask(); m != 0; m &= m - 1)
    sum += payoffs_[std::countr_zero(m)];
  return sum;
}

AdjustedGame AdjustedGame::grand(Game base, Rational delta) {
  if (delta.sign() < 0) throw DomainError("supplemental payment must be nonnegative");
  return AdjustedGame(std::move(base), std::nullopt, {std::move(delta)});
}

AdjustedGame AdjustedGame::with_structure(Game base, CoalitionStructure cs, std::vector<Rational> deltas) {
  if (cs.players() != base.players())
    throw DomainError("structure does not match the game's player set");
  if (static_cast<int>(deltas.size()) != cs.size())
    throw DomainError("one supplement per structure part required");
  for (const Rational& d : deltas)
    if (d.sign() < 0) throw DomainError("supplemental payments must be nonnegative");
  return AdjustedGame(std::move(base), std::move(cs), std::move(deltas));
}

Rational AdjustedGame::value(const Coalition& c) const {
  Rational v = base_.value(c);
  if (!cs_) {
    if (c == Coalition::full(players())) v += deltas_[0];
    return v;
  }
  const auto& parts = cs_->parts();
  for (std::size_t j = 0; j < parts.size(); ++j)
    if (c == parts[j]) return v + deltas_[j];
  return v;
}

const Rational& AdjustedGame::grand_delta() const {
  if (cs_) throw DomainError("adjusted game is in coalition-structure form");
  return deltas_[0];
}

const CoalitionStructure& AdjustedGame::structure() const {
  if (!cs_) throw DomainError("adjusted game is in grand-coalition form");
  return *cs_;
}

Rational coalition_value(const Game& g, const Coalition& c) {
  if (!c.within(g.players())) throw DomainError("coalition contains players outside the game");
  return g.value(c);
}

Rational cs_value(const Game& g, const CoalitionStructure& cs) {
  if (cs.players() != g.players()) throw DomainError("structure does not match the game's player set");
  Rational sum(0);
  for (const Coalition& part : cs.parts()) sum += g.value(part);
  return sum;
}

AdjustedGame adjust_game(Game g, Rational delta) {
  return AdjustedGame::grand(std::move(g), std::move(delta));
}

AdjustedGame adjust_game_cs(Game g, CoalitionStructure cs, std::vector<Rational> deltas) {
  return AdjustedGame::with_structure(std::move(g), std::move(cs), std::move(deltas));
}

}  // namespace costab
