#include "costab/generators.hpp"

#include <stdexcept>

namespace costab {

WeightedVotingGame gen_uniform(int n, const BigInt& w, const BigInt& q) {
  if (n < 1) throw DomainError("at least one player required");
  if (w < 1) throw DomainError("uniform weight must be positive");
  if (q > BigInt(n) * w) throw DomainError("grand coalition must win: q <= n*w required");
  return WeightedVotingGame(std::vector<BigInt>(n, w), q);
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

ProjectivePlane projective_plane(int order) {
  if (!is_prime(order)) throw DomainError("projective plane order must be prime");
  const int p = order;
  const int n = p * p + p + 1;
  if (n > Coalition::kMaxPlayers)
    throw ResourceError("projective plane of order " + std::to_string(order) +
                        " exceeds the supported player count");

  // Canonical homogeneous coordinates over F_p: (1,a,b), (0,1,a), (0,0,1).
  struct Triple {
    int x, y, z;
  };
  std::vector<Triple> coords;
  coords.reserve(n);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) coords.push_back({1, a, b});
  for (int a = 0; a < p; ++a) coords.push_back({0, 1, a});
  coords.push_back({0, 0, 1});

  ProjectivePlane plane;
  plane.order = p;
  plane.points = n;
  plane.lines.reserve(n);
  for (const Triple& line : coords) {  // lines use the same coordinates by duality
    Coalition c;
    for (int i = 0; i < n; ++i) {
      const Triple& pt = coords[i];
      if ((line.x * pt.x + line.y * pt.y + line.z * pt.z) % p == 0) c = c.with(i);
    }
    plane.lines.push_back(c);
  }

  // The axioms the tight-instance argument relies on.
  std::vector<int> degree(n, 0);
  for (const Coalition& line : plane.lines) {
    if (line.count() != p + 1) throw std::logic_error("projective plane: line size mismatch");
    for (int i : line.members()) ++degree[i];
  }
  for (int i = 0; i < n; ++i)
    if (degree[i] != p + 1) throw std::logic_error("projective plane: point degree mismatch");
  for (std::size_t i = 0; i < plane.lines.size(); ++i)
    for (std::size_t j = i + 1; j < plane.lines.size(); ++j)
      if (plane.lines[i].intersected(plane.lines[j]).count() != 1)
        throw std::logic_error("projective plane: lines must meet in exactly one point");

  return plane;
}

TabularGame gen_projective_plane(int order) {
  ProjectivePlane plane = projective_plane(order);
  if (plane.points > kTabularPlayerCap)
    throw ResourceError("projective-plane game of order " + std::to_string(order) +
                        " exceeds the tabular player cap");
  const int n = plane.points;
  std::map<Coalition, Rational> entries;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    for (const Coalition& line : plane.lines) {
      if ((mask & line.mask()) == line.mask()) {
        entries.emplace(Coalition::from_mask(mask), Rational(1));
        break;
      }
    }
  }
  return TabularGame(n, std::move(entries));
}

WeightedVotingGame gen_anonymous_majority(int k) {
  if (k < 1) throw DomainError("majority parameter must be at least 1");
  const int n = 2 * k + 1;
  if (n > Coalition::kMaxPlayers)
    throw ResourceError("majority game exceeds the supported player count");
  return WeightedVotingGame(std::vector<BigInt>(n, 1), BigInt(k + 1));
}

PartitionInstance gen_partition_wvg(const std::vector<BigInt>& a) {
  if (a.empty()) throw DomainError("at least one integer required");
  BigInt sum = 0;
  for (const BigInt& ai : a) {
    if (ai < 0) throw DomainError("list entries must be nonnegative");
    sum += ai;
  }
  if (sum % 2 != 0) throw DomainError("list must have an even sum");
  BigInt half = sum / 2;
  if (half < 1) throw DomainError("half-sum must be at least 1");
  Rational delta(half - 1, half + 1);
  return {WeightedVotingGame(a, half), std::move(delta)};
}

TabularGame gen_all_nonempty_win(int n) {
  if (n < 1) throw DomainError("at least one player required");
  if (n > kTabularPlayerCap)
    throw ResourceError("all-nonempty-win game exceeds the tabular player cap");
  std::map<Coalition, Rational> entries;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
    entries.emplace(Coalition::from_mask(mask), Rational(1));
  return TabularGame(n, std::move(entries));
}

std::map<std::string, Game> fixtures() {
  std::map<std::string, Game> games;
  games.emplace("ex54", WeightedVotingGame({1, 1, 1}, 2));
  games.emplace("ex55", WeightedVotingGame({8, 8, 9, 9, 1}, 10));
  games.emplace("tight2approx", WeightedVotingGame({2, 2}, 3));  // [q-1, q-1; q], q = 3
  return games;
}

}  // namespace costab
