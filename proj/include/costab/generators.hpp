#pragma once

#include <map>
#include <string>
#include <vector>

#include "costab/game.hpp"

namespace costab {

/// [w, w, ..., w; q] with n players.
WeightedVotingGame gen_uniform(int n, const BigInt& w, const BigInt& q);

/// Point/line incidence of the projective plane of prime order, built from
/// homogeneous coordinates over the prime field. Construction self-checks
/// the axioms it is used for: every line has order+1 points, every point
/// lies on order+1 lines, and any two lines meet.
struct ProjectivePlane {
  int order = 0;
  int points = 0;                // order^2 + order + 1
  std::vector<Coalition> lines;  // one coalition of point indices per line
};

ProjectivePlane projective_plane(int order);

/// Simple super-additive game on the plane's points whose winning coalitions
/// are the supersets of lines.
TabularGame gen_projective_plane(int order);

/// n = 2k+1 players, a coalition wins iff it has at least k+1 members;
/// realized as the voting game [1,...,1; k+1].
WeightedVotingGame gen_anonymous_majority(int k);

/// Reduction instance from an even-sum integer list: weights a_i, quota
/// K = sum/2, and the supplement (K-1)/(K+1). The supplemented game has an
/// empty core exactly when some sublist sums to K.
struct PartitionInstance {
  WeightedVotingGame game;
  Rational delta;
};

PartitionInstance gen_partition_wvg(const std::vector<BigInt>& a);

/// Every nonempty coalition is worth 1; CoS = n - 1.
TabularGame gen_all_nonempty_win(int n);

/// Named example games used across tests and docs.
std::map<std::string, Game> fixtures();

}  // namespace costab
