#include <doctest.h>

#include <random>

#include "costab/lp.hpp"
#include "oracles.hpp"

using namespace costab;
namespace tst = costab::testing;

namespace {

LinearConstraint row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  return LinearConstraint{std::move(coeffs), rel, std::move(rhs)};
}

}  // namespace

TEST_CASE("single binding constraint") {
  LinearProgram lp = LinearProgram::minimize({Rational(1), Rational(1)});
  lp.constraints.push_back(row({Rational(1), Rational(1)}, Relation::GreaterEq, Rational(1)));
  LpSolution sol = simplex_min(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == Rational(1));
}

TEST_CASE("contradictory constraints are infeasible") {
  LinearProgram lp = LinearProgram::minimize({Rational(0)});
  lp.constraints.push_back(row({Rational(1)}, Relation::GreaterEq, Rational(1)));
  lp.constraints.push_back(row({Rational(1)}, Relation::LessEq, Rational(0)));
  CHECK(simplex_min(lp).status == LpStatus::Infeasible);
}

TEST_CASE("negative direction without constraints is unbounded") {
  LinearProgram lp = LinearProgram::minimize({Rational(-1)});
  CHECK(simplex_min(lp).status == LpStatus::Unbounded);
}

TEST_CASE("free variables and shifted lower bounds") {
  LinearProgram lp;
  lp.objective = {Rational(1)};
  lp.lower_bounds = {Rational(-5)};
  LpSolution sol = simplex_min(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == Rational(-5));

  // free variable pinned by an equality, driven negative at the optimum
  LinearProgram eq;
  eq.objective = {Rational(0), Rational(1)};
  eq.lower_bounds = {std::nullopt, Rational(0)};
  eq.constraints.push_back(row({Rational(1), Rational(1)}, Relation::Equal, Rational(-3)));
  LpSolution sol2 = simplex_min(eq);
  REQUIRE(sol2.status == LpStatus::Optimal);
  CHECK(sol2.objective_value == Rational(0));
  CHECK(sol2.values[0] == Rational(-3));

  // minimizing the free variable itself is unbounded
  LinearProgram unb;
  unb.objective = {Rational(1), Rational(0)};
  unb.lower_bounds = {std::nullopt, Rational(0)};
  unb.constraints.push_back(row({Rational(1), Rational(1)}, Relation::Equal, Rational(-3)));
  CHECK(simplex_min(unb).status == LpStatus::Unbounded);
}

TEST_CASE("fully enumerated stability program for the three-player majority game") {
  // min p1+p2+p3 subject to p(C) >= v(C) for all eight coalitions of [1,1,1;2]
  LinearProgram lp = LinearProgram::minimize({Rational(1), Rational(1), Rational(1)});
  for (std::uint64_t mask = 1; mask < 8; ++mask) {
    std::vector<Rational> coeffs(3, Rational(0));
    int members = 0;
    for (int i = 0; i < 3; ++i)
      if ((mask >> i) & 1) {
        coeffs[i] = Rational(1);
        ++members;
      }
    lp.constraints.push_back(
        row(std::move(coeffs), Relation::GreaterEq, Rational(members >= 2 ? 1 : 0)));
  }
  LpSolution sol = simplex_min(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == Rational(3, 2));  // matches the uniform closed form

  auto oracle = tst::lp_min_vertex_enum(lp);
  REQUIRE(oracle);
  CHECK(oracle->first == Rational(3, 2));
}

TEST_CASE("simplex agrees with vertex enumeration on random programs") {
  std::mt19937_64 rng(21);
  int optimal_seen = 0, infeasible_seen = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = static_cast<int>(tst::draw(rng, 1, 4));
    LinearProgram lp = LinearProgram::minimize({});
    lp.objective.clear();
    for (int j = 0; j < n; ++j) lp.objective.emplace_back(tst::draw(rng, 0, 4));
    lp.lower_bounds.assign(n, Rational(0));
    const int m = static_cast<int>(tst::draw(rng, 1, 7));
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> coeffs;
      for (int j = 0; j < n; ++j) coeffs.emplace_back(tst::draw(rng, -2, 3));
      Relation rel = tst::draw(rng, 0, 3) == 0 ? Relation::LessEq : Relation::GreaterEq;
      lp.constraints.push_back(row(std::move(coeffs), rel, Rational(tst::draw(rng, -2, 4))));
    }
    LpSolution sol = simplex_min(lp);
    auto oracle = tst::lp_min_vertex_enum(lp);
    // nonnegative objective over bounded-below variables: never unbounded
    REQUIRE(sol.status != LpStatus::Unbounded);
    if (sol.status == LpStatus::Optimal) {
      ++optimal_seen;
      REQUIRE(oracle);
      CHECK(sol.objective_value == oracle->first);
      for (const auto& c : lp.constraints) CHECK(c.satisfied_by(sol.values));
      for (int j = 0; j < n; ++j) CHECK(sol.values[j] >= Rational(0));
    } else {
      ++infeasible_seen;
      CHECK(!oracle);
    }
  }
  CHECK(optimal_seen > 50);
  CHECK(infeasible_seen > 10);
}

TEST_CASE("separation driver returns the relaxation optimum when the oracle accepts") {
  LinearProgram lp = LinearProgram::minimize({Rational(1), Rational(1)});
  lp.constraints.push_back(row({Rational(1), Rational(1)}, Relation::GreaterEq, Rational(2)));
  SeparationSolve run =
      solve_with_separation(lp, [](const std::vector<Rational>&) { return std::nullopt; });
  CHECK(run.cuts_generated == 0);
  CHECK(run.solution.objective_value == Rational(2));
}

TEST_CASE("separation driver matches full enumeration on small voting games") {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 30; ++round) {
    WeightedVotingGame g = tst::random_wvg(rng, 6, 1);  // unary weights
    const int n = g.players();
    LinearProgram full = LinearProgram::minimize(std::vector<Rational>(n, Rational(1)));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Coalition c = Coalition::from_mask(mask);
      std::vector<Rational> coeffs(n, Rational(0));
      for (int i : c.members()) coeffs[i] = Rational(1);
      full.constraints.push_back(row(std::move(coeffs), Relation::GreaterEq, g.value(c)));
    }
    LpSolution enumerated = simplex_min(full);

    // oracle: scan all coalitions, return the first violated constraint
    LinearProgram relax = LinearProgram::minimize(std::vector<Rational>(n, Rational(1)));
    SeparationOracle oracle = [&](const std::vector<Rational>& x) -> std::optional<LinearConstraint> {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Coalition c = Coalition::from_mask(mask);
        Rational paid(0);
        for (int i : c.members()) paid += x[i];
        if (paid < g.value(c)) {
          std::vector<Rational> coeffs(n, Rational(0));
          for (int i : c.members()) coeffs[i] = Rational(1);
          return row(std::move(coeffs), Relation::GreaterEq, g.value(c));
        }
      }
      return std::nullopt;
    };
    SeparationSolve run = solve_with_separation(relax, oracle);
    REQUIRE(run.solution.status == LpStatus::Optimal);
    CHECK(run.solution.objective_value == enumerated.objective_value);
  }
}

TEST_CASE("separation driver finds the veto optimum") {
  // winning coalitions of [2,1,1;3] all contain player 0; optimum pays them 1
  WeightedVotingGame g({2, 1, 1}, 3);
  LinearProgram relax = LinearProgram::minimize({Rational(1), Rational(1), Rational(1)});
  SeparationOracle oracle = [&](const std::vector<Rational>& x) -> std::optional<LinearConstraint> {
    for (std::uint64_t mask = 1; mask < 8; ++mask) {
      Coalition c = Coalition::from_mask(mask);
      Rational paid(0);
      for (int i : c.members()) paid += x[i];
      if (paid < g.value(c)) {
        std::vector<Rational> coeffs(3, Rational(0));
        for (int i : c.members()) coeffs[i] = Rational(1);
        return row(std::move(coeffs), Relation::GreaterEq, g.value(c));
      }
    }
    return std::nullopt;
  };
  SeparationSolve run = solve_with_separation(relax, oracle);
  CHECK(run.solution.objective_value == Rational(1));
}

TEST_CASE("misbehaving oracles are rejected") {
  LinearProgram lp = LinearProgram::minimize({Rational(1)});
  // valid but never violated: the driver must refuse to loop on it
  SeparationOracle lazy = [](const std::vector<Rational>&) {
    return LinearConstraint{{Rational(1)}, Relation::GreaterEq, Rational(-1)};
  };
  CHECK_THROWS_AS(solve_with_separation(lp, lazy), std::logic_error);
}
