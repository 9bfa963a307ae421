// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. argv[1] must point at the costab CLI binary (used by the
// round-trip/determinism criterion).
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "costab/approx.hpp"
#include "costab/cos.hpp"
#include "costab/game.hpp"
#include "costab/generators.hpp"
#include "costab/io.hpp"
#include "costab/stability.hpp"
#include "oracles.hpp"

using namespace costab;
namespace tst = costab::testing;

namespace {

#define REQ(cond, msg)                 \
  do {                                 \
    if (!(cond)) {                     \
      detail = (msg);                  \
      return false;                    \
    }                                  \
  } while (0)

std::string g_cli_path;

// ---- criterion 1: uniform closed form equals the LP optimum -------------

bool closed_form_vs_lp(std::string& detail) {
  REQ(cos_uniform(3, 1, 2) == Rational(1, 2), "reference instance n=3,q=2,w=1 must give 1/2");
  for (int n = 1; n <= 8; ++n) {
    for (long w = 1; w <= 3; ++w) {
      for (long q = 1; q <= n * w; ++q) {
        Rational closed = cos_uniform(n, w, q);
        Rational solved = cos_exact_wvg(gen_uniform(n, w, q)).cos;
        REQ(closed == solved, "closed form mismatch at n=" + std::to_string(n) +
                                  " w=" + std::to_string(w) + " q=" + std::to_string(q));
      }
    }
  }
  return true;
}

// ---- criterion 2: all-nonempty-win game values ---------------------------

bool all_nonempty_win_values(std::string& detail) {
  for (int n = 1; n <= 6; ++n) {
    TabularGame g = gen_all_nonempty_win(n);
    CosResult r = cos_exact(g);
    REQ(r.cos == Rational(n - 1), "CoS must be n-1 at n=" + std::to_string(n));
    Rational eps = least_core_value(Game(g));
    REQ(eps == Rational(n - 1, n), "least core must be (n-1)/n at n=" + std::to_string(n));
    REQ(r.cos == Rational(n) * eps, "CoS = n*eps must hold exactly at n=" + std::to_string(n));
  }
  return true;
}

// ---- criterion 3: Fano-plane tight instance ------------------------------

bool fano_plane_instance(std::string& detail) {
  TabularGame fano = gen_projective_plane(2);
  REQ(fano.players() == 7, "Fano plane has 7 points");
  REQ(is_superadditive_brute(Game(fano)), "Fano game must be super-additive");
  CosResult r = cos_exact(fano);
  REQ(r.cos == Rational(4, 3), "Fano CoS must be 4/3, got " + r.cos.str());
  REQ(r.witness.total() == Rational(7, 3), "minimum stable total must be 7/3");
  // CoS <= (sqrt(7)-1)*v(I) and CoS >= (sqrt(7)-2)*v(I), squared exactly
  Rational up = r.cos + Rational(1);
  REQ(up * up <= Rational(7), "upper square bound (CoS+1)^2 <= 7");
  Rational low = r.cos + Rational(2);
  REQ(low * low >= Rational(7), "tightness square bound (CoS+2)^2 >= 7");
  return true;
}

// ---- criterion 4: anonymous majority family ------------------------------

bool anonymous_majority_values(std::string& detail) {
  for (int k = 1; k <= 4; ++k) {
    WeightedVotingGame g = gen_anonymous_majority(k);
    Rational cos = cos_exact_wvg(g).cos;
    REQ(cos == Rational(1) - Rational(1, k + 1),
        "majority CoS must be 1 - 1/(k+1) at k=" + std::to_string(k));
    REQ(cos <= Rational(2), "anonymous bound CoS <= 2 v(I)");
  }
  return true;
}

// ---- criterion 5: general bounds on random instances ---------------------

bool general_bounds(std::string& detail) {
  std::mt19937_64 rng(1005);
  for (int round = 0; round < 200; ++round) {
    WeightedVotingGame g = tst::random_wvg(rng, 8, 8);
    Rational cos = cos_exact_wvg(g).cos;
    Rational welfare = optimal_cs_value(Game(g)).first;
    REQ(welfare - Rational(1) <= cos, "structure-welfare lower bound violated on a voting game");
    REQ(cos <= Rational(g.players()), "n*vmax upper bound violated on a voting game");
  }
  for (int round = 0; round < 50; ++round) {
    TabularGame g = tst::random_tabular(rng, 6);
    Rational cos = cos_exact(g).cos;
    Rational welfare = optimal_cs_value(Game(g)).first;
    REQ(welfare - Game(g).grand_value() <= cos,
        "structure-welfare lower bound violated on a tabular game");
    REQ(cos <= Rational(g.players()) * g.max_value(),
        "n*vmax upper bound violated on a tabular game");
  }
  return true;
}

// ---- criterion 6: weight table vs enumeration ----------------------------

bool dp_oracle_equivalence(std::string& detail) {
  std::mt19937_64 rng(1006);
  for (int round = 0; round < 500; ++round) {
    WeightedVotingGame g = tst::random_wvg(rng, 10, 8);
    SuperImputation p = tst::random_payoffs(rng, g.players(), 8, 6);
    DeficitReport table = max_deficit_wvg_dp(g, p);
    DeficitReport brute = max_deficit_brute(g, p);
    REQ(table.max_deficit == brute.max_deficit, "deficit mismatch between table and enumeration");
    REQ(Game(g).value(table.witness) - p.total(table.witness) == table.max_deficit,
        "table witness does not attain the maximum deficit");
  }
  return true;
}

// ---- criterion 7: constraint generation vs full enumeration --------------

bool generation_vs_enumeration(std::string& detail) {
  std::mt19937_64 rng(1007);
  for (int round = 0; round < 100; ++round) {
    WeightedVotingGame g = tst::random_wvg(rng, 10, 9);
    CosResult generated = cos_exact_wvg(g);
    CosResult enumerated = cos_exact(tst::tabularized(g));
    REQ(generated.cos == enumerated.cos, "constraint generation disagrees with enumeration");
  }
  return true;
}

// ---- criterion 8: partition-reduction instances ---------------------------

bool partition_reduction(std::string& detail) {
  std::mt19937_64 rng(1008);
  int done = 0;
  while (done < 50) {
    const int n = static_cast<int>(tst::draw(rng, 2, 10));
    std::vector<BigInt> a;
    BigInt sum = 0;
    for (int i = 0; i < n; ++i) {
      long ai = tst::draw(rng, 0, 8);
      a.emplace_back(ai);
      sum += ai;
    }
    if (sum % 2 != 0 || sum < 2) continue;
    ++done;
    PartitionInstance inst = gen_partition_wvg(a);
    bool split = tst::subset_sum_exists(a, sum / 2);
    bool core_empty = cos_exact_wvg(inst.game).cos > inst.delta;
    REQ(core_empty == split, "supplemented core emptiness must match subset-sum existence");
    if (!split) {
      std::vector<Rational> scaled;
      for (const BigInt& w : a) scaled.emplace_back(w, BigInt(sum / 2 + 1));
      SuperImputation p{scaled};
      REQ(max_deficit_brute(Game(inst.game), p).max_deficit.sign() <= 0,
          "scaled-weight payoff must be stable when no split exists");
    }
  }
  return true;
}

// ---- criterion 9: approximation scheme guarantees -------------------------

bool fptas_guarantees(std::string& detail) {
  std::mt19937_64 rng(1009);
  const std::vector<Rational> epsilons{Rational(1, 2), Rational(1, 5), Rational(1, 10)};
  for (int round = 0; round < 100; ++round) {
    WeightedVotingGame g = tst::random_wvg(rng, 8, 6);
    Rational exact = cos_exact_wvg(g).cos;
    bool veto = !veto_agents(Game(g)).empty();
    if (!veto)
      REQ(exact >= Rational(1, g.players()), "veto-free games must have CoS >= 1/n");
    for (const Rational& eps : epsilons) {
      Rational multiplicative = fptas(g, eps);
      if (veto) {
        REQ(multiplicative == Rational(0), "FPTAS must return exactly 0 on vetoed games");
      } else {
        REQ(exact <= multiplicative, "FPTAS result below the exact value");
        REQ(multiplicative <= (Rational(1) + eps) * exact, "FPTAS result above (1+eps)*CoS");
      }
      Rational additive = additive_fptas(g, eps);
      REQ(exact <= additive, "additive result below the exact value");
      REQ(additive <= exact + eps, "additive result above CoS + eps");
    }
  }
  return true;
}

// ---- criterion 10: proportional two-approximation --------------------------

bool proportional_two_approx(std::string& detail) {
  std::mt19937_64 rng(1010);
  for (int round = 0; round < 120; ++round) {
    WeightedVotingGame g = tst::random_wvg(rng, 8, 8);
    SuperImputation p = proportional_payoff(g);
    REQ(max_deficit_brute(Game(g), p).max_deficit.sign() <= 0,
        "proportional payoff must be stable");
    Rational gains = Rational(1) + cos_exact_wvg(g).cos;
    REQ(p.total() <= Rational(2) * gains, "proportional total above twice the adjusted gains");
  }
  for (long q : {3L, 10L, 100L}) {
    WeightedVotingGame g({BigInt(q - 1), BigInt(q - 1)}, BigInt(q));
    Rational gains = Rational(1) + cos_exact_wvg(g).cos;  // core is nonempty
    Rational ratio = proportional_payoff(g).total() / gains;
    REQ(ratio >= Rational(2) - Rational(2, q),
        "near-quota ratio must reach 2 - 2/q at q=" + std::to_string(q));
  }
  return true;
}

// ---- criterion 11: coalition-structure results -----------------------------

bool coalition_structures(std::string& detail) {
  Game ex54(WeightedVotingGame({1, 1, 1}, 2));
  CoalitionStructure cs54({Coalition::of({0, 1}), Coalition::single(2)}, 3);
  CosResult r54 = cos_cs(ex54, cs54);
  REQ(r54.cos == Rational(1, 2), "stabilizing ({1,2},{3}) in the majority game must cost 1/2");
  REQ((r54.witness.payoffs() ==
       std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2)}),
      "witness must be (1/2,1/2,1/2)");

  Game ex55(WeightedVotingGame({8, 8, 9, 9, 1}, 10));
  auto [welfare, best] = optimal_cs_value(ex55);
  REQ(welfare == Rational(2), "optimal structure value of the example game must be 2");
  CosCsResult r55 = cos_with_cs(ex55);
  REQ(r55.result.cos == Rational(1, 2), "CoS over structures must be 1/2");
  REQ(r55.result.cos > Rational(0), "the example game must have an empty CS-core");

  CoalitionStructure cs55({Coalition::of({0, 1}), Coalition::of({2, 3}), Coalition::single(4)}, 5);
  SuperImputation p({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(0)});
  REQ(!cs_core_membership(ex55, cs55, {Rational(0), Rational(0), Rational(0)}, p),
      "the example configuration must be rejected");
  DeficitReport rep = max_deficit(ex55, p);
  REQ(rep.witness == Coalition::of({3, 4}), "the blocking coalition must be {4,5} (1-based)");
  return true;
}

// ---- criterion 12: CLI round-trip and determinism ---------------------------

std::pair<int, std::string> run_cli(const std::string& args) {
  FILE* pipe = popen((g_cli_path + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string line_value(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
  return "";
}

bool cli_round_trip(std::string& detail) {
  REQ(!g_cli_path.empty(), "CLI path missing: pass it as argv[1]");
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "costab_acceptance";
  fs::create_directories(dir);

  for (const auto& [name, game] : fixtures()) {
    REQ(parse_game(serialize_game(game)) == game, "parse/serialize identity failed on " + name);
    std::ofstream(dir / (name + ".game")) << serialize_game(game);
  }
  Game fano(gen_projective_plane(2));
  REQ(parse_game(serialize_game(fano)) == fano, "parse/serialize identity failed on the Fano game");
  std::ofstream(dir / "fano.game") << serialize_game(fano);

  for (std::string cmd :
       {"cos ", "report ", "least-core ", "cos-cs --best "}) {
    for (std::string name : {"ex54", "ex55"}) {
      std::string args = cmd + (dir / (name + ".game")).string();
      auto first = run_cli(args);
      auto second = run_cli(args);
      REQ(first.first == 0, "CLI failed: " + args);
      REQ(first.second == second.second, "repeated runs differ: " + args);
      REQ(!first.second.empty(), "no output: " + args);
    }
  }

  // every emitted witness re-verifies as stable via `check`
  for (std::string name : {"ex54", "ex55", "fano"}) {
    std::string file = (dir / (name + ".game")).string();
    auto [code, out] = run_cli("cos " + file);
    REQ(code == 0, "cos failed on " + name);
    std::string witness = line_value(out, "witness");
    REQ(!witness.empty(), "cos printed no witness on " + name);
    for (char& ch : witness)
      if (ch == ' ') ch = ',';
    auto [ccode, cout_] = run_cli("check " + file + " --payoff " + witness);
    REQ(ccode == 0, "check failed on the emitted witness of " + name);
    REQ(line_value(cout_, "stable") == "true", "emitted witness not stable on " + name);
  }

  // structure witnesses re-verify together with their reported deltas
  for (std::string name : {"ex54", "ex55"}) {
    std::string file = (dir / (name + ".game")).string();
    auto [code, out] = run_cli("cos-cs " + file + " --best");
    REQ(code == 0, "cos-cs failed on " + name);
    std::string witness = line_value(out, "witness");
    std::string deltas = line_value(out, "deltas");
    std::string structure = line_value(out, "structure");
    for (char& ch : witness)
      if (ch == ' ') ch = ',';
    for (char& ch : deltas)
      if (ch == ' ') ch = ',';
    auto [ccode, cout_] = run_cli("check " + file + " --payoff " + witness + " --structure '" +
                                  structure + "' --deltas " + deltas);
    REQ(ccode == 0, "check failed on the cos-cs witness of " + name);
    REQ(line_value(cout_, "in_cs_core") == "true", "cos-cs witness not in the CS-core on " + name);
  }

  // generator output is deterministic and parses back
  for (std::string args : {"gen uniform 3 1 2", "gen projective_plane 2",
                           "gen anonymous_majority 2", "gen partition_reduction 1 1 4",
                           "gen all_nonempty_win 3", "gen fixture tight2approx"}) {
    auto first = run_cli(args);
    auto second = run_cli(args);
    REQ(first.first == 0, "generator failed: " + args);
    REQ(first.second == second.second, "generator output differs between runs: " + args);
    parse_game(first.second);  // throws on malformed output
  }

  // the documented example: the blocking pair in the ex55 fixture
  auto [code, out] =
      run_cli("check " + (dir / "ex55.game").string() + " --payoff 1/2,1/2,1/2,1/2,0");
  REQ(code == 0, "check failed on the example payoff");
  REQ(line_value(out, "stable") == "false", "example payoff must be unstable");
  REQ(line_value(out, "deficit") == "1/2", "example deficit must be 1/2");
  REQ(line_value(out, "violating_coalition") == "4,5", "violating coalition must be 4,5");

  // the documented example: an approximate value printed as a rational
  auto [acode, aout] = run_cli("approx " + (dir / "ex54.game").string() + " --eps 1/10");
  REQ(acode == 0, "approx failed on the majority fixture");
  auto value = Rational::parse(line_value(aout, "value"));
  REQ(value.has_value(), "approx must print the value as a rational");
  REQ(*value >= Rational(1, 2) && *value <= Rational(11, 20),
      "approx value must land in [1/2, 11/20]");
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {"closed-form-vs-lp", closed_form_vs_lp},
      {"all-nonempty-win", all_nonempty_win_values},
      {"fano-plane", fano_plane_instance},
      {"anonymous-majority", anonymous_majority_values},
      {"general-bounds", general_bounds},
      {"dp-oracle-equivalence", dp_oracle_equivalence},
      {"generation-vs-enumeration", generation_vs_enumeration},
      {"partition-reduction", partition_reduction},
      {"fptas-guarantees", fptas_guarantees},
      {"proportional-2-approx", proportional_two_approx},
      {"coalition-structures", coalition_structures},
      {"cli-round-trip", cli_round_trip},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%2zu/%zu] %-28s %s\n", i + 1, criteria.size(), criteria[i].name,
                ok ? "PASS" : "FAIL");
    if (!ok) {
      std::printf("        %s\n", detail.c_str());
      ++failures;
    }
  }
  if (failures) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
