#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "costab/approx.hpp"
#include "costab/cos.hpp"
#include "costab/game.hpp"
#include "costab/generators.hpp"
#include "costab/io.hpp"
#include "costab/stability.hpp"

namespace {

using namespace costab;

Game load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open game file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_game(text.str());
}

Rational parse_positive_rational(const std::string& text, const std::string& what) {
  auto r = Rational::parse(text);
  if (!r || r->sign() <= 0) throw DomainError(what + " must be a positive rational");
  return *r;
}

void print_cos_lines(const CosResult& r) {
  std::cout << "cos " << r.cos.str() << "\n";
  std::cout << "total " << r.witness.total().str() << "\n";
  std::cout << "witness " << format_payoffs(r.witness) << "\n";
  std::cout << "method " << to_string(r.method) << "\n";
  std::cout << "cuts " << r.cuts_generated << "\n";
}

void run_cos(const std::string& file) { print_cos_lines(cos_of(load_game(file))); }

void run_cos_cs(const std::string& file, const std::string& structure_text, bool best) {
  Game g = load_game(file);
  CoalitionStructure cs = best ? optimal_cs_value(g).second
                               : parse_structure(structure_text, g.players());
  CosResult r = cos_cs(g, cs);
  std::cout << "structure " << format_structure(cs) << "\n";
  std::cout << "cs_value " << cs_value(g, cs).str() << "\n";
  print_cos_lines(r);
  std::string deltas;
  for (const Coalition& part : cs.parts()) {
    if (!deltas.empty()) deltas.push_back(' ');
    deltas += (r.witness.total(part) - g.value(part)).str();
  }
  std::cout << "deltas " << deltas << "\n";
}

void print_stability_lines(const Game& g, const SuperImputation& p) {
  DeficitReport rep = max_deficit(g, p);
  const bool stable = rep.max_deficit.sign() <= 0;
  std::cout << "stable " << (stable ? "true" : "false") << "\n";
  std::cout << "deficit " << rep.max_deficit.str() << "\n";
  if (!stable) std::cout << "violating_coalition " << format_coalition(rep.witness) << "\n";
}

int run_check(const std::string& file, const std::string& payoff_text,
              const std::string& delta_text, const std::string& structure_text,
              const std::string& deltas_text) {
  Game g = load_game(file);
  SuperImputation p = parse_payoffs(payoff_text, g.players());
  const bool cs_form = !structure_text.empty() || !deltas_text.empty();
  if (cs_form && (structure_text.empty() || deltas_text.empty()))
    throw DomainError("--structure and --deltas must be given together");
  if (cs_form && !delta_text.empty())
    throw DomainError("--delta and --deltas are mutually exclusive");

  if (cs_form) {
    CoalitionStructure cs = parse_structure(structure_text, g.players());
    std::vector<Rational> deltas = parse_rational_list(deltas_text);
    bool member;
    try {
      member = cs_core_membership(g, cs, deltas, p);
    } catch (const PreconditionError& e) {
      std::cout << "imputation false\n";
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    std::cout << "imputation true\n";
    print_stability_lines(g, p);
    std::cout << "in_cs_core " << (member ? "true" : "false") << "\n";
    return 0;
  }

  if (!delta_text.empty()) {
    auto delta = Rational::parse(delta_text);
    if (!delta) throw DomainError("malformed delta '" + delta_text + "'");
    AdjustedGame adjusted = adjust_game(g, *delta);
    if (!is_imputation(adjusted, CoalitionStructure::grand(g.players()), p)) {
      std::cout << "imputation false\n";
      std::cerr << "error: payoff vector is not an imputation for the adjusted game\n";
      return 1;
    }
    std::cout << "imputation true\n";
    print_stability_lines(g, p);
    // Parts pay the adjusted grand value exactly, so base stability decides.
    std::cout << "in_core " << (is_stable(g, p) ? "true" : "false") << "\n";
    return 0;
  }

  print_stability_lines(g, p);
  return 0;
}

void run_approx(const std::string& file, const std::string& eps_text, bool additive,
                bool proportional, const std::string& structure_text) {
  Game g = load_game(file);
  if (!g.is_wvg()) throw DomainError("approximation commands require a weighted voting game");
  const WeightedVotingGame& wvg = g.wvg();

  if (proportional) {
    if (additive || !structure_text.empty())
      throw DomainError("--proportional cannot be combined with --additive or --structure");
    SuperImputation p = proportional_payoff(wvg);
    std::cout << "method proportional\n";
    std::cout << "total " << p.total().str() << "\n";
    std::cout << "witness " << format_payoffs(p) << "\n";
    std::cout << "stable " << (is_stable(g, p) ? "true" : "false") << "\n";
    return;
  }

  if (eps_text.empty()) throw DomainError("--eps is required");
  Rational eps = parse_positive_rational(eps_text, "eps");
  std::cout << "eps " << eps.str() << "\n";
  if (!structure_text.empty()) {
    CoalitionStructure cs = parse_structure(structure_text, g.players());
    std::cout << "structure " << format_structure(cs) << "\n";
    std::cout << "method additive_cs\n";
    std::cout << "value " << additive_fptas_cs(wvg, cs, eps).str() << "\n";
  } else if (additive) {
    std::cout << "method additive\n";
    std::cout << "value " << additive_fptas(wvg, eps).str() << "\n";
  } else {
    std::cout << "method fptas\n";
    std::cout << "value " << fptas(wvg, eps).str() << "\n";
  }
}

void run_least_core(const std::string& file) {
  std::cout << "least_core " << least_core_value(load_game(file)).str() << "\n";
}

void run_report(const std::string& file) {
  Game g = load_game(file);
  BoundsReport report = bounds_report(g);
  std::cout << "n " << report.players << "\n";
  std::cout << "grand_value " << report.grand_value.str() << "\n";
  std::cout << "cos " << report.cos.cos.str() << "\n";
  std::cout << "method " << to_string(report.cos.method) << "\n";
  std::cout << "witness " << format_payoffs(report.cos.witness) << "\n";
  std::cout << "least_core " << (report.least_core ? report.least_core->str() : "none") << "\n";
  std::cout << "optimal_cs_value " << report.optimal_welfare.str() << "\n";
  std::cout << "optimal_structure "
            << format_structure(CoalitionStructure(report.optimal_structure, report.players))
            << "\n";
  for (const BoundCheck& c : report.checks)
    std::cout << "bound " << c.name << " " << c.lhs.str() << " " << c.relation << " "
              << c.rhs.str() << " " << (c.pass ? "pass" : "fail") << "\n";
  std::cout << "bounds_ok " << (report.all_pass() ? "true" : "false") << "\n";
}

int int_param(const std::vector<std::string>& params, std::size_t i, const std::string& what) {
  if (i >= params.size()) throw DomainError("missing parameter: " + what);
  try {
    return std::stoi(params[i]);
  } catch (const std::exception&) {
    throw DomainError("malformed " + what + " '" + params[i] + "'");
  }
}

BigInt bigint_param(const std::vector<std::string>& params, std::size_t i, const std::string& what) {
  if (i >= params.size()) throw DomainError("missing parameter: " + what);
  for (char ch : params[i])
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw DomainError("malformed " + what + " '" + params[i] + "'");
  return BigInt(params[i], 10);
}

void run_gen(const std::string& kind, const std::vector<std::string>& params) {
  if (kind == "uniform") {
    if (params.size() != 3) throw DomainError("usage: gen uniform N W Q");
    std::cout << serialize_game(
        gen_uniform(int_param(params, 0, "n"), bigint_param(params, 1, "w"),
                    bigint_param(params, 2, "q")));
  } else if (kind == "projective_plane") {
    if (params.size() != 1) throw DomainError("usage: gen projective_plane ORDER");
    std::cout << serialize_game(gen_projective_plane(int_param(params, 0, "order")));
  } else if (kind == "anonymous_majority") {
    if (params.size() != 1) throw DomainError("usage: gen anonymous_majority K");
    std::cout << serialize_game(gen_anonymous_majority(int_param(params, 0, "k")));
  } else if (kind == "partition_reduction") {
    if (params.empty()) throw DomainError("usage: gen partition_reduction A1 A2 ...");
    std::vector<BigInt> a;
    for (std::size_t i = 0; i < params.size(); ++i)
      a.push_back(bigint_param(params, i, "list entry"));
    PartitionInstance inst = gen_partition_wvg(a);
    std::cout << "# delta " << inst.delta.str() << "\n" << serialize_game(Game(inst.game));
  } else if (kind == "all_nonempty_win") {
    if (params.size() != 1) throw DomainError("usage: gen all_nonempty_win N");
    std::cout << serialize_game(gen_all_nonempty_win(int_param(params, 0, "n")));
  } else if (kind == "fixture") {
    if (params.size() != 1) throw DomainError("usage: gen fixture NAME");
    auto all = fixtures();
    auto it = all.find(params[0]);
    if (it == all.end()) {
      std::string names;
      for (const auto& [name, game] : all) names += (names.empty() ? "" : ", ") + name;
      throw DomainError("unknown fixture '" + params[0] + "' (have: " + names + ")");
    }
    std::cout << serialize_game(it->second);
  } else {
    throw DomainError("unknown generator kind '" + kind + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and approximate cost-of-stability solver for coalitional games"};
  app.require_subcommand(1);

  std::string file, structure_text, payoff_text, delta_text, deltas_text, eps_text;
  bool best = false, additive = false, proportional = false;
  std::string gen_kind;
  std::vector<std::string> gen_params;

  auto* cos_cmd = app.add_subcommand("cos", "Cost of stabilizing the grand coalition");
  cos_cmd->add_option("file", file, "game file")->required();

  auto* cs_cmd = app.add_subcommand("cos-cs", "Cost of stabilizing a coalition structure");
  cs_cmd->add_option("file", file, "game file")->required();
  auto* s_opt = cs_cmd->add_option("--structure", structure_text, "structure, e.g. \"1,2|3\"");
  auto* b_opt = cs_cmd->add_flag("--best", best, "use a welfare-maximizing structure");
  s_opt->excludes(b_opt);

  auto* check_cmd = app.add_subcommand("check", "Stability / core membership of a payoff vector");
  check_cmd->add_option("file", file, "game file")->required();
  check_cmd->add_option("--payoff", payoff_text, "payoffs, e.g. \"1/2,1/2,1/2\"")->required();
  check_cmd->add_option("--delta", delta_text, "grand-coalition supplement");
  check_cmd->add_option("--structure", structure_text, "structure for --deltas");
  check_cmd->add_option("--deltas", deltas_text, "per-part supplements, e.g. \"1/2,0\"");

  auto* approx_cmd = app.add_subcommand("approx", "Approximate the cost of stability");
  approx_cmd->add_option("file", file, "game file")->required();
  approx_cmd->add_option("--eps", eps_text, "accuracy, e.g. 1/10");
  approx_cmd->add_flag("--additive", additive, "additive scheme instead of the FPTAS");
  approx_cmd->add_flag("--proportional", proportional, "weight-proportional 2-approximation");
  approx_cmd->add_option("--structure", structure_text, "approximate CoS of this structure");

  auto* lc_cmd = app.add_subcommand("least-core", "Least-core value");
  lc_cmd->add_option("file", file, "game file")->required();

  auto* report_cmd = app.add_subcommand("report", "Exact values and every applicable bound");
  report_cmd->add_option("file", file, "game file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated game file");
  gen_cmd->add_option("kind", gen_kind,
                      "uniform | projective_plane | anonymous_majority | partition_reduction | "
                      "all_nonempty_win | fixture")
      ->required();
  gen_cmd->add_option("params", gen_params, "kind-specific parameters");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cos_cmd->parsed()) run_cos(file);
    if (cs_cmd->parsed()) {
      if (structure_text.empty() && !best)
        throw DomainError("one of --structure or --best is required");
      run_cos_cs(file, structure_text, best);
    }
    if (check_cmd->parsed())
      return run_check(file, payoff_text, delta_text, structure_text, deltas_text);
    if (approx_cmd->parsed()) run_approx(file, eps_text, additive, proportional, structure_text);
    if (lc_cmd->parsed()) run_least_core(file);
    if (report_cmd->parsed()) run_report(file);
    if (gen_cmd->parsed()) run_gen(gen_kind, gen_params);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
