#include "costab/io.hpp"

#include <cctype>
#include <sstream>

namespace costab {

namespace {

DomainError syntax_error(int line, const std::string& message) {
  return DomainError("line " + std::to_string(line) + ": " + message);
}

struct TokenLine {
  int number;
  std::vector<std::string> tokens;
};

std::vector<TokenLine> tokenize(const std::string& text) {
  std::vector<TokenLine> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    TokenLine line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

BigInt parse_nonnegative_integer(const std::string& s, int line, const std::string& what) {
  if (s.empty()) throw syntax_error(line, what + " must be a nonnegative integer");
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw syntax_error(line, what + " must be a nonnegative integer, got '" + s + "'");
  return BigInt(s, 10);
}

Rational parse_nonnegative_rational(const std::string& s, int line) {
  auto r = Rational::parse(s);
  if (!r) throw syntax_error(line, "malformed value '" + s + "'");
  if (r->sign() < 0) throw syntax_error(line, "values must be nonnegative");
  return *r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

// 1-based comma-separated player list -> coalition.
Coalition parse_member_list(const std::string& s, int n, int line) {
  Coalition c;
  for (const std::string& item : split(s, ',')) {
    if (item.empty()) throw syntax_error(line, "empty player index");
    BigInt idx = parse_nonnegative_integer(item, line, "player index");
    if (idx < 1 || idx > n) throw syntax_error(line, "player index " + item + " out of range");
    int i = static_cast<int>(idx.get_ui()) - 1;
    if (c.contains(i)) throw syntax_error(line, "player " + item + " listed twice");
    c = c.with(i);
  }
  return c;
}

Game parse_wvg(const std::vector<TokenLine>& lines) {
  if (lines.size() < 3)
    throw syntax_error(lines.back().number, "wvg files need a 'weights' and a 'quota' line");
  if (lines.size() > 3) throw syntax_error(lines[3].number, "unexpected line after 'quota'");
  const TokenLine& wl = lines[1];
  if (wl.tokens[0] != "weights" || wl.tokens.size() < 2)
    throw syntax_error(wl.number, "expected 'weights w1 w2 ...'");
  std::vector<BigInt> weights;
  for (std::size_t i = 1; i < wl.tokens.size(); ++i)
    weights.push_back(parse_nonnegative_integer(wl.tokens[i], wl.number, "weight"));
  const TokenLine& ql = lines[2];
  if (ql.tokens[0] != "quota" || ql.tokens.size() != 2)
    throw syntax_error(ql.number, "expected 'quota q'");
  BigInt quota = parse_nonnegative_integer(ql.tokens[1], ql.number, "quota");
  try {
    return WeightedVotingGame(std::move(weights), std::move(quota));
  } catch (const DomainError& e) {
    throw syntax_error(lines[0].number, e.what());
  }
}

Game parse_tabular(const std::vector<TokenLine>& lines) {
  const TokenLine& head = lines[0];
  if (head.tokens.size() != 2) throw syntax_error(head.number, "expected 'tabular n'");
  BigInt nn = parse_nonnegative_integer(head.tokens[1], head.number, "player count");
  if (nn < 1) throw syntax_error(head.number, "at least one player required");
  if (nn > kTabularPlayerCap)
    throw ResourceError("line " + std::to_string(head.number) + ": tabular games are capped at " +
                        std::to_string(kTabularPlayerCap) + " players");
  const int n = static_cast<int>(nn.get_ui());
  std::map<Coalition, Rational> entries;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const TokenLine& line = lines[li];
    if (line.tokens[0] != "coalition" || line.tokens.size() != 4 || line.tokens[2] != "value")
      throw syntax_error(line.number, "expected 'coalition i1,i2,... value r'");
    Coalition c = parse_member_list(line.tokens[1], n, line.number);
    Rational v = parse_nonnegative_rational(line.tokens[3], line.number);
    if (entries.count(c)) throw syntax_error(line.number, "duplicate coalition");
    entries.emplace(c, std::move(v));
  }
  return TabularGame(n, std::move(entries));
}

}  // namespace

Game parse_game(const std::string& text) {
  std::vector<TokenLine> lines = tokenize(text);
  if (lines.empty()) throw DomainError("empty game file");
  const TokenLine& head = lines[0];
  if (head.tokens[0] == "wvg") {
    if (head.tokens.size() != 1) throw syntax_error(head.number, "unexpected tokens after 'wvg'");
    return parse_wvg(lines);
  }
  if (head.tokens[0] == "tabular") return parse_tabular(lines);
  throw syntax_error(head.number, "expected 'wvg' or 'tabular n'");
}

std::string serialize_game(const Game& g) {
  std::ostringstream out;
  if (g.is_wvg()) {
    const auto& wvg = g.wvg();
    out << "wvg\nweights";
    for (const BigInt& w : wvg.weights()) out << ' ' << w.get_str();
    out << "\nquota " << wvg.quota().get_str() << "\n";
    return out.str();
  }
  const auto& tab = g.tabular();
  out << "tabular " << tab.players() << "\n";
  for (const auto& [c, v] : tab.entries())
    out << "coalition " << format_coalition(c) << " value " << v.str() << "\n";
  return out.str();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& item : split(text, ',')) {
    auto r = Rational::parse(item);
    if (!r) throw DomainError("malformed rational '" + item + "'");
    out.push_back(*r);
  }
  return out;
}

SuperImputation parse_payoffs(const std::string& text, int n) {
  std::vector<Rational> values = parse_rational_list(text);
  if (static_cast<int>(values.size()) != n)
    throw DomainError("expected " + std::to_string(n) + " payoffs, got " +
                      std::to_string(values.size()));
  return SuperImputation(std::move(values));
}

CoalitionStructure parse_structure(const std::string& text, int n) {
  std::vector<Coalition> parts;
  for (const std::string& part : split(text, '|'))
    parts.push_back(parse_member_list(part, n, 0));
  try {
    return CoalitionStructure(std::move(parts), n);
  } catch (const DomainError& e) {
    throw DomainError("invalid structure '" + text + "': " + e.what());
  }
}

std::string format_coalition(const Coalition& c) {
  std::string out;
  for (int i : c.members()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(i + 1);
  }
  return out;
}

std::string format_structure(const CoalitionStructure& cs) {
  std::string out;
  for (const Coalition& part : cs.parts()) {
    if (!out.empty()) out.push_back('|');
    out += format_coalition(part);
  }
  return out;
}

std::string format_payoffs(const SuperImputation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out.push_back(' ');
    out += p[i].str();
  }
  return out;
}

}  // namespace costab
