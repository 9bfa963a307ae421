#pragma once

#include <string>
#include <vector>

#include "costab/game.hpp"

namespace costab {

/// Parses the line-oriented game format ('#' starts a comment):
///
///   wvg                      tabular <n>
///   weights <w1> ... <wn>    coalition <i1>,<i2>,... value <r>
///   quota <q>                ...
///
/// Indices are 1-based; values are nonnegative integers or a/b rationals;
/// unlisted coalitions are worth 0. Syntax errors carry the line number.
Game parse_game(const std::string& text);

/// Deterministic inverse of parse_game: parse(serialize(g)) == g.
std::string serialize_game(const Game& g);

/// Comma-separated rationals, e.g. "1/2,1/2,0"; must have exactly n entries.
SuperImputation parse_payoffs(const std::string& text, int n);

std::vector<Rational> parse_rational_list(const std::string& text);

/// Parts separated by '|', members 1-based and comma-separated, e.g. "1,2|3";
/// must partition {1,...,n} exactly.
CoalitionStructure parse_structure(const std::string& text, int n);

std::string format_coalition(const Coalition& c);            // "1,2,5"
std::string format_structure(const CoalitionStructure& cs);  // "1,2|3"
std::string format_payoffs(const SuperImputation& p);        // "1/2 1/2 0"

}  // namespace costab
