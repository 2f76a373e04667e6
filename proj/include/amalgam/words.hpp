#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "amalgam/group.hpp"

namespace amalgam {

/// "r", "r^2", "r^-1"
std::string power_word(std::string_view gen, long e);

/// Evaluates a generator word ("r^2s", "a^3 * b", "1") in `g`. Generator
/// names are matched longest-first; '*' and whitespace are optional
/// separators. Throws a validation error on unknown names or bad syntax.
elem_t parse_word(const Group& g, std::string_view text);

/// Comma-separated list of generator words.
std::vector<elem_t> parse_word_list(const Group& g, std::string_view csv);

/// Splits a label into (generator name, exponent) runs using the same lexer
/// as parse_word; returns false if the label is not a plain word.
bool tokenize_word(const std::vector<std::string>& names, std::string_view text,
                   std::vector<std::pair<std::string, long>>& runs);

}  // namespace amalgam
