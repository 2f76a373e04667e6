#include "amalgam/words.hpp"

#include <algorithm>
#include <cctype>

namespace amalgam {

std::string power_word(std::string_view gen, long e) {
  if (e == 1) return std::string(gen);
  return std::string(gen) + "^" + std::to_string(e);
}

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_filler() {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
      ++pos;
  }
  bool done() {
    skip_filler();
    return pos >= text.size();
  }
};

// Longest generator-name match at the current position.
std::size_t match_name(const std::vector<std::string>& names, std::string_view text,
                       std::size_t pos, std::string& out) {
  std::size_t best = 0;
  for (const auto& n : names) {
    if (n.empty() || n.size() <= best) continue;
    if (text.compare(pos, n.size(), n) == 0) {
      best = n.size();
      out = n;
    }
  }
  return best;
}

bool lex_runs(const std::vector<std::string>& names, std::string_view text,
              std::vector<std::pair<std::string, long>>& runs, std::string* err) {
  Lexer lx{text};
  runs.clear();
  bool any = false;
  while (!lx.done()) {
    if (text[lx.pos] == '1' && (lx.pos + 1 >= text.size() ||
                                !std::isalnum(static_cast<unsigned char>(text[lx.pos + 1])))) {
      // literal identity
      ++lx.pos;
      any = true;
      continue;
    }
    std::string name;
    std::size_t len = match_name(names, text, lx.pos, name);
    if (len == 0) {
      if (err) *err = "unknown generator name at '" + std::string(text.substr(lx.pos)) + "'";
      return false;
    }
    lx.pos += len;
    long e = 1;
    if (lx.pos < text.size() && text[lx.pos] == '^') {
      ++lx.pos;
      bool neg = false;
      if (lx.pos < text.size() && (text[lx.pos] == '-' || text[lx.pos] == '+')) {
        neg = text[lx.pos] == '-';
        ++lx.pos;
      }
      if (lx.pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[lx.pos]))) {
        if (err) *err = "expected an exponent after '^'";
        return false;
      }
      long v = 0;
      while (lx.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[lx.pos]))) {
        v = v * 10 + (text[lx.pos] - '0');
        ++lx.pos;
      }
      e = neg ? -v : v;
    }
    runs.emplace_back(std::move(name), e);
    any = true;
  }
  if (!any) {
    if (err) *err = "empty word";
    return false;
  }
  return true;
}

}  // namespace

bool tokenize_word(const std::vector<std::string>& names, std::string_view text,
                   std::vector<std::pair<std::string, long>>& runs) {
  return lex_runs(names, text, runs, nullptr);
}

elem_t parse_word(const Group& g, std::string_view text) {
  std::vector<std::string> names;
  names.reserve(g.generators().size());
  for (const auto& [n, idx] : g.generators()) names.push_back(n);

  std::vector<std::pair<std::string, long>> runs;
  std::string err;
  if (!lex_runs(names, text, runs, &err))
    throw validation_error("bad word '" + std::string(text) + "' in " + g.name() + ": " + err);

  elem_t acc = g.identity();
  for (const auto& [name, e] : runs) {
    elem_t base = 0;
    for (const auto& [n, idx] : g.generators())
      if (n == name) {
        base = idx;
        break;
      }
    acc = g.mul(acc, g.power(base, e));
  }
  return acc;
}

std::vector<elem_t> parse_word_list(const Group& g, std::string_view csv) {
  std::vector<elem_t> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string_view part = csv.substr(start, comma == std::string_view::npos ? csv.size() - start
                                                                              : comma - start);
    // trim
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (!part.empty()) out.push_back(parse_word(g, part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace amalgam
