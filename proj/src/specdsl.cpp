#include "amalgam/specdsl.hpp"

#include <cctype>

#include "amalgam/catalog.hpp"
#include "amalgam/words.hpp"

namespace amalgam {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& expected) {
    skip_ws();
    std::string got = pos < text.size() ? "'" + std::string(1, text[pos]) + "'" : "end of input";
    throw parse_error(line, col, "expected " + expected + ", got " + got);
  }
  void expect(char c, const char* what) {
    if (peek() != c) fail(std::string("'") + c + "' (" + what + ")");
    advance();
  }
  bool try_consume(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  std::string ident() {
    skip_ws();
    std::string out;
    while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) ||
                                 (!out.empty() && std::isdigit(static_cast<unsigned char>(text[pos]))))) {
      out += text[pos];
      advance();
    }
    return out;
  }
  unsigned integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("an integer");
    unsigned v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + unsigned(text[pos] - '0');
      if (v > 1000000) throw parse_error(line, col, "integer parameter too large");
      advance();
    }
    return v;
  }
  // raw run up to one of the delimiters, trimmed
  std::string until(std::string_view delims) {
    skip_ws();
    std::string out;
    while (pos < text.size() && delims.find(text[pos]) == std::string_view::npos) {
      out += text[pos];
      advance();
    }
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
  }
};

SpecAST parse_node(Cursor& c) {
  SpecAST node;
  node.line = c.line;
  node.col = c.col;
  c.skip_ws();
  node.line = c.line;
  node.col = c.col;
  std::string word = c.ident();
  if (word.empty()) c.fail("a spec (atom, direct(...) or central(...))");

  if (word == "direct" || word == "central") {
    node.kind = word == "direct" ? SpecAST::Kind::direct : SpecAST::Kind::central;
    c.expect('(', "argument list");
    node.left = std::make_unique<SpecAST>(parse_node(c));
    c.expect(',', "second factor");
    node.right = std::make_unique<SpecAST>(parse_node(c));
    if (node.kind == SpecAST::Kind::central) {
      c.expect(';', "amalgam pairs");
      while (true) {
        std::string lhs = c.until("=,;)");
        if (lhs.empty()) c.fail("an amalgam word");
        c.expect('=', "amalgam pair");
        std::string rhs = c.until("=,;)");
        if (rhs.empty()) c.fail("an amalgam word");
        node.amalgam.emplace_back(std::move(lhs), std::move(rhs));
        if (!c.try_consume(',')) break;
      }
    }
    c.expect(')', "closing the product");
    return node;
  }

  node.kind = SpecAST::Kind::atom;
  node.family = word;
  if (word == "Q8" || word == "Triv") return node;
  if (word == "C" || word == "D" || word == "S" || word == "A" || word == "Dic") {
    c.expect('(', "atom parameter");
    node.param = c.integer();
    node.has_param = true;
    c.expect(')', "atom parameter");
    return node;
  }
  throw parse_error(node.line, node.col,
                    "unknown atom '" + word + "', expected C, D, S, A, Dic, Q8 or Triv");
}

// Generator names an atom family exposes, for parse-time word validation.
std::vector<std::string> atom_generator_names(const SpecAST& n) {
  if (n.kind != SpecAST::Kind::atom) return {};
  if (n.family == "C") return {"x", "y"};
  if (n.family == "D") return {"r", "s"};
  if (n.family == "Dic") return {"a", "b"};
  if (n.family == "Q8") return {"i", "j"};
  if (n.family == "S") {
    std::vector<std::string> out;
    for (unsigned k = 1; k < std::max(2u, n.param); ++k) out.push_back("s" + std::to_string(k));
    return out;
  }
  if (n.family == "A") return {"t", "c"};
  return {};
}

void validate_amalgam_names(const SpecAST& node) {
  if (node.kind != SpecAST::Kind::central) return;
  // Only atom factors have statically known names; product factors are
  // validated at evaluation time against the constructed group.
  for (int side = 0; side < 2; ++side) {
    const SpecAST& factor = side == 0 ? *node.left : *node.right;
    if (factor.kind != SpecAST::Kind::atom) continue;
    auto names = atom_generator_names(factor);
    for (const auto& [lhs, rhs] : node.amalgam) {
      const std::string& w = side == 0 ? lhs : rhs;
      std::vector<std::pair<std::string, long>> runs;
      if (!tokenize_word(names, w, runs))
        throw parse_error(node.line, node.col,
                          "amalgam word '" + w + "' does not parse over the generators of " +
                              print_spec(factor));
    }
  }
}

void walk_validate(const SpecAST& n) {
  validate_amalgam_names(n);
  if (n.left) walk_validate(*n.left);
  if (n.right) walk_validate(*n.right);
}

}  // namespace

SpecAST parse_spec(std::string_view text) {
  Cursor c{text};
  SpecAST ast = parse_node(c);
  if (!c.at_end()) c.fail("end of input");
  walk_validate(ast);
  return ast;
}

std::string print_spec(const SpecAST& ast) {
  switch (ast.kind) {
    case SpecAST::Kind::atom:
      if (ast.has_param) return ast.family + "(" + std::to_string(ast.param) + ")";
      return ast.family;
    case SpecAST::Kind::direct:
      return "direct(" + print_spec(*ast.left) + ", " + print_spec(*ast.right) + ")";
    case SpecAST::Kind::central: {
      std::string out = "central(" + print_spec(*ast.left) + ", " + print_spec(*ast.right) + "; ";
      bool first = true;
      for (const auto& [l, r] : ast.amalgam) {
        if (!first) out += ", ";
        out += l + " = " + r;
        first = false;
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

GroupPtr evaluate_group(const SpecAST& ast, const Limits& limits);

CentralProduct evaluate_central(const SpecAST& ast, const Limits& limits) {
  GroupPtr v1 = evaluate_group(*ast.left, limits);
  GroupPtr v2 = evaluate_group(*ast.right, limits);
  CentralProductSpec spec{v1, v2, {}};
  Subgroup z1 = center(v1);
  Subgroup z2 = center(v2);
  for (const auto& [lw, rw] : ast.amalgam) {
    elem_t a = parse_word(*v1, lw);
    elem_t b = parse_word(*v2, rw);
    if (!z1.contains(a))
      throw validation_error("amalgam word '" + lw + "' is not central in " + v1->name());
    if (!z2.contains(b))
      throw validation_error("amalgam word '" + rw + "' is not central in " + v2->name());
    spec.amalgam.emplace_back(a, b);
  }
  return external_central_product(spec, limits);
}

GroupPtr evaluate_group(const SpecAST& ast, const Limits& limits) {
  switch (ast.kind) {
    case SpecAST::Kind::atom:
      if (ast.family == "Q8") return quaternion_group(limits);
      if (ast.family == "Triv") return trivial_group(limits);
      return catalog_group(ast.family, ast.param, limits);
    case SpecAST::Kind::direct: {
      GroupPtr v1 = evaluate_group(*ast.left, limits);
      GroupPtr v2 = evaluate_group(*ast.right, limits);
      return direct_product(std::move(v1), std::move(v2), limits).group;
    }
    case SpecAST::Kind::central:
      return evaluate_central(ast, limits).group;
  }
  throw internal_error("unreachable spec kind");
}

bool same_spec(const SpecAST& a, const SpecAST& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SpecAST::Kind::atom:
      return a.family == b.family && a.has_param == b.has_param && a.param == b.param;
    case SpecAST::Kind::direct:
      return same_spec(*a.left, *b.left) && same_spec(*a.right, *b.right);
    case SpecAST::Kind::central:
      return same_spec(*a.left, *b.left) && same_spec(*a.right, *b.right) &&
             a.amalgam == b.amalgam;
  }
  return false;
}

}  // namespace

EvaluatedSpec evaluate_spec(const SpecAST& ast, const Limits& limits) {
  EvaluatedSpec out{[&] {
                      switch (ast.kind) {
                        case SpecAST::Kind::central:
                          return evaluate_central(ast, limits);
                        case SpecAST::Kind::direct: {
                          CentralProductSpec spec{evaluate_group(*ast.left, limits),
                                                  evaluate_group(*ast.right, limits),
                                                  {}};
                          return external_central_product(spec, limits);
                        }
                        case SpecAST::Kind::atom: {
                          CentralProductSpec spec{evaluate_group(ast, limits),
                                                  trivial_group(limits),
                                                  {}};
                          return external_central_product(spec, limits);
                        }
                      }
                      throw internal_error("unreachable spec kind");
                    }(),
                    print_spec(ast), false};
  out.diagonal_supported = ast.kind == SpecAST::Kind::direct && same_spec(*ast.left, *ast.right);
  return out;
}

Subgroup diagonal_subgroup(const EvaluatedSpec& spec) {
  if (!spec.diagonal_supported)
    throw validation_error(
        "the diagonal subgroup needs a direct(X, X) spec with equal factors");
  const CentralProduct& cp = spec.cp;
  const Group& d = *cp.direct;
  // Δ = {(g,g)}; with equal factors the two projections range over the same
  // index space.
  Bits delta_d(d.order());
  for (std::uint32_t x = 0; x < d.order(); ++x)
    if (cp.pi1(elem_t(x)) == cp.pi2(elem_t(x))) delta_d.set(x);
  Subgroup in_d = Subgroup::from_members(cp.direct, std::move(delta_d));
  return cp.epsilon.image_of(in_d);
}

}  // namespace amalgam
