#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amalgam/products.hpp"

namespace amalgam {

/// Group-spec AST:
///   spec  := atom | "direct(" spec "," spec ")"
///          | "central(" spec "," spec ";" pairs ")"
///   atom  := ("C"|"D"|"S"|"A"|"Dic") "(" int ")" | "Q8" | "Triv"
///   pairs := word "=" word {"," word "=" word}
/// Amalgam words are written in the factor groups' own generator names:
/// left-factor names on the left of each pair, right-factor names on the
/// right.
struct SpecAST {
  enum class Kind { atom, direct, central };
  Kind kind = Kind::atom;
  // atom
  std::string family;  // "C", "D", "S", "A", "Dic", "Q8", "Triv"
  unsigned param = 0;
  bool has_param = false;
  // direct / central
  std::unique_ptr<SpecAST> left, right;
  std::vector<std::pair<std::string, std::string>> amalgam;
  int line = 1, col = 1;
};

/// Parses a spec; errors carry line/column and the expected tokens.
SpecAST parse_spec(std::string_view text);
std::string print_spec(const SpecAST& ast);

/// Fully evaluated spec. Every root evaluates to a central product: atoms
/// become G ∘ Triv and direct products amalgamate over the trivial group, so
/// the three-method machinery applies uniformly.
struct EvaluatedSpec {
  CentralProduct cp;
  std::string echo;  ///< normalized spec text
  bool diagonal_supported = false;  ///< root is direct(X, X) with equal factors
};
EvaluatedSpec evaluate_spec(const SpecAST& ast, const Limits& limits = {});

/// The diagonal {(g,g)} of a direct(X, X) spec, inside the evaluated group.
Subgroup diagonal_subgroup(const EvaluatedSpec& spec);

}  // namespace amalgam
