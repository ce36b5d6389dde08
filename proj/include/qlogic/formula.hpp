#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/error.hpp"

namespace qlogic {

inline constexpr std::size_t kMaxFormulaDepth = 64;

/// Immutable propositional formula over named atoms. Copies share structure.
class Formula {
 public:
  enum class Op { Atom, Not, And, Or, Xor };

  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula exclusive(Formula lhs, Formula rhs);
  static Formula binary(Op op, Formula lhs, Formula rhs);

  Op op() const noexcept;
  /// Atom name; empty for compound formulas.
  const std::string& name() const noexcept;
  /// Operand of Not, or left operand of a binary connective.
  const Formula& lhs() const;
  const Formula& rhs() const;
  std::size_t depth() const noexcept;

  std::set<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Syntax error with the byte offset where parsing stopped and the tokens
/// that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

bool valid_atom_name(std::string_view name);

/// Precedence, tightest first: not (! or U+00AC), and (& or U+2227),
/// xor (^ or U+22BB), or (| or U+2228). Binary connectives associate left.
Formula parse_formula(std::string_view text);

/// Canonical ASCII rendering with the minimum parentheses needed for
/// parse_formula to rebuild the same tree.
std::string print_formula(const Formula& f);

}  // namespace qlogic
