#pragma once

#include "neu/connectors.hpp"
#include "neu/triple.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace neu {

// Expression language over neutrosophic atoms.
//
//   expr    := imp ( "<->" imp )*                  left-assoc
//   imp     := or ( "->" imp )?                    right-assoc
//   or      := xor ( ( "|w" | "!|" ) xor )*
//   xor     := and ( "|s" and )*
//   and     := unary ( ( "&" | "!&" ) unary )*
//   unary   := "!" unary | primary
//   primary := IDENT | "(" t "," i "," f ")" [ "%" ] | "(" expr ")"
//
// Keyword aliases: NOT AND OR XOR IMPLIES IFF NAND NOR.

enum class TokenKind { Identifier, TripleLiteral, Operator, LeftParen, RightParen, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string lexeme;
  std::size_t position = 0;
  /// Operator tokens only.
  ConnectorKind op = ConnectorKind::Negation;
  /// Triple literals only: the three numbers as written, and whether the
  /// literal is on the percent scale.
  std::array<double, 3> numbers{};
  bool percent = false;
};

/// Scale used for triple literals without a '%' suffix.
enum class LiteralScale { Unit, Percent };

/// Splits `source` into tokens terminated by an End token positioned at
/// source.size(). Throws Error(LexError) at the first offending character.
std::vector<Token> tokenize(std::string_view source, LiteralScale scale = LiteralScale::Unit);

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree node. Subtrees may be shared.
class Expr {
public:
  enum class Node { Atom, Literal, Apply };

  static ExprPtr atom(std::string name);
  static ExprPtr literal(const Triple& value);
  static ExprPtr negation(ExprPtr child);
  static ExprPtr binary(ConnectorKind op, ExprPtr lhs, ExprPtr rhs);

  Node node() const noexcept { return node_; }
  const std::string& name() const noexcept { return name_; }
  const Triple& value() const noexcept { return value_; }
  ConnectorKind op() const noexcept { return op_; }
  const Expr& child() const noexcept { return *lhs_; }
  const Expr& lhs() const noexcept { return *lhs_; }
  const Expr& rhs() const noexcept { return *rhs_; }

  friend bool operator==(const Expr& a, const Expr& b);

private:
  Expr() = default;

  Node node_ = Node::Atom;
  std::string name_;
  Triple value_;
  ConnectorKind op_ = ConnectorKind::Negation;
  ExprPtr lhs_;
  ExprPtr rhs_;
};

/// Builds a tree from a token sequence produced by tokenize. Throws
/// Error(ParseError) with the offending token's position, or
/// Error(NotNormalized/OutOfRange) positioned at an invalid literal.
ExprPtr parse(std::span<const Token> tokens);

/// tokenize followed by parse.
ExprPtr parse_expression(std::string_view source, LiteralScale scale = LiteralScale::Unit);

using Environment = std::map<std::string, Triple, std::less<>>;

/// Throws Error(UnboundAtom) naming the first unbound atom met.
Triple evaluate(const Expr& e, const Environment& env);

/// Canonical text with the fewest parentheses that still parse back to `e`.
std::string format(const Expr& e);

/// Surface symbol of a connector ("&", "|w", ...).
std::string_view connector_symbol(ConnectorKind kind) noexcept;

/// Shortest decimal text that reads back as exactly `x`.
std::string shortest_decimal(double x);

}  // namespace neu
