#include "neu/expr.hpp"

#include "neu/error.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <system_error>
#include <utility>

namespace neu {

namespace {

bool is_ident_start(char c)
{
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c)
{
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::optional<ConnectorKind> keyword(std::string_view word)
{
  if (word == "NOT") return ConnectorKind::Negation;
  if (word == "AND") return ConnectorKind::Conjunction;
  if (word == "OR") return ConnectorKind::WeakDisjunction;
  if (word == "XOR") return ConnectorKind::StrongDisjunction;
  if (word == "IMPLIES") return ConnectorKind::Implication;
  if (word == "IFF") return ConnectorKind::Equivalence;
  if (word == "NAND") return ConnectorKind::Sheffer;
  if (word == "NOR") return ConnectorKind::Peirce;
  return std::nullopt;
}

class Lexer {
public:
  Lexer(std::string_view src, LiteralScale scale) : src_(src), scale_(scale) {}

  std::vector<Token> run()
  {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    Token end;
    end.kind = TokenKind::End;
    end.position = src_.size();
    out.push_back(std::move(end));
    return out;
  }

private:
  [[noreturn]] void fail(std::size_t at, const std::string& what) const
  {
    if (at >= src_.size()) {
      throw Error(ErrorKind::LexError, what + ", found end of input", at);
    }
    throw Error(ErrorKind::LexError,
                what + ", found '" + std::string(1, src_[at]) + "'", at);
  }

  char peek(std::size_t ahead = 0) const
  {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void skip_space()
  {
    while (pos_ < src_.size() && is_space(src_[pos_])) ++pos_;
  }

  void expect(char c, const char* what)
  {
    if (peek() != c) fail(pos_, std::string("expected ") + what);
    ++pos_;
  }

  Token make(TokenKind kind, std::size_t start) const
  {
    Token t;
    t.kind = kind;
    t.position = start;
    t.lexeme = std::string(src_.substr(start, pos_ - start));
    return t;
  }

  Token op(std::size_t start, ConnectorKind kind) const
  {
    Token t = make(TokenKind::Operator, start);
    t.op = kind;
    return t;
  }

  Token next()
  {
    const std::size_t start = pos_;
    const char c = peek();

    if (is_ident_start(c)) {
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
      const std::string_view word = src_.substr(start, pos_ - start);
      if (auto kind = keyword(word)) return op(start, *kind);
      return make(TokenKind::Identifier, start);
    }

    switch (c) {
      case '(': {
        std::size_t look = pos_ + 1;
        while (look < src_.size() && is_space(src_[look])) ++look;
        if (look < src_.size() && (is_digit(src_[look]) || src_[look] == '.')) {
          return literal();
        }
        ++pos_;
        return make(TokenKind::LeftParen, start);
      }
      case ')':
        ++pos_;
        return make(TokenKind::RightParen, start);
      case '&':
        ++pos_;
        return op(start, ConnectorKind::Conjunction);
      case '!':
        ++pos_;
        if (peek() == '&') {
          ++pos_;
          return op(start, ConnectorKind::Sheffer);
        }
        if (peek() == '|') {
          ++pos_;
          return op(start, ConnectorKind::Peirce);
        }
        return op(start, ConnectorKind::Negation);
      case '|':
        ++pos_;
        if (peek() == 'w') {
          ++pos_;
          return op(start, ConnectorKind::WeakDisjunction);
        }
        if (peek() == 's') {
          ++pos_;
          return op(start, ConnectorKind::StrongDisjunction);
        }
        fail(pos_, "expected 'w' or 's' after '|'");
      case '-':
        ++pos_;
        expect('>', "'>' after '-'");
        return op(start, ConnectorKind::Implication);
      case '<':
        ++pos_;
        expect('-', "'-' after '<'");
        expect('>', "'>' after '<-'");
        return op(start, ConnectorKind::Equivalence);
      default:
        fail(pos_, "unrecognized character");
    }
  }

  // digits [ '.' digits* ] | '.' digits, then optional exponent.
  double number()
  {
    const std::size_t start = pos_;
    bool digits = false;
    while (is_digit(peek())) {
      ++pos_;
      digits = true;
    }
    if (peek() == '.') {
      ++pos_;
      while (is_digit(peek())) {
        ++pos_;
        digits = true;
      }
    }
    if (!digits) fail(pos_, "expected a digit");
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!is_digit(peek())) fail(pos_, "expected exponent digits");
      while (is_digit(peek())) ++pos_;
    }
    double value = 0.0;
    const char* first = src_.data() + start;
    const char* last = src_.data() + pos_;
    // from_chars rejects a leading '.', so parse ".5" as "0.5".
    std::string buffer;
    if (*first == '.') {
      buffer = "0" + std::string(first, last);
      first = buffer.data();
      last = buffer.data() + buffer.size();
    }
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) fail(start, "malformed number");
    return value;
  }

  Token literal()
  {
    const std::size_t start = pos_;
    std::array<double, 3> numbers{};
    ++pos_;  // '('
    for (int k = 0; k < 3; ++k) {
      skip_space();
      numbers[k] = number();
      skip_space();
      if (k < 2) expect(',', "','");
    }
    expect(')', "')'");
    bool percent = scale_ == LiteralScale::Percent;
    if (peek() == '%') {
      ++pos_;
      percent = true;
    }
    Token t = make(TokenKind::TripleLiteral, start);
    t.numbers = numbers;
    t.percent = percent;
    return t;
  }

  std::string_view src_;
  LiteralScale scale_;
  std::size_t pos_ = 0;
};

// Binding strength, loosest first; atoms and literals bind tightest.
constexpr int kPrecIff = 1;
constexpr int kPrecImplies = 2;
constexpr int kPrecOr = 3;
constexpr int kPrecXor = 4;
constexpr int kPrecAnd = 5;
constexpr int kPrecNot = 6;
constexpr int kPrecPrimary = 7;

int precedence(ConnectorKind kind)
{
  switch (kind) {
    case ConnectorKind::Negation: return kPrecNot;
    case ConnectorKind::Conjunction:
    case ConnectorKind::Sheffer: return kPrecAnd;
    case ConnectorKind::StrongDisjunction: return kPrecXor;
    case ConnectorKind::WeakDisjunction:
    case ConnectorKind::Peirce: return kPrecOr;
    case ConnectorKind::Implication: return kPrecImplies;
    case ConnectorKind::Equivalence: return kPrecIff;
  }
  return kPrecPrimary;
}

int precedence(const Expr& e)
{
  return e.node() == Expr::Node::Apply ? precedence(e.op()) : kPrecPrimary;
}

constexpr std::size_t kMaxDepth = 512;

class Parser {
public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens)
  {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::End) {
      throw std::invalid_argument("parse: token sequence must end with an End token");
    }
  }

  ExprPtr run()
  {
    ExprPtr e = iff();
    if (cur().kind != TokenKind::End) fail("expected an operator or end of input");
    return e;
  }

private:
  const Token& cur() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const
  {
    const Token& t = cur();
    const std::string found =
        t.kind == TokenKind::End ? "end of input" : "'" + t.lexeme + "'";
    throw Error(ErrorKind::ParseError, what + ", found " + found, t.position);
  }

  bool at_op(ConnectorKind kind) const
  {
    return cur().kind == TokenKind::Operator && cur().op == kind;
  }

  bool at_any(std::initializer_list<ConnectorKind> kinds, ConnectorKind& which) const
  {
    for (ConnectorKind k : kinds) {
      if (at_op(k)) {
        which = k;
        return true;
      }
    }
    return false;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p)
    {
      if (++parser.depth_ > kMaxDepth) parser.fail("expression nested too deeply");
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  ExprPtr iff()
  {
    DepthGuard guard(*this);
    ExprPtr lhs = implies();
    while (at_op(ConnectorKind::Equivalence)) {
      ++pos_;
      lhs = Expr::binary(ConnectorKind::Equivalence, lhs, implies());
    }
    return lhs;
  }

  ExprPtr implies()
  {
    DepthGuard guard(*this);
    ExprPtr lhs = disjunction();
    if (at_op(ConnectorKind::Implication)) {
      ++pos_;
      return Expr::binary(ConnectorKind::Implication, lhs, implies());
    }
    return lhs;
  }

  ExprPtr disjunction()
  {
    ExprPtr lhs = exclusive();
    ConnectorKind k{};
    while (at_any({ConnectorKind::WeakDisjunction, ConnectorKind::Peirce}, k)) {
      ++pos_;
      lhs = Expr::binary(k, lhs, exclusive());
    }
    return lhs;
  }

  ExprPtr exclusive()
  {
    ExprPtr lhs = conjunction();
    while (at_op(ConnectorKind::StrongDisjunction)) {
      ++pos_;
      lhs = Expr::binary(ConnectorKind::StrongDisjunction, lhs, conjunction());
    }
    return lhs;
  }

  ExprPtr conjunction()
  {
    ExprPtr lhs = unary();
    ConnectorKind k{};
    while (at_any({ConnectorKind::Conjunction, ConnectorKind::Sheffer}, k)) {
      ++pos_;
      lhs = Expr::binary(k, lhs, unary());
    }
    return lhs;
  }

  ExprPtr unary()
  {
    DepthGuard guard(*this);
    if (at_op(ConnectorKind::Negation)) {
      ++pos_;
      return Expr::negation(unary());
    }
    return primary();
  }

  ExprPtr primary()
  {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Identifier:
        ++pos_;
        return Expr::atom(t.lexeme);
      case TokenKind::TripleLiteral: {
        Triple v;
        try {
          v = t.percent ? from_percent(t.numbers[0], t.numbers[1], t.numbers[2])
                        : make_triple(t.numbers[0], t.numbers[1], t.numbers[2]);
        } catch (const Error& e) {
          throw Error(e.kind(), "invalid literal " + t.lexeme, t.position);
        }
        ++pos_;
        return Expr::literal(v);
      }
      case TokenKind::LeftParen: {
        ++pos_;
        ExprPtr inner = iff();
        if (cur().kind != TokenKind::RightParen) fail("expected ')'");
        ++pos_;
        return inner;
      }
      default:
        fail("expected an atom, literal, '!' or '('");
    }
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

void format_into(const Expr& e, std::string& out)
{
  switch (e.node()) {
    case Expr::Node::Atom:
      out += e.name();
      return;
    case Expr::Node::Literal:
      out += '(';
      out += shortest_decimal(e.value().t());
      out += ',';
      out += shortest_decimal(e.value().i());
      out += ',';
      out += shortest_decimal(e.value().f());
      out += ')';
      return;
    case Expr::Node::Apply:
      break;
  }

  const int prec = precedence(e.op());
  auto operand = [&](const Expr& child, bool paren) {
    if (paren) out += '(';
    format_into(child, out);
    if (paren) out += ')';
  };

  if (is_unary(e.op())) {
    out += '!';
    operand(e.child(), precedence(e.child()) < kPrecNot);
    return;
  }

  const bool right_assoc = e.op() == ConnectorKind::Implication;
  const int lp = precedence(e.lhs());
  const int rp = precedence(e.rhs());
  operand(e.lhs(), lp < prec || (lp == prec && right_assoc));
  out += ' ';
  out += connector_symbol(e.op());
  out += ' ';
  operand(e.rhs(), rp < prec || (rp == prec && !right_assoc));
}

}  // namespace

std::vector<Token> tokenize(std::string_view source, LiteralScale scale)
{
  return Lexer(source, scale).run();
}

ExprPtr Expr::atom(std::string name)
{
  if (name.empty()) throw std::invalid_argument("Expr::atom: empty name");
  auto e = std::shared_ptr<Expr>(new Expr());
  e->node_ = Node::Atom;
  e->name_ = std::move(name);
  return e;
}

ExprPtr Expr::literal(const Triple& value)
{
  auto e = std::shared_ptr<Expr>(new Expr());
  e->node_ = Node::Literal;
  e->value_ = value;
  return e;
}

ExprPtr Expr::negation(ExprPtr child)
{
  if (!child) throw std::invalid_argument("Expr::negation: null child");
  auto e = std::shared_ptr<Expr>(new Expr());
  e->node_ = Node::Apply;
  e->op_ = ConnectorKind::Negation;
  e->lhs_ = std::move(child);
  return e;
}

ExprPtr Expr::binary(ConnectorKind op, ExprPtr lhs, ExprPtr rhs)
{
  if (is_unary(op)) throw std::invalid_argument("Expr::binary: negation is unary");
  if (!lhs || !rhs) throw std::invalid_argument("Expr::binary: null operand");
  auto e = std::shared_ptr<Expr>(new Expr());
  e->node_ = Node::Apply;
  e->op_ = op;
  e->lhs_ = std::move(lhs);
  e->rhs_ = std::move(rhs);
  return e;
}

bool operator==(const Expr& a, const Expr& b)
{
  if (&a == &b) return true;
  if (a.node_ != b.node_) return false;
  switch (a.node_) {
    case Expr::Node::Atom: return a.name_ == b.name_;
    case Expr::Node::Literal: return a.value_ == b.value_;
    case Expr::Node::Apply:
      if (a.op_ != b.op_ || !(*a.lhs_ == *b.lhs_)) return false;
      return is_unary(a.op_) || *a.rhs_ == *b.rhs_;
  }
  return false;
}

ExprPtr parse(std::span<const Token> tokens)
{
  return Parser(tokens).run();
}

ExprPtr parse_expression(std::string_view source, LiteralScale scale)
{
  const std::vector<Token> tokens = tokenize(source, scale);
  return parse(tokens);
}

Triple evaluate(const Expr& e, const Environment& env)
{
  switch (e.node()) {
    case Expr::Node::Atom: {
      const auto it = env.find(e.name());
      if (it == env.end()) throw Error(ErrorKind::UnboundAtom, "atom '" + e.name() + "' is not bound");
      return it->second;
    }
    case Expr::Node::Literal:
      return e.value();
    case Expr::Node::Apply:
      break;
  }
  if (is_unary(e.op())) return negate(evaluate(e.child(), env));
  const Triple lhs = evaluate(e.lhs(), env);
  const Triple rhs = evaluate(e.rhs(), env);
  return apply_binary(e.op(), lhs, rhs);
}

std::string format(const Expr& e)
{
  std::string out;
  format_into(e, out);
  return out;
}

std::string_view connector_symbol(ConnectorKind kind) noexcept
{
  switch (kind) {
    case ConnectorKind::Negation: return "!";
    case ConnectorKind::Conjunction: return "&";
    case ConnectorKind::WeakDisjunction: return "|w";
    case ConnectorKind::StrongDisjunction: return "|s";
    case ConnectorKind::Implication: return "->";
    case ConnectorKind::Equivalence: return "<->";
    case ConnectorKind::Sheffer: return "!&";
    case ConnectorKind::Peirce: return "!|";
  }
  return "?";
}

std::string shortest_decimal(double x)
{
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace neu
