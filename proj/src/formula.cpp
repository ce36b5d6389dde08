#include "qlogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qlogic {

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<Formula> children;
  std::size_t depth;
};

namespace {

bool is_binary(Formula::Op op) { return op == Formula::Op::And || op == Formula::Op::Or || op == Formula::Op::Xor; }

int precedence(Formula::Op op) {
  switch (op) {
    case Formula::Op::Or: return 1;
    case Formula::Op::Xor: return 2;
    case Formula::Op::And: return 3;
    case Formula::Op::Not: return 4;
    case Formula::Op::Atom: return 5;
  }
  return 0;
}

const char* symbol(Formula::Op op) {
  switch (op) {
    case Formula::Op::And: return "&";
    case Formula::Op::Or: return "|";
    case Formula::Op::Xor: return "^";
    case Formula::Op::Not: return "!";
    case Formula::Op::Atom: break;
  }
  return "";
}

}  // namespace

// ---------------------------------------------------------------------------
// Formula

Formula Formula::atom(std::string name) {
  if (!valid_atom_name(name)) fail(ErrorKind::InvalidArgument, "invalid atom name '" + name + "'");
  return Formula(std::make_shared<const Node>(Node{Op::Atom, std::move(name), {}, 1}));
}

Formula Formula::negation(Formula operand) {
  const std::size_t depth = operand.depth() + 1;
  if (depth > kMaxFormulaDepth) fail(ErrorKind::InvalidArgument, "formula exceeds the maximum depth of 64");
  return Formula(std::make_shared<const Node>(Node{Op::Not, {}, {std::move(operand)}, depth}));
}

Formula Formula::binary(Op op, Formula lhs, Formula rhs) {
  if (!is_binary(op)) fail(ErrorKind::InvalidArgument, "not a binary connective");
  const std::size_t depth = std::max(lhs.depth(), rhs.depth()) + 1;
  if (depth > kMaxFormulaDepth) fail(ErrorKind::InvalidArgument, "formula exceeds the maximum depth of 64");
  return Formula(std::make_shared<const Node>(Node{op, {}, {std::move(lhs), std::move(rhs)}, depth}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) { return binary(Op::And, std::move(lhs), std::move(rhs)); }
Formula Formula::disjunction(Formula lhs, Formula rhs) { return binary(Op::Or, std::move(lhs), std::move(rhs)); }
Formula Formula::exclusive(Formula lhs, Formula rhs) { return binary(Op::Xor, std::move(lhs), std::move(rhs)); }

Formula::Op Formula::op() const noexcept { return node_->op; }
const std::string& Formula::name() const noexcept { return node_->name; }
std::size_t Formula::depth() const noexcept { return node_->depth; }

const Formula& Formula::lhs() const {
  if (node_->children.empty()) fail(ErrorKind::InvalidArgument, "atom has no operands");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() < 2) fail(ErrorKind::InvalidArgument, "formula has no right operand");
  return node_->children[1];
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->op() == Op::Atom) out.insert(f->name());
    for (const auto& c : f->node_->children) stack.push_back(&c);
  }
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.name() != b.name()) return false;
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

bool valid_atom_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : Error(ErrorKind::ParseError, message), offset_(offset), expected_(std::move(expected)) {}

namespace {

enum class Tok { Atom, Not, And, Or, Xor, LParen, RParen, End, Invalid };

struct Token {
  Tok kind;
  std::size_t offset;
  std::size_t length;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Atom: return "atom";
    case Tok::Not: return "'!'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Xor: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
    case Tok::Invalid: return "invalid character";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula parse() {
    Formula f = parse_or();
    if (tok_.kind != Tok::End) error({"'&'", "'^'", "'|'", "end of input"});
    return f;
  }

 private:
  // Paren/negation nesting allowed before the AST depth check can kick in.
  static constexpr std::size_t kMaxNesting = 4 * kMaxFormulaDepth;

  void advance() {
    std::size_t pos = tok_.offset + tok_.length;
    while (pos < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos]))) ++pos;
    tok_ = lex(pos);
  }

  Token lex(std::size_t pos) const {
    if (pos >= text_.size()) return {Tok::End, pos, 0};
    const char c = text_[pos];
    switch (c) {
      case '!': return {Tok::Not, pos, 1};
      case '&': return {Tok::And, pos, 1};
      case '|': return {Tok::Or, pos, 1};
      case '^': return {Tok::Xor, pos, 1};
      case '(': return {Tok::LParen, pos, 1};
      case ')': return {Tok::RParen, pos, 1};
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos + 1;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      return {Tok::Atom, pos, end - pos};
    }
    const std::string_view rest = text_.substr(pos);
    if (rest.starts_with("¬")) return {Tok::Not, pos, 2};
    if (rest.starts_with("∧")) return {Tok::And, pos, 3};
    if (rest.starts_with("∨")) return {Tok::Or, pos, 3};
    if (rest.starts_with("⊻")) return {Tok::Xor, pos, 3};
    return {Tok::Invalid, pos, 1};
  }

  [[noreturn]] void error(std::vector<std::string> expected) const {
    std::ostringstream os;
    os << "parse error at offset " << tok_.offset << ": found ";
    if (tok_.kind == Tok::Atom || tok_.kind == Tok::Invalid) {
      os << "'" << text_.substr(tok_.offset, tok_.length) << "'";
    } else {
      os << describe(tok_.kind);
    }
    os << ", expected one of:";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : " ") << expected[i];
    throw ParseError(tok_.offset, std::move(expected), os.str());
  }

  Formula make(Formula::Op op, Formula lhs, Formula rhs, std::size_t at) const {
    try {
      return Formula::binary(op, std::move(lhs), std::move(rhs));
    } catch (const Error& e) {
      throw ParseError(at, {}, e.what());
    }
  }

  template <typename Next>
  Formula parse_chain(Tok tok, Formula::Op op, Next next) {
    Formula lhs = (this->*next)();
    while (tok_.kind == tok) {
      const std::size_t at = tok_.offset;
      advance();
      lhs = make(op, std::move(lhs), (this->*next)(), at);
    }
    return lhs;
  }

  Formula parse_or() { return parse_chain(Tok::Or, Formula::Op::Or, &Parser::parse_xor); }
  Formula parse_xor() { return parse_chain(Tok::Xor, Formula::Op::Xor, &Parser::parse_and); }
  Formula parse_and() { return parse_chain(Tok::And, Formula::Op::And, &Parser::parse_unary); }

  Formula parse_unary() {
    if (++nesting_ > kMaxNesting) throw ParseError(tok_.offset, {}, "formula nesting is too deep");
    Formula out = parse_unary_inner();
    --nesting_;
    return out;
  }

  Formula parse_unary_inner() {
    const std::vector<std::string> operand_start{"atom", "'('", "'!'"};
    switch (tok_.kind) {
      case Tok::Not: {
        const std::size_t at = tok_.offset;
        advance();
        Formula operand = parse_unary();
        try {
          return Formula::negation(std::move(operand));
        } catch (const Error& e) {
          throw ParseError(at, {}, e.what());
        }
      }
      case Tok::Atom: {
        Formula f = Formula::atom(std::string(text_.substr(tok_.offset, tok_.length)));
        advance();
        return f;
      }
      case Tok::LParen: {
        advance();
        Formula f = parse_or();
        if (tok_.kind != Tok::RParen) error({"'&'", "'^'", "'|'", "')'"});
        advance();
        return f;
      }
      default:
        error(operand_start);
    }
  }

  std::string_view text_;
  Token tok_{Tok::End, 0, 0};
  std::size_t nesting_ = 0;
};

void print_into(const Formula& f, std::string& out) {
  auto operand = [&out](const Formula& child, bool parens) {
    if (parens) out += '(';
    print_into(child, out);
    if (parens) out += ')';
  };
  switch (f.op()) {
    case Formula::Op::Atom:
      out += f.name();
      return;
    case Formula::Op::Not:
      out += '!';
      operand(f.lhs(), precedence(f.lhs().op()) < precedence(Formula::Op::Not));
      return;
    default: {
      const int p = precedence(f.op());
      operand(f.lhs(), precedence(f.lhs().op()) < p);
      out += ' ';
      out += symbol(f.op());
      out += ' ';
      operand(f.rhs(), precedence(f.rhs().op()) <= p);
    }
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

}  // namespace qlogic
