#include "cobord/cli/expr.hpp"

#include <cctype>
#include <optional>

#include "cobord/errors.hpp"

namespace cobord::cli {

bool operator==(const Expr& lhs, const Expr& rhs) {
  if (lhs.kind != rhs.kind || lhs.text != rhs.text || lhs.exponent != rhs.exponent ||
      lhs.children.size() != rhs.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < lhs.children.size(); ++i) {
    if (!(*lhs.children[i] == *rhs.children[i])) return false;
  }
  return true;
}

namespace {

enum class Tok { Integer, Rational, Symbol, Plus, Minus, Star, Caret, LParen, RParen, End, Invalid };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& token) {
  switch (token.kind) {
    case Tok::Integer:
    case Tok::Rational: return "number '" + token.text + "'";
    case Tok::Symbol: return "identifier '" + token.text + "'";
    case Tok::End: return "end of input";
    default: return "'" + token.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : source_(source) {}

  Token next() {
    skip_space();
    const std::size_t line = line_;
    const std::size_t column = column_;
    if (pos_ >= source_.size()) return {Tok::End, "", line, column};
    const char ch = source_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits = take_digits();
      if (pos_ + 1 < source_.size() && source_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(source_[pos_ + 1]))) {
        advance();
        digits += "/" + take_digits();
        return {Tok::Rational, digits, line, column};
      }
      return {Tok::Integer, digits, line, column};
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string name;
      while (pos_ < source_.size() &&
             (std::isalnum(static_cast<unsigned char>(source_[pos_])) || source_[pos_] == '_')) {
        name += source_[pos_];
        advance();
      }
      return {Tok::Symbol, name, line, column};
    }
    advance();
    switch (ch) {
      case '+': return {Tok::Plus, "+", line, column};
      case '-': return {Tok::Minus, "-", line, column};
      case '*': return {Tok::Star, "*", line, column};
      case '^': return {Tok::Caret, "^", line, column};
      case '(': return {Tok::LParen, "(", line, column};
      case ')': return {Tok::RParen, ")", line, column};
      default: return {Tok::Invalid, std::string(1, ch), line, column};
    }
  }

 private:
  void advance() {
    if (source_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < source_.size() && std::isspace(static_cast<unsigned char>(source_[pos_]))) advance();
  }

  std::string take_digits() {
    std::string digits;
    while (pos_ < source_.size() && std::isdigit(static_cast<unsigned char>(source_[pos_]))) {
      digits += source_[pos_];
      advance();
    }
    return digits;
  }

  std::string_view source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view source) : lexer_(source) {
    current_ = lexer_.next();
    if (current_.kind == Tok::Invalid) {
      throw ParseError("invalid character '" + current_.text + "'", current_.line, current_.column);
    }
  }

  ExprPtr parse() {
    ExprPtr result = expr();
    if (current_.kind != Tok::End) {
      std::string message = "unexpected " + describe(current_);
      if (current_.kind == Tok::Symbol || current_.kind == Tok::Integer || current_.kind == Tok::Rational ||
          current_.kind == Tok::LParen) {
        message += "; juxtaposition is not multiplication, use '*'";
      } else {
        message += "; expected an operator or end of input";
      }
      fail(message);
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current_.line, current_.column);
  }

  Token take() {
    Token token = current_;
    current_ = lexer_.next();
    if (current_.kind == Tok::Invalid) throw ParseError("invalid character '" + current_.text + "'", current_.line, current_.column);
    return token;
  }

  static ExprPtr node(Expr::Kind kind, const Token& at, std::vector<ExprPtr> children, std::string text = {},
                      std::uint32_t exponent = 0) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->text = std::move(text);
    e->exponent = exponent;
    e->children = std::move(children);
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (current_.kind == Tok::Plus || current_.kind == Tok::Minus) {
      const Token op = take();
      ExprPtr rhs = term();
      lhs = node(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op, {lhs, rhs});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (current_.kind == Tok::Star) {
      const Token op = take();
      ExprPtr rhs = unary();
      lhs = node(Expr::Kind::Mul, op, {lhs, rhs});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (current_.kind == Tok::Minus) {
      const Token op = take();
      return node(Expr::Kind::Neg, op, {unary()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (current_.kind == Tok::Caret) {
      const Token op = take();
      if (current_.kind != Tok::Integer) fail("expected a non-negative integer exponent after '^', got " + describe(current_));
      const Token exponent = take();
      if (exponent.text.size() > 4) throw ParseError("exponent too large", exponent.line, exponent.column);
      base = node(Expr::Kind::Pow, op, {base}, {}, static_cast<std::uint32_t>(std::stoul(exponent.text)));
    }
    return base;
  }

  ExprPtr primary() {
    switch (current_.kind) {
      case Tok::Integer: {
        const Token t = take();
        return node(Expr::Kind::Integer, t, {}, t.text);
      }
      case Tok::Rational: {
        const Token t = take();
        if (t.text.substr(t.text.find('/') + 1).find_first_not_of('0') == std::string::npos) {
          throw ParseError("zero denominator in '" + t.text + "'", t.line, t.column);
        }
        return node(Expr::Kind::Rational, t, {}, t.text);
      }
      case Tok::Symbol: {
        const Token t = take();
        return node(Expr::Kind::Symbol, t, {}, t.text);
      }
      case Tok::LParen: {
        const Token open = take();
        ExprPtr inner = expr();
        if (current_.kind != Tok::RParen) fail("expected ')' to close '(' at column " + std::to_string(open.column) + ", got " + describe(current_));
        take();
        return node(Expr::Kind::Paren, open, {inner});
      }
      default:
        fail("expected a number, symbol or '(', got " + describe(current_));
    }
  }

  Lexer lexer_;
  Token current_{Tok::End, "", 1, 1};
};

void collect(const Expr& expr, std::set<std::string>& out) {
  if (expr.kind == Expr::Kind::Symbol) out.insert(expr.text);
  for (const auto& child : expr.children) collect(*child, out);
}

std::optional<std::size_t> generator_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'p') return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  }
  if (name[1] == '0' || name.size() > 6) return std::nullopt;
  return std::stoul(name.substr(1));
}

}  // namespace

ExprPtr parse_expr(std::string_view source) {
  Parser parser(source);
  return parser.parse();
}

std::string print_expr(const Expr& expr) {
  switch (expr.kind) {
    case Expr::Kind::Integer:
    case Expr::Kind::Rational:
    case Expr::Kind::Symbol: return expr.text;
    case Expr::Kind::Add: return print_expr(*expr.children[0]) + " + " + print_expr(*expr.children[1]);
    case Expr::Kind::Sub: return print_expr(*expr.children[0]) + " - " + print_expr(*expr.children[1]);
    case Expr::Kind::Mul: return print_expr(*expr.children[0]) + "*" + print_expr(*expr.children[1]);
    case Expr::Kind::Neg: return "-" + print_expr(*expr.children[0]);
    case Expr::Kind::Pow: return print_expr(*expr.children[0]) + "^" + std::to_string(expr.exponent);
    case Expr::Kind::Paren: return "(" + print_expr(*expr.children[0]) + ")";
  }
  return {};
}

std::set<std::string> collect_symbols(const Expr& expr) {
  std::set<std::string> out;
  collect(expr, out);
  return out;
}

GradedPoly evaluate_expr(const Expr& expr, const VariablesPtr& variables, std::size_t cutoff) {
  auto eval = [&](const auto& self, const Expr& e) -> GradedPoly {
    switch (e.kind) {
      case Expr::Kind::Integer:
      case Expr::Kind::Rational:
        return GradedPoly::constant(variables, LambdaPoly::constant(Rational::parse(e.text), cutoff));
      case Expr::Kind::Symbol: {
        if (auto index = variables->index_of(e.text)) return GradedPoly::variable(variables, *index, cutoff);
        if (auto generator = generator_index(e.text)) {
          if (*generator > cutoff) {
            throw ParseError("symbol '" + e.text + "' exceeds generator cutoff " + std::to_string(cutoff), e.line,
                             e.column);
          }
          return GradedPoly::constant(variables, LambdaPoly::generator(*generator, cutoff));
        }
        throw ParseError("unknown symbol '" + e.text + "'", e.line, e.column);
      }
      case Expr::Kind::Add: return self(self, *e.children[0]) + self(self, *e.children[1]);
      case Expr::Kind::Sub: return self(self, *e.children[0]) - self(self, *e.children[1]);
      case Expr::Kind::Mul: return self(self, *e.children[0]) * self(self, *e.children[1]);
      case Expr::Kind::Neg: return -self(self, *e.children[0]);
      case Expr::Kind::Pow: return power_truncated(self(self, *e.children[0]), e.exponent, std::nullopt);
      case Expr::Kind::Paren: return self(self, *e.children[0]);
    }
    throw UsageError("corrupt expression tree");
  };
  return eval(eval, expr);
}

}  // namespace cobord::cli
