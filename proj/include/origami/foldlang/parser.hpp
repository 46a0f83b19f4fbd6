#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "origami/error.hpp"
#include "origami/foldlang/ast.hpp"
#include "origami/polynomial.hpp"

namespace origami::foldlang {

/// An Error tied to a source position.
class ScriptError : public Error {
 public:
  ScriptError(ErrorCode code, Location loc, const std::string& what)
      : Error(code, "line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column) + ": " + what),
        loc_(loc) {}
  Location location() const { return loc_; }

 private:
  Location loc_;
};

namespace detail {

struct Token {
  enum class Kind { Identifier, Number, String, Symbol, Newline, End };
  Kind kind;
  std::string text;
  Location loc;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += static_cast<int>(n);
  };
  while (i < src.size()) {
    char c = src[i];
    Location loc{line, col};
    if (c == '\n') {
      out.push_back({Token::Kind::Newline, "\n", loc});
      ++i, ++line, col = 1;
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_' || src[i] == '\''))
        advance(1);
      out.push_back({Token::Kind::Identifier, std::string(src.substr(start, i - start)), loc});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance(1);
      out.push_back({Token::Kind::Number, std::string(src.substr(start, i - start)), loc});
    } else if (c == '"') {
      std::size_t start = ++i;
      ++col;
      while (i < src.size() && src[i] != '"' && src[i] != '\n') advance(1);
      if (i >= src.size() || src[i] != '"') throw ScriptError(ErrorCode::SyntaxError, loc, "unterminated string");
      out.push_back({Token::Kind::String, std::string(src.substr(start, i - start)), loc});
      advance(1);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Token::Kind::Symbol, "->", loc});
      advance(2);
    } else if (std::string_view("()=,.+-*/@").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, c), loc});
      advance(1);
    } else {
      throw ScriptError(ErrorCode::SyntaxError, loc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::Newline, "\n", {line, col}});
  out.push_back({Token::Kind::End, "", {line, col}});
  return out;
}

inline bool is_keyword(const std::string& s) {
  static const char* const words[] = {"point", "line",   "assert",  "meet",  "reflect", "across",
                                      "join",  "perpbisect", "bisect", "through", "slope", "vertical",
                                      "fold5", "fold6",  "eq",      "on",    "minpoly", "degree"};
  for (const char* w : words)
    if (s == w) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  ExprPtr standalone_expression() {
    ExprPtr e = expression();
    while (peek().kind == Token::Kind::Newline) ++pos_;
    if (peek().kind != Token::Kind::End) fail(peek(), "unexpected input after expression");
    return e;
  }

  Script parse() {
    Script script;
    while (peek().kind != Token::Kind::End) {
      if (peek().kind == Token::Kind::Newline) {
        ++pos_;
        continue;
      }
      script.statements.push_back(statement());
      if (peek().kind != Token::Kind::Newline) fail(peek(), "expected end of line");
    }
    return script;
  }

 private:
  enum class Type { Point, Line };

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] static void fail(const Token& t, const std::string& what) {
    std::string near = t.kind == Token::Kind::Newline ? "end of line" : t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw ScriptError(ErrorCode::SyntaxError, t.loc, what + " near " + near);
  }

  bool is_symbol(const char* s) const { return peek().kind == Token::Kind::Symbol && peek().text == s; }
  bool is_word(const char* s) const { return peek().kind == Token::Kind::Identifier && peek().text == s; }

  void expect_symbol(const char* s) {
    if (!is_symbol(s)) fail(peek(), std::string("expected '") + s + "'");
    ++pos_;
  }
  void expect_word(const char* s) {
    if (!is_word(s)) fail(peek(), std::string("expected '") + s + "'");
    ++pos_;
  }

  const Token& identifier(const char* what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Identifier || is_keyword(t.text)) fail(t, std::string("expected ") + what);
    return next();
  }

  /// A reference to an earlier object of the given type.
  void reference(Statement& s, Type type) {
    const Token& t = identifier(type == Type::Point ? "point name" : "line name");
    check_type(t, type);
    s.refs.push_back(t.text);
    s.ref_locs.push_back(t.loc);
  }

  void check_type(const Token& t, Type type) {
    auto it = types_.find(t.text);
    if (it == types_.end()) throw ScriptError(ErrorCode::UnknownName, t.loc, "unknown name '" + t.text + "'");
    if (it->second != type)
      throw ScriptError(ErrorCode::TypeMismatch, t.loc,
                        "'" + t.text + "' is a " + (it->second == Type::Point ? "point" : "line") + ", expected a " +
                            (type == Type::Point ? "point" : "line"));
  }

  int selector() {
    if (!is_symbol("@")) fail(peek(), "expected solution selector '@k'");
    ++pos_;
    const Token& t = peek();
    if (t.kind != Token::Kind::Number) fail(t, "expected selector index");
    ++pos_;
    int k = std::stoi(t.text);
    if (k < 1) throw ScriptError(ErrorCode::SyntaxError, t.loc, "selectors start at 1");
    return k;
  }

  Statement statement() {
    const Token& head = peek();
    if (is_word("assert")) {
      ++pos_;
      return assertion(head.loc);
    }
    bool point = is_word("point");
    if (!point && !is_word("line")) fail(head, "expected 'point', 'line' or 'assert'");
    ++pos_;
    const Token& name = identifier("name");
    expect_symbol("=");
    Statement s = point ? point_rhs() : line_rhs();
    s.loc = head.loc;
    s.name = name.text;
    if (types_.count(name.text)) throw ScriptError(ErrorCode::DuplicateName, name.loc, "'" + name.text + "' is already defined");
    types_[name.text] = point ? Type::Point : Type::Line;
    return s;
  }

  Statement point_rhs() {
    Statement s;
    if (is_symbol("(")) {
      ++pos_;
      s.kind = Statement::Kind::PointLiteral;
      s.exprs.push_back(expression());
      expect_symbol(",");
      s.exprs.push_back(expression());
      expect_symbol(")");
    } else if (is_word("meet")) {
      ++pos_;
      s.kind = Statement::Kind::Meet;
      reference(s, Type::Line);
      reference(s, Type::Line);
    } else if (is_word("reflect")) {
      ++pos_;
      s.kind = Statement::Kind::Reflect;
      reference(s, Type::Point);
      expect_word("across");
      reference(s, Type::Line);
    } else {
      fail(peek(), "expected '(', 'meet' or 'reflect'");
    }
    return s;
  }

  Statement line_rhs() {
    Statement s;
    if (is_word("join") || is_word("perpbisect")) {
      s.kind = is_word("join") ? Statement::Kind::Join : Statement::Kind::PerpBisect;
      ++pos_;
      reference(s, Type::Point);
      reference(s, Type::Point);
    } else if (is_word("bisect")) {
      ++pos_;
      s.kind = Statement::Kind::Bisect;
      reference(s, Type::Line);
      reference(s, Type::Line);
      s.selector = selector();
    } else if (is_word("through")) {
      ++pos_;
      reference(s, Type::Point);
      if (is_word("vertical")) {
        ++pos_;
        s.kind = Statement::Kind::ThroughVertical;
      } else {
        expect_word("slope");
        s.kind = Statement::Kind::ThroughSlope;
        s.exprs.push_back(expression());
      }
    } else if (is_word("fold5")) {
      ++pos_;
      s.kind = Statement::Kind::Fold5;
      reference(s, Type::Point);
      expect_symbol("->");
      reference(s, Type::Line);
      expect_word("through");
      reference(s, Type::Point);
      s.selector = selector();
    } else if (is_word("fold6")) {
      ++pos_;
      s.kind = Statement::Kind::Fold6;
      reference(s, Type::Point);
      expect_symbol("->");
      reference(s, Type::Line);
      expect_symbol(",");
      reference(s, Type::Point);
      expect_symbol("->");
      reference(s, Type::Line);
      s.selector = selector();
    } else {
      fail(peek(), "expected a line construction");
    }
    return s;
  }

  Statement assertion(Location loc) {
    Statement s;
    s.loc = loc;
    if (is_word("eq")) {
      ++pos_;
      s.kind = Statement::Kind::AssertEq;
      s.exprs.push_back(expression());
      s.exprs.push_back(expression());
    } else if (is_word("on")) {
      ++pos_;
      s.kind = Statement::Kind::AssertOn;
      reference(s, Type::Point);
      reference(s, Type::Line);
    } else if (is_word("minpoly")) {
      ++pos_;
      s.kind = Statement::Kind::AssertMinpoly;
      s.exprs.push_back(expression());
      if (peek().kind != Token::Kind::String) fail(peek(), "expected quoted polynomial");
      s.text = polynomial_text(next());
    } else if (is_word("degree")) {
      ++pos_;
      s.kind = Statement::Kind::AssertDegree;
      s.exprs.push_back(expression());
      if (peek().kind != Token::Kind::Number) fail(peek(), "expected degree");
      s.degree = std::stol(next().text);
    } else {
      fail(peek(), "expected 'eq', 'on', 'minpoly' or 'degree'");
    }
    return s;
  }

  static std::string polynomial_text(const Token& t) {
    try {
      parse_polynomial(t.text);
    } catch (const Error& e) {
      throw ScriptError(ErrorCode::SyntaxError, t.loc, std::string("bad polynomial: ") + e.what());
    }
    return t.text;
  }

  static ExprPtr node(Expr::Kind kind, Location loc, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->loc = loc;
    e->args = std::move(args);
    return e;
  }

  ExprPtr expression() {
    ExprPtr e = term();
    while (is_symbol("+") || is_symbol("-")) {
      const Token& op = next();
      e = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op.loc, {e, term()});
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (is_symbol("*") || is_symbol("/")) {
      const Token& op = next();
      e = node(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op.loc, {e, factor()});
    }
    return e;
  }

  ExprPtr factor() {
    if (is_symbol("-")) {
      Location loc = next().loc;
      return node(Expr::Kind::Neg, loc, {factor()});
    }
    return atom();
  }

  ExprPtr atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) {
      ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->number = Rational(Integer(t.text));
      e->loc = t.loc;
      return e;
    }
    if (is_symbol("(")) {
      ++pos_;
      ExprPtr e = expression();
      expect_symbol(")");
      return e;
    }
    if (t.kind != Token::Kind::Identifier) fail(t, "expected expression");
    ++pos_;
    if (is_symbol("(")) return call(t);
    if (is_symbol(".")) {
      ++pos_;
      const Token& axis = peek();
      if (axis.kind != Token::Kind::Identifier || (axis.text != "x" && axis.text != "y"))
        fail(axis, "expected coordinate 'x' or 'y'");
      ++pos_;
      check_type(t, Type::Point);
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Coordinate;
      e->name = t.text;
      e->axis = axis.text[0];
      e->loc = t.loc;
      return e;
    }
    if (types_.count(t.text)) fail(t, "objects are used in expressions through '.x' or '.y'");
    throw ScriptError(ErrorCode::UnknownName, t.loc, "unknown name '" + t.text + "'");
  }

  ExprPtr call(const Token& fn) {
    expect_symbol("(");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Call;
    e->name = fn.text;
    e->loc = fn.loc;
    auto point_arg = [&] {
      const Token& t = identifier("point name");
      check_type(t, Type::Point);
      auto p = std::make_shared<Expr>();
      p->kind = Expr::Kind::PointRef;
      p->name = t.text;
      p->loc = t.loc;
      return p;
    };
    if (fn.text == "sqrt" || fn.text == "cbrt") {
      e->args.push_back(expression());
    } else if (fn.text == "dist") {
      e->args.push_back(point_arg());
      expect_symbol(",");
      e->args.push_back(point_arg());
    } else if (fn.text == "cos2pi") {
      const Token& n = peek();
      if (n.kind != Token::Kind::Number) fail(n, "cos2pi expects a positive integer");
      e->args.push_back(atom());
    } else if (fn.text == "root") {
      const Token& s = peek();
      if (s.kind != Token::Kind::String) fail(s, "root expects a quoted polynomial");
      ++pos_;
      auto str = std::make_shared<Expr>();
      str->kind = Expr::Kind::String;
      str->name = polynomial_text(s);
      str->loc = s.loc;
      e->args.push_back(str);
      expect_symbol(",");
      e->args.push_back(expression());
      expect_symbol(",");
      e->args.push_back(expression());
    } else {
      throw ScriptError(ErrorCode::UnknownName, fn.loc, "unknown function '" + fn.text + "'");
    }
    expect_symbol(")");
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, Type> types_;
};

}  // namespace detail

inline Script parse(std::string_view text) { return detail::Parser(text).parse(); }

/// Parses a standalone expression in which no objects are defined.
inline ExprPtr parse_expression(std::string_view text) { return detail::Parser(text).standalone_expression(); }

}  // namespace origami::foldlang
