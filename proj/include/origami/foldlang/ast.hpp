#pragma once

#include <memory>
#include <string>
#include <vector>

#include "origami/rational.hpp"

namespace origami::foldlang {

struct Location {
  int line = 0;
  int column = 0;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression sublanguage: literals, P.x / P.y, + - * /, and calls
/// sqrt(e), cbrt(e), dist(P, Q), cos2pi(n), root("poly", lo, hi).
struct Expr {
  enum class Kind { Number, Coordinate, PointRef, String, Neg, Add, Sub, Mul, Div, Call };

  Kind kind = Kind::Number;
  Rational number;
  std::string name;  // point name, function name, or string literal
  char axis = 'x';
  std::vector<ExprPtr> args;
  Location loc;
};

bool operator==(const Expr& a, const Expr& b);

inline bool same(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

inline bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.number != b.number || a.name != b.name || a.args.size() != b.args.size()) return false;
  if (a.kind == Expr::Kind::Coordinate && a.axis != b.axis) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same(a.args[i], b.args[i])) return false;
  return true;
}

struct Statement {
  enum class Kind {
    PointLiteral,     // point N = (e, e)
    Meet,             // point N = meet l m
    Reflect,          // point N = reflect P across l
    Join,             // line N = join P Q
    PerpBisect,       // line N = perpbisect P Q
    Bisect,           // line N = bisect l m @k
    ThroughSlope,     // line N = through P slope e
    ThroughVertical,  // line N = through P vertical
    Fold5,            // line N = fold5 P -> l through Q @k
    Fold6,            // line N = fold6 P -> l , Q -> m @k
    AssertEq,         // assert eq e e
    AssertOn,         // assert on P l
    AssertMinpoly,    // assert minpoly e "poly"
    AssertDegree,     // assert degree e n
  };

  Kind kind = Kind::PointLiteral;
  std::string name;               // bound name, empty for assertions
  std::vector<std::string> refs;  // referenced objects in source order
  std::vector<Location> ref_locs;
  std::vector<ExprPtr> exprs;
  int selector = 0;  // 1-based, 0 when the form takes none
  std::string text;  // polynomial text of assert minpoly
  long degree = 0;   // assert degree
  Location loc;

  bool is_assertion() const { return kind >= Kind::AssertEq; }
  bool binds_point() const { return kind == Kind::PointLiteral || kind == Kind::Meet || kind == Kind::Reflect; }
  bool binds_line() const { return !is_assertion() && !binds_point(); }

  friend bool operator==(const Statement& a, const Statement& b) {
    if (a.kind != b.kind || a.name != b.name || a.refs != b.refs || a.selector != b.selector || a.text != b.text ||
        a.degree != b.degree || a.exprs.size() != b.exprs.size())
      return false;
    for (std::size_t i = 0; i < a.exprs.size(); ++i)
      if (!same(a.exprs[i], b.exprs[i])) return false;
    return true;
  }
};

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

}  // namespace origami::foldlang
