#pragma once

#include <string>

#include "origami/foldlang/ast.hpp"

namespace origami::foldlang {

namespace detail {

inline int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    default: return 4;
  }
}

inline std::string print(const Expr& e, int context) {
  std::string out;
  int prec = precedence(e);
  switch (e.kind) {
    case Expr::Kind::Number: out = origami::to_string(e.number); break;
    case Expr::Kind::Coordinate: out = e.name + "." + e.axis; break;
    case Expr::Kind::PointRef: out = e.name; break;
    case Expr::Kind::String: out = "\"" + e.name + "\""; break;
    case Expr::Kind::Neg: out = "-" + print(*e.args[0], prec); break;
    case Expr::Kind::Add: out = print(*e.args[0], prec) + " + " + print(*e.args[1], prec + 1); break;
    case Expr::Kind::Sub: out = print(*e.args[0], prec) + " - " + print(*e.args[1], prec + 1); break;
    case Expr::Kind::Mul: out = print(*e.args[0], prec) + "*" + print(*e.args[1], prec + 1); break;
    case Expr::Kind::Div: out = print(*e.args[0], prec) + "/" + print(*e.args[1], prec + 1); break;
    case Expr::Kind::Call:
      out = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? ", " : "") + print(*e.args[i], 0);
      out += ")";
      break;
  }
  return prec < context ? "(" + out + ")" : out;
}

}  // namespace detail

inline std::string to_string(const Expr& e) { return detail::print(e, 0); }

/// Canonical one-line form of a statement; reparses to the same statement.
inline std::string to_string(const Statement& s) {
  auto e = [&](std::size_t i) { return to_string(*s.exprs[i]); };
  auto atomic = [&](std::size_t i) { return detail::print(*s.exprs[i], 4); };
  auto sel = [&] { return " @" + std::to_string(s.selector); };
  const auto& r = s.refs;
  switch (s.kind) {
    case Statement::Kind::PointLiteral: return "point " + s.name + " = (" + e(0) + ", " + e(1) + ")";
    case Statement::Kind::Meet: return "point " + s.name + " = meet " + r[0] + " " + r[1];
    case Statement::Kind::Reflect: return "point " + s.name + " = reflect " + r[0] + " across " + r[1];
    case Statement::Kind::Join: return "line " + s.name + " = join " + r[0] + " " + r[1];
    case Statement::Kind::PerpBisect: return "line " + s.name + " = perpbisect " + r[0] + " " + r[1];
    case Statement::Kind::Bisect: return "line " + s.name + " = bisect " + r[0] + " " + r[1] + sel();
    case Statement::Kind::ThroughSlope: return "line " + s.name + " = through " + r[0] + " slope " + e(0);
    case Statement::Kind::ThroughVertical: return "line " + s.name + " = through " + r[0] + " vertical";
    case Statement::Kind::Fold5:
      return "line " + s.name + " = fold5 " + r[0] + " -> " + r[1] + " through " + r[2] + sel();
    case Statement::Kind::Fold6:
      return "line " + s.name + " = fold6 " + r[0] + " -> " + r[1] + ", " + r[2] + " -> " + r[3] + sel();
    case Statement::Kind::AssertEq: return "assert eq " + atomic(0) + " " + atomic(1);
    case Statement::Kind::AssertOn: return "assert on " + r[0] + " " + r[1];
    case Statement::Kind::AssertMinpoly: return "assert minpoly " + e(0) + " \"" + s.text + "\"";
    case Statement::Kind::AssertDegree: return "assert degree " + e(0) + " " + std::to_string(s.degree);
  }
  return "";
}

inline std::string to_string(const Script& script) {
  std::string out;
  for (const auto& s : script.statements) out += to_string(s) + "\n";
  return out;
}

}  // namespace origami::foldlang
