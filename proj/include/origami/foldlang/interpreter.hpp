#pragma once

#include <map>
#include <string>
#include <vector>

#include "origami/construct.hpp"
#include "origami/foldlang/parser.hpp"
#include "origami/foldlang/printer.hpp"
#include "origami/geometry.hpp"
#include "origami/traced.hpp"

namespace origami::foldlang {

using origami::to_string;

using TPoint = Point<Traced>;
using TLine = Line<Traced>;

struct Binding {
  std::string name;
  Location loc;
  bool is_point = true;
  TPoint point;
  TLine line = TLine::from_coefficients(Traced(1), Traced(0), Traced(0));

  /// Point: (x, y). Line: (a, b, c).
  std::vector<Traced> coordinates() const {
    if (is_point) return {point.x, point.y};
    return {line.a(), line.b(), line.c()};
  }
};

struct AssertionResult {
  Location loc;
  std::string text;
  bool passed = false;
  std::string detail;
};

class Environment {
 public:
  const std::vector<Binding>& bindings() const { return bindings_; }
  const std::vector<AssertionResult>& assertions() const { return assertions_; }

  const Binding& at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorCode::UnknownName, "unknown name '" + name + "'");
    return bindings_[it->second];
  }
  const TPoint& point(const std::string& name) const { return at(name).point; }
  const TLine& line(const std::string& name) const { return at(name).line; }

  bool all_passed() const {
    for (const auto& a : assertions_)
      if (!a.passed) return false;
    return true;
  }

  void bind(Binding b) {
    index_[b.name] = bindings_.size();
    bindings_.push_back(std::move(b));
  }
  void record(AssertionResult r) { assertions_.push_back(std::move(r)); }

 private:
  std::vector<Binding> bindings_;
  std::map<std::string, std::size_t> index_;
  std::vector<AssertionResult> assertions_;
};

namespace detail {

class Interpreter {
 public:
  Environment run(const Script& script) {
    for (const auto& s : script.statements) {
      try {
        execute(s);
      } catch (const ScriptError&) {
        throw;
      } catch (const Error& e) {
        throw ScriptError(e.code(), s.loc, "in '" + to_string(s) + "': " + e.what());
      }
    }
    return std::move(env_);
  }

  Traced eval(const Expr& e) {
    try {
      return eval_unchecked(e);
    } catch (const ScriptError&) {
      throw;
    } catch (const Error& err) {
      throw ScriptError(err.code(), e.loc, err.what());
    }
  }

 private:
  Traced eval_unchecked(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Number: return Traced(e.number);
      case Expr::Kind::Coordinate: {
        const TPoint& p = env_.point(e.name);
        return e.axis == 'x' ? p.x : p.y;
      }
      case Expr::Kind::Neg: return -eval(*e.args[0]);
      case Expr::Kind::Add: return eval(*e.args[0]) + eval(*e.args[1]);
      case Expr::Kind::Sub: return eval(*e.args[0]) - eval(*e.args[1]);
      case Expr::Kind::Mul: return eval(*e.args[0]) * eval(*e.args[1]);
      case Expr::Kind::Div: return eval(*e.args[0]) / eval(*e.args[1]);
      case Expr::Kind::Call: return call(e);
      case Expr::Kind::PointRef:
      case Expr::Kind::String: break;
    }
    throw Error(ErrorCode::TypeMismatch, "not a number: " + to_string(e));
  }

  Traced call(const Expr& e) {
    if (e.name == "sqrt") return sqrt(eval(*e.args[0]));
    if (e.name == "cbrt") return cbrt_real(eval(*e.args[0]));
    if (e.name == "dist") {
      const TPoint& p = env_.point(e.args[0]->name);
      const TPoint& q = env_.point(e.args[1]->name);
      Traced dx = p.x - q.x, dy = p.y - q.y;
      return sqrt(dx * dx + dy * dy);
    }
    if (e.name == "cos2pi") {
      const Rational& n = e.args[0]->number;
      if (n < 1 || n.get_den() != 1 || !n.get_num().fits_ulong_p())
        throw Error(ErrorCode::InvalidArgument, "cos2pi expects a positive integer");
      return Traced::given(cos_2pi_over(n.get_num().get_ui()), to_string(e));
    }
    if (e.name == "root") {
      Traced lo = eval(*e.args[1]), hi = eval(*e.args[2]);
      if (!lo.value().is_rational() || !hi.value().is_rational())
        throw Error(ErrorCode::InvalidArgument, "root bounds must be rational");
      IntPolynomial f = primitive_part(parse_polynomial(e.args[0]->name));
      AlgebraicReal a = AlgebraicReal::from_root(f, {lo.value().to_rational(), hi.value().to_rational()});
      return Traced::given(a, to_string(e));
    }
    throw Error(ErrorCode::UnknownName, "unknown function '" + e.name + "'");
  }

  template <class T>
  const T& select(const std::vector<T>& options, const Statement& s, const char* what) {
    if (s.selector < 1 || static_cast<std::size_t>(s.selector) > options.size())
      throw ScriptError(ErrorCode::SelectorOutOfRange, s.loc,
                        std::string(what) + " has " + std::to_string(options.size()) + " solution(s), selector @" +
                            std::to_string(s.selector));
    return options[s.selector - 1];
  }

  void verify_fold(const TPoint& p, const TLine& l, const TLine& crease, const Statement& s) {
    if (!l.contains(reflect(p, crease)))
      throw ScriptError(ErrorCode::DegenerateFold, s.loc, "selected crease does not reflect the point onto its line");
  }

  void bind_point(const Statement& s, TPoint p) {
    Binding b;
    b.name = s.name;
    b.loc = s.loc;
    b.is_point = true;
    b.point = std::move(p);
    env_.bind(std::move(b));
  }

  void bind_line(const Statement& s, TLine l) {
    Binding b;
    b.name = s.name;
    b.loc = s.loc;
    b.is_point = false;
    b.line = std::move(l);
    env_.bind(std::move(b));
  }

  void assertion(const Statement& s, bool passed, std::string detail) {
    env_.record({s.loc, to_string(s), passed, std::move(detail)});
  }

  static std::string show(const Traced& t) { return to_string(t.value()); }

  void execute(const Statement& s) {
    const auto& r = s.refs;
    switch (s.kind) {
      case Statement::Kind::PointLiteral: return bind_point(s, {eval(*s.exprs[0]), eval(*s.exprs[1])});
      case Statement::Kind::Meet: return bind_point(s, meet(env_.line(r[0]), env_.line(r[1])));
      case Statement::Kind::Reflect: return bind_point(s, reflect(env_.point(r[0]), env_.line(r[1])));
      case Statement::Kind::Join: return bind_line(s, join(env_.point(r[0]), env_.point(r[1])));
      case Statement::Kind::PerpBisect: return bind_line(s, perp_bisector(env_.point(r[0]), env_.point(r[1])));
      case Statement::Kind::Bisect: {
        auto lines = angle_bisectors(env_.line(r[0]), env_.line(r[1]));
        return bind_line(s, select(lines, s, "bisect"));
      }
      case Statement::Kind::ThroughSlope: return bind_line(s, TLine::through(env_.point(r[0]), eval(*s.exprs[0])));
      case Statement::Kind::ThroughVertical: return bind_line(s, TLine::vertical_through(env_.point(r[0])));
      case Statement::Kind::Fold5: {
        const TPoint& p = env_.point(r[0]);
        const TLine& l = env_.line(r[1]);
        const TPoint& q = env_.point(r[2]);
        auto sols = fold5(p, l, q);
        const auto& sol = select(sols, s, "fold5");
        verify_fold(p, l, sol.crease, s);
        if (!sol.crease.contains(q)) throw ScriptError(ErrorCode::DegenerateFold, s.loc, "selected crease misses Q");
        return bind_line(s, sol.crease);
      }
      case Statement::Kind::Fold6: {
        const TPoint& p = env_.point(r[0]);
        const TLine& l = env_.line(r[1]);
        const TPoint& q = env_.point(r[2]);
        const TLine& m = env_.line(r[3]);
        auto sols = fold6(p, l, q, m);
        const auto& sol = select(sols, s, "fold6");
        verify_fold(p, l, sol.crease, s);
        verify_fold(q, m, sol.crease, s);
        return bind_line(s, sol.crease);
      }
      case Statement::Kind::AssertEq: {
        Traced a = eval(*s.exprs[0]), b = eval(*s.exprs[1]);
        bool ok = a == b;
        return assertion(s, ok, ok ? show(a) : "left " + show(a) + " differs from right " + show(b));
      }
      case Statement::Kind::AssertOn: {
        bool ok = env_.line(r[1]).contains(env_.point(r[0]));
        const TPoint& p = env_.point(r[0]);
        return assertion(s, ok, "(" + show(p.x) + ", " + show(p.y) + ")" + (ok ? " lies on " : " is off ") + r[1]);
      }
      case Statement::Kind::AssertMinpoly: {
        Traced a = eval(*s.exprs[0]);
        IntPolynomial expected = normalize(primitive_part(parse_polynomial(s.text)));
        bool ok = a.value().min_poly() == expected;
        return assertion(s, ok, (ok ? "value " : "value " + show(a) + " has minimal polynomial ") +
                                    (ok ? show(a) : to_string(a.value().min_poly()) + ", not " + to_string(expected)));
      }
      case Statement::Kind::AssertDegree: {
        Traced a = eval(*s.exprs[0]);
        int d = a.value().degree();
        bool ok = d == s.degree;
        return assertion(s, ok, "degree " + std::to_string(d) + " for " + show(a));
      }
    }
  }

  Environment env_;
};

}  // namespace detail

/// Runs the statements in order. Assertion outcomes are recorded, not thrown;
/// construction failures raise ScriptError at the offending statement.
inline Environment evaluate(const Script& script) { return detail::Interpreter().run(script); }

/// Throws AssertionFailed for the first failed assertion.
inline void require_assertions(const Environment& env) {
  for (const auto& a : env.assertions())
    if (!a.passed) throw ScriptError(ErrorCode::AssertionFailed, a.loc, a.text + ": " + a.detail);
}

/// Evaluates a closed expression (no object references).
inline Traced evaluate_expression(const Expr& e) { return detail::Interpreter().eval(e); }

}  // namespace origami::foldlang
