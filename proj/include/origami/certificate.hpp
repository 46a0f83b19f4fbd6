#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "origami/realalg.hpp"

namespace origami {

/// Arithmetic over rationals and earlier tower generators u0, u1, ...
class CertExpr {
 public:
  enum class Kind { Constant, Generator, Neg, Add, Sub, Mul, Div };

  CertExpr() : CertExpr(Rational(0)) {}
  CertExpr(const Rational& r) : node_(std::make_shared<Node>(Node{Kind::Constant, r, 0, {}, {}})) {}
  CertExpr(long n) : CertExpr(Rational(n)) {}

  static CertExpr generator(int index) {
    CertExpr e;
    e.node_ = std::make_shared<Node>(Node{Kind::Generator, Rational(0), index, {}, {}});
    return e;
  }
  static CertExpr unary(Kind kind, const CertExpr& a) { return make(kind, a.node_, nullptr); }
  static CertExpr binary(Kind kind, const CertExpr& a, const CertExpr& b) { return make(kind, a.node_, b.node_); }

  Kind kind() const { return node_->kind; }
  const Rational& constant() const { return node_->value; }
  int index() const { return node_->index; }
  CertExpr lhs() const { return CertExpr(node_->lhs); }
  CertExpr rhs() const { return CertExpr(node_->rhs); }

  friend CertExpr operator-(const CertExpr& a) { return unary(Kind::Neg, a); }
  friend CertExpr operator+(const CertExpr& a, const CertExpr& b) { return binary(Kind::Add, a, b); }
  friend CertExpr operator-(const CertExpr& a, const CertExpr& b) { return binary(Kind::Sub, a, b); }
  friend CertExpr operator*(const CertExpr& a, const CertExpr& b) { return binary(Kind::Mul, a, b); }
  friend CertExpr operator/(const CertExpr& a, const CertExpr& b) { return binary(Kind::Div, a, b); }

  /// Largest generator index referenced, or -1.
  int max_generator() const {
    switch (kind()) {
      case Kind::Constant: return -1;
      case Kind::Generator: return index();
      case Kind::Neg: return lhs().max_generator();
      default: return std::max(lhs().max_generator(), rhs().max_generator());
    }
  }

  AlgebraicReal evaluate(const std::vector<AlgebraicReal>& generators) const {
    switch (kind()) {
      case Kind::Constant: return AlgebraicReal(constant());
      case Kind::Generator:
        if (index() < 0 || static_cast<std::size_t>(index()) >= generators.size())
          throw Error(ErrorCode::MalformedCertificate, "reference to undefined generator u" + std::to_string(index()));
        return generators[index()];
      case Kind::Neg: return -lhs().evaluate(generators);
      case Kind::Add: return lhs().evaluate(generators) + rhs().evaluate(generators);
      case Kind::Sub: return lhs().evaluate(generators) - rhs().evaluate(generators);
      case Kind::Mul: return lhs().evaluate(generators) * rhs().evaluate(generators);
      case Kind::Div: return lhs().evaluate(generators) / rhs().evaluate(generators);
    }
    return AlgebraicReal();
  }

  std::string to_string() const { return print(0); }

 private:
  struct Node {
    Kind kind;
    Rational value;
    int index;
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit CertExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static CertExpr make(Kind kind, std::shared_ptr<const Node> a, std::shared_ptr<const Node> b) {
    return CertExpr(std::make_shared<Node>(Node{kind, Rational(0), 0, std::move(a), std::move(b)}));
  }

  static int precedence(Kind k) {
    switch (k) {
      case Kind::Add:
      case Kind::Sub:
      case Kind::Neg: return 1;
      case Kind::Mul:
      case Kind::Div: return 2;
      default: return 4;
    }
  }

  std::string print(int context) const {
    std::string out;
    int prec = precedence(kind());
    switch (kind()) {
      case Kind::Constant:
        out = origami::to_string(constant());
        if (constant() < 0 || constant().get_den() != 1) prec = 0;
        break;
      case Kind::Generator: out = "u" + std::to_string(index()); break;
      case Kind::Neg: out = "-" + lhs().print(3); break;
      case Kind::Add: out = lhs().print(prec) + "+" + rhs().print(prec + 1); break;
      case Kind::Sub: out = lhs().print(prec) + "-" + rhs().print(prec + 1); break;
      case Kind::Mul: out = lhs().print(prec) + "*" + rhs().print(prec + 1); break;
      case Kind::Div: out = lhs().print(prec) + "/" + rhs().print(prec + 1); break;
    }
    return prec < context ? "(" + out + ")" : out;
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

class CertExprParser {
 public:
  explicit CertExprParser(std::string_view text) : text_(text) {}

  CertExpr parse() {
    CertExpr e = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::MalformedCertificate,
                "expression \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  CertExpr sum() {
    CertExpr e = product();
    while (true) {
      if (accept('+'))
        e = e + product();
      else if (accept('-'))
        e = e - product();
      else
        return e;
    }
  }
  CertExpr product() {
    CertExpr e = unary();
    while (true) {
      if (accept('*'))
        e = e * unary();
      else if (accept('/'))
        e = divide(e, unary());
      else
        return e;
    }
  }
  // Folds quotients of literals so that printed rationals read back as the same constant.
  static CertExpr divide(const CertExpr& a, const CertExpr& b) {
    if (a.kind() == CertExpr::Kind::Constant && b.kind() == CertExpr::Kind::Constant && b.constant() != 0)
      return CertExpr(Rational(a.constant() / b.constant()));
    return a / b;
  }
  CertExpr unary() {
    if (accept('-')) {
      CertExpr e = unary();
      return e.kind() == CertExpr::Kind::Constant ? CertExpr(Rational(-e.constant())) : -e;
    }
    return atom();
  }
  CertExpr atom() {
    skip();
    if (accept('(')) {
      CertExpr e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (pos_ < text_.size() && text_[pos_] == 'u') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("generator index expected");
      return CertExpr::generator(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("number expected");
    return CertExpr(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline CertExpr parse_cert_expr(std::string_view text) { return detail::CertExprParser(text).parse(); }

enum class StepKind { Sqrt, Cbrt, QuadraticRoot, CubicRoot };

inline const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::Sqrt: return "sqrt";
    case StepKind::Cbrt: return "cbrt";
    case StepKind::QuadraticRoot: return "quadratic";
    case StepKind::CubicRoot: return "cubic";
  }
  return "";
}

/// One extension F_i = F_{i-1}(u_i).
/// Sqrt/Cbrt: data = {radicand}; u_i is the nonnegative square root or the real cube root.
/// QuadraticRoot/CubicRoot: data = coefficients low to high, u_i the unique root in `interval`.
struct TowerStep {
  StepKind kind;
  int degree;
  std::vector<CertExpr> data;
  std::optional<RootInterval> interval;

  static TowerStep sqrt(CertExpr radicand) { return {StepKind::Sqrt, 2, {std::move(radicand)}, std::nullopt}; }
  static TowerStep cbrt(CertExpr radicand) { return {StepKind::Cbrt, 3, {std::move(radicand)}, std::nullopt}; }
  static TowerStep root(std::vector<CertExpr> coefficients, RootInterval iv) {
    int d = static_cast<int>(coefficients.size()) - 1;
    return {d == 2 ? StepKind::QuadraticRoot : StepKind::CubicRoot, d, std::move(coefficients), iv};
  }
};

/// Chain Q = F_0 <= F_1 <= ... <= F_n with `value` an expression over the generators.
struct TowerCertificate {
  std::vector<TowerStep> steps;
  CertExpr value;

  /// Product of the step degrees, an upper bound for [F_n : Q].
  std::uint64_t total_degree() const {
    std::uint64_t d = 1;
    for (const auto& s : steps) d *= static_cast<std::uint64_t>(s.degree);
    return d;
  }
};

namespace detail {

inline AlgebraicReal evaluate_step(const TowerStep& step, const std::vector<AlgebraicReal>& gens) {
  if (step.data.empty()) throw Error(ErrorCode::MalformedCertificate, "step without defining data");
  for (const auto& e : step.data)
    if (static_cast<std::size_t>(e.max_generator() + 1) > gens.size())
      throw Error(ErrorCode::MalformedCertificate, "step refers to a later generator");
  switch (step.kind) {
    case StepKind::Sqrt:
    case StepKind::Cbrt: {
      if (step.data.size() != 1) throw Error(ErrorCode::MalformedCertificate, "radical step needs one radicand");
      AlgebraicReal r = step.data[0].evaluate(gens);
      return step.kind == StepKind::Sqrt ? sqrt(r) : cbrt_real(r);
    }
    case StepKind::QuadraticRoot:
    case StepKind::CubicRoot: {
      if (!step.interval) throw Error(ErrorCode::MalformedCertificate, "root step without interval");
      std::vector<AlgebraicReal> coeffs;
      for (const auto& e : step.data) coeffs.push_back(e.evaluate(gens));
      while (!coeffs.empty() && sign(coeffs.back()) == 0) coeffs.pop_back();
      if (coeffs.size() < 2) throw Error(ErrorCode::MalformedCertificate, "empty defining polynomial");
      std::size_t expected = step.kind == StepKind::QuadraticRoot ? 3 : 4;
      if (coeffs.size() != expected) throw Error(ErrorCode::MalformedCertificate, "defining polynomial degree mismatch");
      const RootInterval& iv = *step.interval;
      std::vector<AlgebraicReal> inside;
      for (auto& r : real_roots(coeffs)) {
        bool in = iv.pinned() ? r == AlgebraicReal(iv.low)
                              : compare(r, AlgebraicReal(iv.low)) > 0 && compare(r, AlgebraicReal(iv.high)) < 0;
        if (in) inside.push_back(r);
      }
      if (inside.size() != 1) throw Error(ErrorCode::MalformedCertificate, "interval does not isolate a root");
      return inside[0];
    }
  }
  throw Error(ErrorCode::MalformedCertificate, "unknown step kind");
}

}  // namespace detail

/// Evaluates the chain exactly. Throws MalformedCertificate on structural defects.
inline std::vector<AlgebraicReal> evaluate_generators(const TowerCertificate& cert) {
  std::vector<AlgebraicReal> gens;
  for (const auto& step : cert.steps) gens.push_back(detail::evaluate_step(step, gens));
  return gens;
}

/// True iff every step has degree 2 or 3 and the chain reproduces target exactly.
inline bool validate_certificate(const TowerCertificate& cert, const AlgebraicReal& target) {
  for (const auto& step : cert.steps) {
    if (step.degree != 2 && step.degree != 3) return false;
    bool radical = step.kind == StepKind::Sqrt || step.kind == StepKind::Cbrt;
    int implied = step.kind == StepKind::Sqrt || step.kind == StepKind::QuadraticRoot ? 2 : 3;
    if (step.degree != implied) return false;
    if (!radical && step.data.size() != static_cast<std::size_t>(implied + 1)) return false;
  }
  auto gens = evaluate_generators(cert);
  if (static_cast<std::size_t>(cert.value.max_generator() + 1) > gens.size())
    throw Error(ErrorCode::MalformedCertificate, "value refers to an undefined generator");
  return cert.value.evaluate(gens) == target;
}

}  // namespace origami
