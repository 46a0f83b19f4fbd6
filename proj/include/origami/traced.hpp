#pragma once

// An exact real that remembers how it was built, so that a tower certificate can be read off.
// Every square root, real cube root, and root of a quadratic or cubic over earlier values
// becomes a tower step; values that turn out rational are folded to constants.

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "origami/certificate.hpp"

namespace origami {

class Traced {
 public:
  Traced() : Traced(Rational(0)) {}
  Traced(const Rational& r) : value_(r), node_(constant_node(r)) {}
  Traced(long n) : Traced(Rational(n)) {}
  Traced(int n) : Traced(Rational(n)) {}

  /// An algebraic number given directly: degree 2 or 3 becomes a root step over Q; higher degrees
  /// are opaque and cannot be certified.
  static Traced given(const AlgebraicReal& a, const std::string& description) {
    if (a.is_rational()) return Traced(a.to_rational());
    if (a.degree() == 2 || a.degree() == 3) {
      std::vector<std::shared_ptr<const Node>> coeffs;
      for (const auto& c : a.min_poly().coefficients()) coeffs.push_back(constant_node(Rational(c)));
      return step(a, a.degree() == 2 ? StepKind::QuadraticRoot : StepKind::CubicRoot, std::move(coeffs),
                  a.interval());
    }
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Opaque;
    n->description = description;
    return Traced(a, std::move(n));
  }

  const AlgebraicReal& value() const { return value_; }

  friend Traced operator-(const Traced& a) {
    if (a.node_->kind == NodeKind::Neg) return Traced(-a.value_, a.node_->lhs);
    return make(-a.value_, NodeKind::Neg, a, a);
  }
  friend Traced operator+(const Traced& a, const Traced& b) {
    if (b.is_zero_constant()) return a;
    if (a.is_zero_constant()) return b;
    return make(a.value_ + b.value_, NodeKind::Add, a, b);
  }
  friend Traced operator-(const Traced& a, const Traced& b) {
    if (b.is_zero_constant()) return a;
    if (a.is_zero_constant()) return -b;
    return make(a.value_ - b.value_, NodeKind::Sub, a, b);
  }
  friend Traced operator*(const Traced& a, const Traced& b) {
    if (a.is_one_constant()) return b;
    if (b.is_one_constant()) return a;
    if (a.is_constant(-1)) return -b;
    if (b.is_constant(-1)) return -a;
    return make(a.value_ * b.value_, NodeKind::Mul, a, b);
  }
  friend Traced operator/(const Traced& a, const Traced& b) {
    if (b.is_one_constant()) return a;
    if (b.is_constant(-1)) return -a;
    return make(a.value_ / b.value_, NodeKind::Div, a, b);
  }
  Traced& operator+=(const Traced& o) { return *this = *this + o; }
  Traced& operator-=(const Traced& o) { return *this = *this - o; }
  Traced& operator*=(const Traced& o) { return *this = *this * o; }
  Traced& operator/=(const Traced& o) { return *this = *this / o; }

  friend bool operator==(const Traced& a, const Traced& b) { return a.value_ == b.value_; }
  friend int sign(const Traced& a) { return origami::sign(a.value_); }

  friend Traced sqrt(const Traced& a) {
    AlgebraicReal v = origami::sqrt(a.value_);
    if (v.is_rational()) return Traced(v.to_rational());
    return step(v, StepKind::Sqrt, {a.node_}, std::nullopt);
  }
  friend Traced cbrt_real(const Traced& a) {
    AlgebraicReal v = origami::cbrt_real(a.value_);
    if (v.is_rational()) return Traced(v.to_rational());
    return step(v, StepKind::Cbrt, {a.node_}, std::nullopt);
  }

  /// Distinct real roots of sum c_i x^i (effective degree 1 to 3), ascending.
  friend std::vector<Traced> real_roots(const std::vector<Traced>& coeffs) {
    std::vector<Traced> c(coeffs);
    while (!c.empty() && origami::sign(c.back().value_) == 0) c.pop_back();
    if (c.empty()) throw Error(ErrorCode::ZeroPolynomial, "real_roots of the zero polynomial");
    if (c.size() == 1) return {};
    if (c.size() > 4) throw Error(ErrorCode::InvalidArgument, "traced roots support degree at most 3");
    std::vector<AlgebraicReal> values;
    for (const auto& t : c) values.push_back(t.value_);
    std::vector<AlgebraicReal> roots = origami::real_roots(values);
    if (c.size() == 2) return {-c[0] / c[1]};
    std::vector<Traced> out;
    std::vector<std::shared_ptr<const Node>> nodes;
    for (const auto& t : c) nodes.push_back(t.node_);
    StepKind kind = c.size() == 3 ? StepKind::QuadraticRoot : StepKind::CubicRoot;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const AlgebraicReal& r = roots[i];
      if (r.is_rational()) {
        out.push_back(Traced(r.to_rational()));
        continue;
      }
      Rational lo = i > 0 ? separator(roots[i - 1], r) : Rational(floor(r.interval().low));
      Rational hi = i + 1 < roots.size() ? separator(r, roots[i + 1]) : Rational(ceil(r.interval().high));
      out.push_back(step(r, kind, nodes, RootInterval{lo, hi}));
    }
    return out;
  }

  /// The tower certificate witnessing this value. Throws NoTowerStep for opaque inputs.
  TowerCertificate certificate() const {
    Extractor ex;
    TowerCertificate cert;
    cert.value = ex.expr(node_);
    cert.steps = std::move(ex.steps);
    return cert;
  }

 private:
  enum class NodeKind { Constant, Step, Opaque, Neg, Add, Sub, Mul, Div };

  struct Node {
    NodeKind kind = NodeKind::Constant;
    Rational constant;
    std::shared_ptr<const Node> lhs, rhs;
    StepKind step_kind = StepKind::Sqrt;
    std::vector<std::shared_ptr<const Node>> data;
    std::optional<RootInterval> interval;
    std::string description;
  };

  Traced(AlgebraicReal v, std::shared_ptr<const Node> n) : value_(std::move(v)), node_(std::move(n)) {}

  static std::shared_ptr<const Node> constant_node(const Rational& r) {
    auto n = std::make_shared<Node>();
    n->constant = r;
    return n;
  }

  bool is_constant(long n) const { return node_->kind == NodeKind::Constant && node_->constant == n; }
  bool is_zero_constant() const { return is_constant(0); }
  bool is_one_constant() const { return is_constant(1); }

  static Traced make(const AlgebraicReal& v, NodeKind kind, const Traced& a, const Traced& b) {
    if (v.is_rational()) return Traced(v.to_rational());
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = a.node_;
    n->rhs = b.node_;
    return Traced(v, std::move(n));
  }

  static Traced step(const AlgebraicReal& v, StepKind kind, std::vector<std::shared_ptr<const Node>> data,
                     std::optional<RootInterval> iv) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Step;
    n->step_kind = kind;
    n->data = std::move(data);
    n->interval = std::move(iv);
    return Traced(v, std::move(n));
  }

  /// The simplest dyadic strictly between a < b.
  static Rational separator(const AlgebraicReal& a, const AlgebraicReal& b) {
    Rational width(1);
    RootInterval x = a.interval(), y = b.interval();
    while (x.high >= y.low) {
      width /= 4;
      x = a.refined(width);
      y = b.refined(width);
    }
    Rational lo = x.high, hi = y.low;
    for (Integer den = 1;; den *= 2) {
      Rational k = Rational(floor(Rational(lo * Rational(den))) + 1);
      Rational candidate = k / Rational(den);
      if (candidate < hi) return candidate;
    }
  }

  struct Extractor {
    std::vector<TowerStep> steps;
    std::map<const Node*, int> step_index;
    std::map<std::string, int> step_by_key;
    std::map<const Node*, CertExpr> memo;

    CertExpr expr(const std::shared_ptr<const Node>& n) {
      if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
      CertExpr e = build(n);
      memo.emplace(n.get(), e);
      return e;
    }

    CertExpr build(const std::shared_ptr<const Node>& n) {
      switch (n->kind) {
        case NodeKind::Constant: return CertExpr(n->constant);
        case NodeKind::Opaque:
          throw Error(ErrorCode::NoTowerStep, n->description + " has no degree 2 or 3 tower step");
        case NodeKind::Step: return CertExpr::generator(index_of(n));
        case NodeKind::Neg: return -expr(n->lhs);
        case NodeKind::Add: return expr(n->lhs) + expr(n->rhs);
        case NodeKind::Sub: return expr(n->lhs) - expr(n->rhs);
        case NodeKind::Mul: return expr(n->lhs) * expr(n->rhs);
        case NodeKind::Div: return expr(n->lhs) / expr(n->rhs);
      }
      return CertExpr();
    }

    int index_of(const std::shared_ptr<const Node>& n) {
      if (auto it = step_index.find(n.get()); it != step_index.end()) return it->second;
      std::vector<CertExpr> data;
      std::string key = to_string(n->step_kind);
      for (const auto& d : n->data) {
        data.push_back(expr(d));
        key += "|" + data.back().to_string();
      }
      if (n->interval) key += "|" + to_string(n->interval->low) + "," + to_string(n->interval->high);
      int index;
      if (auto it = step_by_key.find(key); it != step_by_key.end()) {
        index = it->second;
      } else {
        index = static_cast<int>(steps.size());
        TowerStep s = n->interval ? TowerStep::root(std::move(data), *n->interval)
                                  : (n->step_kind == StepKind::Sqrt ? TowerStep::sqrt(std::move(data[0]))
                                                                    : TowerStep::cbrt(std::move(data[0])));
        steps.push_back(std::move(s));
        step_by_key.emplace(key, index);
      }
      step_index.emplace(n.get(), index);
      return index;
    }
  };

  AlgebraicReal value_;
  std::shared_ptr<const Node> node_;
};

}  // namespace origami
