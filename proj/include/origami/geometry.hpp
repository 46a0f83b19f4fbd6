#pragma once

// Exact plane geometry for the six fold operations, generic over an exact real field.
//
// The field type F needs: construction from Rational, + - * / and unary -, ==,
// and ADL-visible sign(F), sqrt(F) and real_roots(std::vector<F>) (ascending distinct real roots
// of sum c_i x^i).

#include <algorithm>
#include <optional>
#include <vector>

#include "origami/error.hpp"
#include "origami/rational.hpp"

namespace origami {

template <class F>
struct Point {
  F x;
  F y;

  friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
};

/// The locus a x + b y + c = 0 in canonical form: the first nonzero of (a, b) is 1.
template <class F>
class Line {
 public:
  static Line from_coefficients(const F& a, const F& b, const F& c) {
    if (sign(a) != 0) {
      F inv = F(Rational(1)) / a;
      return Line(F(Rational(1)), b * inv, c * inv);
    }
    if (sign(b) == 0) throw Error(ErrorCode::InvalidArgument, "line needs (a, b) != (0, 0)");
    F inv = F(Rational(1)) / b;
    return Line(F(Rational(0)), F(Rational(1)), c * inv);
  }

  /// y = slope * x + intercept.
  static Line with_slope(const F& slope, const F& intercept) {
    return from_coefficients(slope, F(Rational(-1)), intercept);
  }

  static Line through(const Point<F>& p, const F& slope) { return with_slope(slope, p.y - slope * p.x); }
  static Line vertical_through(const Point<F>& p) {
    return from_coefficients(F(Rational(1)), F(Rational(0)), -p.x);
  }

  const F& a() const { return a_; }
  const F& b() const { return b_; }
  const F& c() const { return c_; }

  bool is_vertical() const { return sign(b_) == 0; }
  /// Requires a non-vertical line.
  F slope() const { return -a_ / b_; }
  F evaluate(const Point<F>& p) const { return a_ * p.x + b_ * p.y + c_; }
  bool contains(const Point<F>& p) const { return sign(evaluate(p)) == 0; }

  friend bool operator==(const Line& l, const Line& m) { return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_; }

 private:
  Line(F a, F b, F c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  F a_, b_, c_;
};

template <class F>
struct Parabola {
  Point<F> focus;
  Line<F> directrix;
};

template <class F>
struct FoldSolution {
  Line<F> crease;
  Point<F> touch1;
  std::optional<Point<F>> touch2;
};

/// a x^2 + b x y + c y^2 + d x + e y + f = 0.
template <class F>
struct ConicCoefficients {
  F a, b, c, d, e, f;

  F evaluate(const Point<F>& p) const {
    return a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f;
  }
  F discriminant() const { return b * b - F(Rational(4)) * a * c; }
  /// Determinant of the symmetric 3x3 matrix of the conic.
  F determinant() const {
    F h(Rational(1, 2));
    F b2 = b * h, d2 = d * h, e2 = e * h;
    return a * (c * f - e2 * e2) - b2 * (b2 * f - e2 * d2) + d2 * (b2 * e2 - c * d2);
  }
};

namespace detail {

/// Ascending slope, vertical lines last.
template <class F>
bool slope_less(const Line<F>& l, const Line<F>& m) {
  if (l.is_vertical() || m.is_vertical()) return !l.is_vertical() && m.is_vertical();
  return sign(l.slope() - m.slope()) < 0;
}

template <class F>
void sort_and_dedupe(std::vector<Line<F>>& lines) {
  std::vector<Line<F>> unique;
  for (auto& l : lines)
    if (std::find(unique.begin(), unique.end(), l) == unique.end()) unique.push_back(std::move(l));
  std::stable_sort(unique.begin(), unique.end(), slope_less<F>);
  lines = std::move(unique);
}

template <class F>
F focus_offset(const Point<F>& focus, const Line<F>& directrix) {
  F k = directrix.evaluate(focus);
  if (sign(k) == 0) throw Error(ErrorCode::DegenerateFold, "focus lies on the directrix");
  return k;
}

}  // namespace detail

template <class F>
Line<F> join(const Point<F>& p, const Point<F>& q) {
  if (p == q) throw Error(ErrorCode::CoincidentPoints, "join needs two distinct points");
  return Line<F>::from_coefficients(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y);
}

template <class F>
Point<F> meet(const Line<F>& l, const Line<F>& m) {
  F det = l.a() * m.b() - m.a() * l.b();
  if (sign(det) == 0) {
    if (l == m) throw Error(ErrorCode::IdenticalLines, "meet of a line with itself");
    throw Error(ErrorCode::ParallelLines, "meet of parallel lines");
  }
  return {(l.b() * m.c() - m.b() * l.c()) / det, (l.c() * m.a() - m.c() * l.a()) / det};
}

template <class F>
Line<F> perp_bisector(const Point<F>& p, const Point<F>& q) {
  if (p == q) throw Error(ErrorCode::CoincidentPoints, "perpendicular bisector needs two distinct points");
  F half(Rational(1, 2));
  return Line<F>::from_coefficients(q.x - p.x, q.y - p.y,
                                    (p.x * p.x + p.y * p.y - q.x * q.x - q.y * q.y) * half);
}

/// Both bisectors of intersecting lines (ordered by slope, vertical last) or the midline of parallel ones.
template <class F>
std::vector<Line<F>> angle_bisectors(const Line<F>& l, const Line<F>& m) {
  if (l == m) throw Error(ErrorCode::IdenticalLines, "bisector of a line with itself");
  F u = sqrt(l.a() * l.a() + l.b() * l.b());
  F v = sqrt(m.a() * m.a() + m.b() * m.b());
  std::vector<Line<F>> out;
  for (int s : {1, -1}) {
    F sv = F(Rational(s)) / v;
    F a = l.a() / u + m.a() * sv, b = l.b() / u + m.b() * sv, c = l.c() / u + m.c() * sv;
    if (sign(a) == 0 && sign(b) == 0) continue;
    out.push_back(Line<F>::from_coefficients(a, b, c));
  }
  detail::sort_and_dedupe(out);
  return out;
}

template <class F>
Point<F> reflect(const Point<F>& p, const Line<F>& l) {
  F d = l.evaluate(p) / (l.a() * l.a() + l.b() * l.b());
  F two(Rational(2));
  return {p.x - two * l.a() * d, p.y - two * l.b() * d};
}

/// Where the crease touches the parabola: on the crease, above the reflected focus along the axis direction.
template <class F>
Point<F> tangency_point(const Point<F>& focus, const Line<F>& directrix, const Line<F>& crease) {
  Point<F> image = reflect(focus, crease);
  Line<F> axis_parallel = Line<F>::from_coefficients(directrix.b(), -directrix.a(),
                                                     directrix.a() * image.y - directrix.b() * image.x);
  return meet(crease, axis_parallel);
}

template <class F>
bool folds_onto(const Point<F>& p, const Line<F>& l, const Line<F>& crease) {
  return l.contains(reflect(p, crease));
}

/// Creases through q that reflect p onto l: tangents through q to the parabola with focus p and directrix l.
template <class F>
std::vector<FoldSolution<F>> fold5(const Point<F>& p, const Line<F>& l, const Point<F>& q) {
  F k = detail::focus_offset(p, l);
  F g = p.x - q.x, h = p.y - q.y;
  F two(Rational(2));
  const F &a = l.a(), &b = l.b();
  // Dual-conic tangency k(u^2+v^2) - 2(au+bv)(ug+vh) = 0 with the crease normal (u, v) = (mu, -1).
  std::vector<F> quad{k - two * b * h, two * (a * h + b * g), k - two * a * g};
  std::vector<Line<F>> creases;
  for (const F& mu : real_roots(quad)) creases.push_back(Line<F>::with_slope(mu, q.y - mu * q.x));
  if (sign(quad[2]) == 0) creases.push_back(Line<F>::vertical_through(q));
  detail::sort_and_dedupe(creases);
  std::vector<FoldSolution<F>> out;
  for (const auto& crease : creases) {
    if (!folds_onto(p, l, crease)) continue;
    out.push_back({crease, tangency_point(p, l, crease), std::nullopt});
  }
  return out;
}

namespace detail {

/// Coefficients (in mu) of the tangency form at crease normal (mu, -1), split as A(mu) - 2 B(mu) w.
template <class F>
struct DualForm {
  std::vector<F> a;  // quadratic part A
  std::vector<F> b;  // linear part B
};

template <class F>
DualForm<F> dual_form(const Point<F>& focus, const Line<F>& directrix) {
  F k = focus_offset(focus, directrix);
  F two(Rational(2));
  const F &a = directrix.a(), &b = directrix.b();
  return {{k - two * b * focus.y, two * (a * focus.y + b * focus.x), k - two * a * focus.x}, {-b, a}};
}

template <class F>
std::vector<F> poly_mul(const std::vector<F>& p, const std::vector<F>& q) {
  std::vector<F> r(p.size() + q.size() - 1, F(Rational(0)));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] = r[i + j] + p[i] * q[j];
  return r;
}

template <class F>
F poly_eval(const std::vector<F>& p, const F& x) {
  F acc(Rational(0));
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace detail

/// Creases reflecting p onto l and q onto m at once: the real common tangents of two parabolas.
template <class F>
std::vector<FoldSolution<F>> fold6(const Point<F>& p, const Line<F>& l, const Point<F>& q, const Line<F>& m) {
  auto first = detail::dual_form(p, l);
  auto second = detail::dual_form(q, m);
  // Eliminating w from both forms leaves A2 B1 - A1 B2; the line at infinity has already dropped out.
  auto lhs = detail::poly_mul(second.a, first.b);
  auto rhs = detail::poly_mul(first.a, second.b);
  std::vector<F> cubic(4, F(Rational(0)));
  bool all_zero = true;
  for (std::size_t i = 0; i < 4; ++i) {
    cubic[i] = lhs[i] - rhs[i];
    if (sign(cubic[i]) != 0) all_zero = false;
  }
  if (all_zero) throw Error(ErrorCode::AmbiguousFold, "the two parabolas coincide");

  F two(Rational(2));
  std::vector<Line<F>> creases;
  for (const F& mu : real_roots(cubic)) {
    F b1 = detail::poly_eval(first.b, mu);
    if (sign(b1) == 0) continue;
    F w = detail::poly_eval(first.a, mu) / (two * b1);
    creases.push_back(Line<F>::with_slope(mu, w));
  }
  if (sign(cubic[3]) == 0 && sign(l.a()) != 0) {
    // Vertical crease x + w = 0, normal (1, 0): A(1, 0) = k - 2 a f1 is the mu^2 coefficient.
    F w = first.a[2] / (two * l.a());
    creases.push_back(Line<F>::from_coefficients(F(Rational(1)), F(Rational(0)), w));
  }
  detail::sort_and_dedupe(creases);
  std::vector<FoldSolution<F>> out;
  for (const auto& crease : creases) {
    if (!folds_onto(p, l, crease) || !folds_onto(q, m, crease)) continue;
    out.push_back({crease, tangency_point(p, l, crease), tangency_point(q, m, crease)});
  }
  return out;
}

/// Conic coefficients of the focus/directrix locus, scaled so the first nonzero coefficient is 1.
template <class F>
ConicCoefficients<F> parabola_conic_coeffs(const Parabola<F>& parabola) {
  const auto& [f, l] = parabola;
  detail::focus_offset(f, l);
  F two(Rational(2));
  F n = l.a() * l.a() + l.b() * l.b();
  ConicCoefficients<F> k{l.b() * l.b(),
                         -two * l.a() * l.b(),
                         l.a() * l.a(),
                         -two * (f.x * n + l.a() * l.c()),
                         -two * (f.y * n + l.b() * l.c()),
                         n * (f.x * f.x + f.y * f.y) - l.c() * l.c()};
  F lead = sign(k.a) != 0 ? k.a : k.c;
  F inv = F(Rational(1)) / lead;
  return {k.a * inv, k.b * inv, k.c * inv, k.d * inv, k.e * inv, k.f * inv};
}

}  // namespace origami
