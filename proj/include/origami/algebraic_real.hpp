#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "origami/interval.hpp"
#include "origami/polycore.hpp"

namespace origami {

namespace detail {

/// Coarsest dyadic grid cell (k/2^j, (k+1)/2^j) that isolates the root; depends only on the number.
inline RootInterval canonical_interval(const IntPolynomial& p, RootInterval iv) {
  SturmSequence sturm(p);
  Rational step = 1;
  for (int j = 0;; ++j) {
    while (true) {
      Integer k = floor(iv.low / step);
      Rational cell_lo = Rational(k) * step, cell_hi = Rational(k + 1) * step;
      if (iv.high <= cell_hi) {
        if (sign_at(p, cell_lo) != 0 && sign_at(p, cell_hi) != 0 && sturm.count(cell_lo, cell_hi) == 1)
          return {cell_lo, cell_hi};
        break;
      }
      iv = refine(p, iv);
    }
    step /= 2;
  }
}

/// Roots of an irreducible polynomial lying strictly inside `window` (or equal to it when pinned).
inline std::vector<RootInterval> roots_inside(const IntPolynomial& f, const RootInterval& window) {
  std::vector<RootInterval> out;
  if (window.pinned()) {
    if (sign_at(f, window.low) == 0) out.push_back(window);
    return out;
  }
  for (RootInterval iv : isolate_real_roots(f)) {
    while (true) {
      if (iv.pinned()) {
        if (window.low < iv.low && iv.low < window.high) out.push_back(iv);
        break;
      }
      if (window.low <= iv.low && iv.high <= window.high) {
        out.push_back(iv);
        break;
      }
      if (iv.high <= window.low || iv.low >= window.high) break;
      iv = refine(f, iv);
    }
  }
  return out;
}

inline IntPolynomial interpolate_at_naturals(const std::vector<Integer>& values) {
  // Newton forward differences: p(x) = sum_j delta^j v_0 * C(x, j).
  std::vector<Rational> diff(values.begin(), values.end());
  RationalPolynomial acc, basis = RationalPolynomial::constant(1);
  for (std::size_t j = 0; j < diff.size(); ++j) {
    acc += basis * diff[0];
    for (std::size_t i = 0; i + 1 < diff.size() - j; ++i) diff[i] = diff[i + 1] - diff[i];
    basis = basis * RationalPolynomial{Rational(-static_cast<long>(j)), Rational(1)} *
            Rational(1, static_cast<long>(j + 1));
  }
  return primitive_part(acc);
}

}  // namespace detail

/// A real algebraic number: irreducible primitive minimal polynomial plus an isolating interval.
/// The interval is always the canonical dyadic cell, so equal numbers compare structurally equal.
class AlgebraicReal {
 public:
  AlgebraicReal() : AlgebraicReal(Rational(0)) {}
  AlgebraicReal(const Rational& r)  // NOLINT(google-explicit-constructor)
      : minpoly_(normalize(IntPolynomial{-Integer(r.get_num()), Integer(r.get_den())})), iv_{r, r} {}
  AlgebraicReal(long v) : AlgebraicReal(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  AlgebraicReal(int v) : AlgebraicReal(Rational(v)) {}   // NOLINT(google-explicit-constructor)

  static AlgebraicReal from_rational(const Rational& r) { return AlgebraicReal(r); }

  /// The root of an irreducible polynomial isolated by `iv`; irreducibility is the caller's promise.
  static AlgebraicReal from_irreducible(const IntPolynomial& minpoly, const RootInterval& iv) {
    IntPolynomial p = normalize(minpoly);
    if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "minimal polynomial must have positive degree");
    if (p.degree() == 1) return AlgebraicReal(Rational(-p[0]) / Rational(p[1]));
    if (sturm_count(p, iv) != 1) throw Error(ErrorCode::HintNotIsolating, "interval does not isolate one root");
    return AlgebraicReal(p, detail::canonical_interval(p, iv));
  }

  /// The unique real root of `poly` in the open interval `hint` (or at the pinned point).
  static AlgebraicReal from_root(const IntPolynomial& poly, const RootInterval& hint) {
    if (poly.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root of zero polynomial");
    std::vector<std::pair<IntPolynomial, RootInterval>> found;
    for (const auto& f : irreducible_factors(poly))
      for (const auto& iv : detail::roots_inside(f, hint)) found.emplace_back(f, iv);
    if (found.size() != 1)
      throw Error(ErrorCode::HintNotIsolating, "hint (" + hint.low.get_str() + ", " + hint.high.get_str() +
                                                   ") holds " + std::to_string(found.size()) + " roots of " +
                                                   to_string(poly));
    return from_irreducible(found[0].first, found[0].second);
  }

  bool is_rational() const { return minpoly_.degree() == 1; }
  Rational to_rational() const {
    if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "value is irrational");
    return iv_.low;
  }
  int degree() const { return minpoly_.degree(); }
  const IntPolynomial& min_poly() const { return minpoly_; }
  const RootInterval& interval() const { return iv_; }

  /// A (non-canonical) isolating interval of width below `width`.
  RootInterval refined(const Rational& width) const { return refine_until(minpoly_, iv_, width); }
  Interval enclosure() const { return {iv_.low, iv_.high}; }

  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
    return a.minpoly_ == b.minpoly_ && a.iv_ == b.iv_;
  }

 private:
  AlgebraicReal(IntPolynomial p, RootInterval iv) : minpoly_(std::move(p)), iv_(std::move(iv)) {}

  IntPolynomial minpoly_;
  RootInterval iv_;
};

namespace detail {

/// Progressive bisection of a value's isolating interval.
class Tracker {
 public:
  explicit Tracker(const AlgebraicReal& a) : p_(a.min_poly()), iv_(a.interval()) {}
  Interval current() const { return {iv_.low, iv_.high}; }
  void tighten() { iv_ = refine(p_, iv_); }
  /// Tightens until zero lies strictly outside the enclosure; the value must be nonzero.
  void separate_from_zero() {
    while (iv_.low <= 0 && iv_.high >= 0) tighten();
  }

 private:
  IntPolynomial p_;
  RootInterval iv_;
};

/// Picks the unique real root of `candidate` consistent with ever-tighter enclosures of the inputs.
template <class Consistent, class Tighten>
AlgebraicReal select_root(const IntPolynomial& candidate, Consistent consistent, Tighten tighten) {
  struct Cand {
    IntPolynomial f;
    RootInterval iv;
  };
  std::vector<Cand> cands;
  for (const auto& f : irreducible_factors(candidate))
    for (const auto& iv : isolate_real_roots(f)) cands.push_back({f, iv});
  while (true) {
    std::erase_if(cands, [&](const Cand& c) { return !consistent(Interval{c.iv.low, c.iv.high}); });
    if (cands.size() == 1) return AlgebraicReal::from_irreducible(cands[0].f, cands[0].iv);
    if (cands.empty()) throw std::logic_error("root selection lost the true value");
    tighten();
    for (auto& c : cands) c.iv = refine(c.f, c.iv);
  }
}

/// Res_y(p(y), q(x - y)) by evaluation at x = 0..deg p * deg q and interpolation.
inline IntPolynomial sum_polynomial(const IntPolynomial& p, const IntPolynomial& q) {
  int n = p.degree() * q.degree();
  std::vector<Integer> values;
  for (long x0 = 0; x0 <= n; ++x0) values.push_back(resultant(p, q.compose(IntPolynomial{Integer(x0), Integer(-1)})));
  return interpolate_at_naturals(values);
}

/// Res_y(p(y), y^deg q * q(x / y)); requires q(0) != 0.
inline IntPolynomial product_polynomial(const IntPolynomial& p, const IntPolynomial& q) {
  int dq = q.degree();
  int n = p.degree() * dq;
  std::vector<Integer> values;
  for (long x0 = 0; x0 <= n; ++x0) {
    std::vector<Integer> v(static_cast<std::size_t>(dq) + 1);
    Integer xp = 1;
    for (int i = 0; i <= dq; ++i) {
      v[static_cast<std::size_t>(dq - i)] = q[static_cast<std::size_t>(i)] * xp;
      xp *= x0;
    }
    values.push_back(resultant(p, IntPolynomial(std::move(v))));
  }
  return interpolate_at_naturals(values);
}

inline AlgebraicReal shift(const AlgebraicReal& a, const Rational& r) {
  if (r == 0) return a;
  RationalPolynomial moved = to_rational(a.min_poly()).compose(RationalPolynomial{-r, Rational(1)});
  const RootInterval& iv = a.interval();
  return AlgebraicReal::from_irreducible(primitive_part(moved), {iv.low + r, iv.high + r});
}

inline AlgebraicReal scale(const AlgebraicReal& a, const Rational& r) {
  if (r == 0) return AlgebraicReal(0);
  if (r == 1) return a;
  // p(x / r) * r^deg
  const IntPolynomial& p = a.min_poly();
  int d = p.degree();
  std::vector<Rational> v(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) v[static_cast<std::size_t>(i)] = Rational(p[static_cast<std::size_t>(i)]) * pow(r, static_cast<unsigned long>(d - i));
  const RootInterval& iv = a.interval();
  RootInterval scaled = r > 0 ? RootInterval{iv.low * r, iv.high * r} : RootInterval{iv.high * r, iv.low * r};
  return AlgebraicReal::from_irreducible(primitive_part(RationalPolynomial(std::move(v))), scaled);
}

}  // namespace detail

inline AlgebraicReal operator-(const AlgebraicReal& a) {
  if (a.is_rational()) return AlgebraicReal(Rational(-a.to_rational()));
  const RootInterval& iv = a.interval();
  return AlgebraicReal::from_irreducible(a.min_poly().reflect(), {-iv.high, -iv.low});
}

inline AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicReal(Rational(a.to_rational() + b.to_rational()));
  if (b.is_rational()) return detail::shift(a, b.to_rational());
  if (a.is_rational()) return detail::shift(b, a.to_rational());
  detail::Tracker ta(a), tb(b);
  return detail::select_root(
      detail::sum_polynomial(a.min_poly(), b.min_poly()),
      [&](const Interval& j) { return j.intersects(ta.current() + tb.current()); },
      [&] {
        ta.tighten();
        tb.tighten();
      });
}

inline AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b) { return a + (-b); }

inline AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicReal(Rational(a.to_rational() * b.to_rational()));
  if (b.is_rational()) return detail::scale(a, b.to_rational());
  if (a.is_rational()) return detail::scale(b, a.to_rational());
  detail::Tracker ta(a), tb(b);
  return detail::select_root(
      detail::product_polynomial(a.min_poly(), b.min_poly()),
      [&](const Interval& j) { return j.intersects(ta.current() * tb.current()); },
      [&] {
        ta.tighten();
        tb.tighten();
      });
}

inline AlgebraicReal reciprocal(const AlgebraicReal& a) {
  if (a.is_rational()) {
    Rational r = a.to_rational();
    if (r == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
    return AlgebraicReal(Rational(1 / r));
  }
  detail::Tracker t(a);
  t.separate_from_zero();
  Interval e = t.current();
  return AlgebraicReal::from_irreducible(a.min_poly().reverse(), {Rational(1) / e.hi, Rational(1) / e.lo});
}

inline AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (b.is_rational() && b.to_rational() == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return a * reciprocal(b);
}

inline AlgebraicReal& operator+=(AlgebraicReal& a, const AlgebraicReal& b) { return a = a + b; }
inline AlgebraicReal& operator-=(AlgebraicReal& a, const AlgebraicReal& b) { return a = a - b; }
inline AlgebraicReal& operator*=(AlgebraicReal& a, const AlgebraicReal& b) { return a = a * b; }
inline AlgebraicReal& operator/=(AlgebraicReal& a, const AlgebraicReal& b) { return a = a / b; }

inline int sign(const AlgebraicReal& a) {
  if (a.is_rational()) return sgn(a.to_rational());
  detail::Tracker t(a);
  t.separate_from_zero();
  return t.current().lo > 0 ? 1 : -1;
}

inline std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a == b) return std::strong_ordering::equal;
  if (a.is_rational() && b.is_rational())
    return a.to_rational() < b.to_rational() ? std::strong_ordering::less : std::strong_ordering::greater;
  // Distinct canonical representations denote distinct numbers, so refinement separates them.
  detail::Tracker ta(a), tb(b);
  while (true) {
    Interval ea = ta.current(), eb = tb.current();
    if (ea.hi <= eb.lo) return std::strong_ordering::less;
    if (eb.hi <= ea.lo) return std::strong_ordering::greater;
    ta.tighten();
    tb.tighten();
  }
}

inline bool is_equal(const AlgebraicReal& a, const AlgebraicReal& b) { return a == b; }

inline std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b); }

inline AlgebraicReal sqrt(const AlgebraicReal& a) {
  int s = sign(a);
  if (s < 0) throw Error(ErrorCode::NegativeRadicand, "square root of a negative number");
  if (s == 0) return AlgebraicReal(0);
  if (a.is_rational()) {
    Rational r;
    if (rational_sqrt(a.to_rational(), r)) return AlgebraicReal(r);
  }
  detail::Tracker t(a);
  return detail::select_root(
      a.min_poly().inflate(2),
      [&](const Interval& j) {
        if (j.hi <= 0) return false;
        Interval pos{std::max(j.lo, Rational(0)), j.hi};
        return square(pos).intersects(t.current());
      },
      [&] { t.tighten(); });
}

/// The real cube root, for either sign.
inline AlgebraicReal cbrt_real(const AlgebraicReal& a) {
  if (a.is_rational()) {
    Rational r;
    if (rational_cbrt(a.to_rational(), r)) return AlgebraicReal(r);
  }
  detail::Tracker t(a);
  return detail::select_root(
      a.min_poly().inflate(3), [&](const Interval& j) { return cube(j).intersects(t.current()); },
      [&] { t.tighten(); });
}

inline AlgebraicReal pow(const AlgebraicReal& a, unsigned exp) {
  AlgebraicReal result(1), base = a;
  while (exp) {
    if (exp & 1u) result = result * base;
    exp >>= 1u;
    if (exp) base = base * base;
  }
  return result;
}

/// A rational within `eps` of `a`, taken from inside its isolating interval.
inline Rational approximate(const AlgebraicReal& a, const Rational& eps) {
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "approximation tolerance must be positive");
  if (a.is_rational()) return a.to_rational();
  RootInterval iv = a.refined(eps);
  return iv.midpoint();
}

inline int degree(const AlgebraicReal& a) { return a.degree(); }
inline const IntPolynomial& min_poly(const AlgebraicReal& a) { return a.min_poly(); }

inline Rational decimal_tolerance(int digits) {
  return Rational(1) / Rational(pow(Integer(10), static_cast<unsigned long>(digits + 2)));
}

/// "1.259921 (root of x^3-2 in (1,2))"; rationals print exactly.
inline std::string to_string(const AlgebraicReal& a, int digits = 6) {
  if (a.is_rational()) return a.to_rational().get_str();
  const RootInterval& iv = a.interval();
  return to_decimal(approximate(a, decimal_tolerance(digits)), digits) + " (root of " + to_string(a.min_poly()) +
         " in (" + iv.low.get_str() + "," + iv.high.get_str() + "))";
}

}  // namespace origami
