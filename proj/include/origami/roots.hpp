#pragma once

#include <vector>

#include "origami/gcd.hpp"

namespace origami {

/// Open interval (low, high) holding one real root, or the degenerate [r, r] pinning a rational root.
struct RootInterval {
  Rational low;
  Rational high;

  bool pinned() const { return low == high; }
  Rational width() const { return high - low; }
  Rational midpoint() const { return (low + high) / 2; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Sign of p(q), evaluated with integers only: sum c_i n^i d^(deg-i).
inline int sign_at(const IntPolynomial& p, const Rational& q) {
  if (p.is_zero()) return 0;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  Integer acc = 0, dpow = 1;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * n + p[static_cast<std::size_t>(i)] * dpow;
    dpow *= d;
  }
  return sgn(acc);
}

inline Rational evaluate(const IntPolynomial& p, const Rational& q) { return p.evaluate(q); }

/// Smallest power of two strictly above every root magnitude (Cauchy bound).
inline Rational root_bound(const IntPolynomial& p) {
  Rational lc = abs(Rational(p.leading()));
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(Rational(p[static_cast<std::size_t>(i)])) / lc;
    if (r > m) m = r;
  }
  Rational bound = 1 + m;
  Rational b = 1;
  while (b <= bound) b *= 2;
  return b;
}

namespace detail {

inline IntPolynomial sign_preserving_primitive(const RationalPolynomial& p) {
  IntPolynomial q = primitive_part(p);
  if (!p.is_zero() && p.leading() < 0) q = -q;
  return q;
}

}  // namespace detail

class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of zero polynomial");
    RationalPolynomial a = to_rational(p);
    chain_.push_back(p);
    RationalPolynomial b = a.derivative();
    while (!b.is_zero()) {
      chain_.push_back(detail::sign_preserving_primitive(b));
      RationalPolynomial r = -(a % b);
      a = to_rational(chain_.back());
      b = r;
      if (!b.is_zero()) b = to_rational(detail::sign_preserving_primitive(b));
    }
  }

  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& q : chain_) {
      int s = sign_at(q, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Distinct roots in (low, high); endpoints must not be roots.
  int count(const Rational& low, const Rational& high) const {
    if (sign_at(chain_.front(), low) == 0 || sign_at(chain_.front(), high) == 0)
      throw Error(ErrorCode::EndpointIsRoot, "interval endpoint is a root");
    if (low >= high) return 0;
    return variations(low) - variations(high);
  }

  const IntPolynomial& polynomial() const { return chain_.front(); }
  const std::vector<IntPolynomial>& chain() const { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Exact number of real roots of squarefree p in (low, high); a pinned interval counts its own point.
inline int sturm_count(const IntPolynomial& p, const RootInterval& iv) {
  if (iv.pinned()) return sign_at(p, iv.low) == 0 ? 1 : 0;
  return SturmSequence(p).count(iv.low, iv.high);
}

inline int sturm_count(const RationalPolynomial& p, const RootInterval& iv) {
  return sturm_count(primitive_part(p), iv);
}

/// One bisection step on an interval isolating a simple root of p.
inline RootInterval refine(const IntPolynomial& p, const RootInterval& iv) {
  if (iv.pinned()) return iv;
  Rational mid = iv.midpoint();
  int sm = sign_at(p, mid);
  if (sm == 0) return {mid, mid};
  int slow = sign_at(p, iv.low);
  if (sm == slow) return {mid, iv.high};
  return {iv.low, mid};
}

inline RootInterval refine_until(const IntPolynomial& p, RootInterval iv, const Rational& max_width) {
  while (!iv.pinned() && iv.width() >= max_width) iv = refine(p, iv);
  return iv;
}

/// Disjoint isolating intervals for the distinct real roots of p, ascending.
inline std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root isolation of zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  IntPolynomial sq = squarefree_part(p);
  SturmSequence sturm(sq);
  Rational bound = root_bound(sq);

  struct Pending {
    Rational low, high;
    int vlow, vhigh;
  };
  // Depth-first with the left half first keeps the output sorted.
  std::vector<Pending> stack;
  stack.push_back({-bound, bound, sturm.variations(-bound), sturm.variations(bound)});
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    int n = cur.vlow - cur.vhigh;
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({cur.low, cur.high});
      continue;
    }
    Rational mid = (cur.low + cur.high) / 2;
    if (sign_at(sq, mid) != 0) {
      int vm = sturm.variations(mid);
      stack.push_back({mid, cur.high, vm, cur.vhigh});
      stack.push_back({cur.low, mid, cur.vlow, vm});
      continue;
    }
    // mid is a rational root: pin it and split around a small root-free neighbourhood.
    Rational eps = (cur.high - cur.low) / 4;
    while (true) {
      Rational l = mid - eps, h = mid + eps;
      if (sign_at(sq, l) != 0 && sign_at(sq, h) != 0) {
        int vl = sturm.variations(l), vh = sturm.variations(h);
        if (vl - vh == 1) {
          stack.push_back({h, cur.high, vh, cur.vhigh});
          stack.push_back({mid, mid, 1, 0});
          stack.push_back({cur.low, l, cur.vlow, vl});
          break;
        }
      }
      eps /= 2;
    }
  }
  return out;
}

inline std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& p) {
  return isolate_real_roots(primitive_part(p));
}

}  // namespace origami
