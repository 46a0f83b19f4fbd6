#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "origami/algebraic_real.hpp"

namespace origami {

namespace detail {

inline Rational determinant(std::vector<std::vector<Rational>> a) {
  std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Q[y_1..y_k] / (m_1(y_1), ..., m_k(y_k)) with the monomial basis in mixed radix.
class TensorAlgebra {
 public:
  explicit TensorAlgebra(const std::vector<AlgebraicReal>& generators) {
    std::size_t stride = 1;
    for (const auto& g : generators) {
      moduli_.push_back(monic(to_rational(g.min_poly())));
      degrees_.push_back(static_cast<std::size_t>(g.degree()));
      strides_.push_back(stride);
      stride *= static_cast<std::size_t>(g.degree());
    }
    size_ = stride;
  }

  std::size_t size() const { return size_; }

  /// Matrix of multiplication by constant + sum weights[j] * y_j (column b = image of basis b).
  std::vector<std::vector<Rational>> multiplication_matrix(const Rational& constant,
                                                           const std::vector<Rational>& weights) const {
    std::vector<std::vector<Rational>> m(size_, std::vector<Rational>(size_, 0));
    for (std::size_t b = 0; b < size_; ++b) {
      m[b][b] += constant;
      for (std::size_t j = 0; j < moduli_.size(); ++j) {
        if (weights[j] == 0) continue;
        std::size_t e = (b / strides_[j]) % degrees_[j];
        if (e + 1 < degrees_[j]) {
          m[b + strides_[j]][b] += weights[j];
        } else {
          std::size_t base = b - e * strides_[j];
          for (std::size_t t = 0; t < degrees_[j]; ++t)
            m[base + t * strides_[j]][b] -= weights[j] * moduli_[j][t];
        }
      }
    }
    return m;
  }

 private:
  std::vector<RationalPolynomial> moduli_;
  std::vector<std::size_t> degrees_, strides_;
  std::size_t size_ = 1;
};

inline std::vector<AlgebraicReal> trimmed(std::span<const AlgebraicReal> coeffs) {
  std::vector<AlgebraicReal> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && sign(c.back()) == 0) c.pop_back();
  if (c.empty()) throw Error(ErrorCode::ZeroPolynomial, "polynomial with all-zero coefficients");
  return c;
}

inline AlgebraicReal horner(const std::vector<AlgebraicReal>& coeffs, const AlgebraicReal& x) {
  AlgebraicReal acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Interval screen, then exact evaluation: does sum c_i x^i vanish at the candidate?
inline bool vanishes_at(const std::vector<AlgebraicReal>& coeffs, const AlgebraicReal& x) {
  std::vector<Tracker> tc;
  for (const auto& c : coeffs) tc.emplace_back(c);
  Tracker tx(x);
  for (int round = 0; round < 24; ++round) {
    Interval acc = Interval::point(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * tx.current() + tc[i].current();
    if (!acc.contains_zero()) return false;
    tx.tighten();
    for (auto& t : tc) t.tighten();
  }
  return sign(horner(coeffs, x)) == 0;
}

}  // namespace detail

/// An integer polynomial whose roots contain every root of sum coeffs[i] x^i: the product of all
/// conjugate polynomials, i.e. the iterated resultant against the coefficients' minimal polynomials,
/// computed as the determinant of the multiplication map in the tensor algebra of those polynomials.
inline IntPolynomial norm_polynomial(std::span<const AlgebraicReal> coeffs) {
  std::vector<AlgebraicReal> c = detail::trimmed(coeffs);
  std::vector<AlgebraicReal> gens;
  std::vector<int> which(c.size(), -1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_rational()) continue;
    auto it = std::find(gens.begin(), gens.end(), c[i]);
    which[i] = static_cast<int>(it - gens.begin());
    if (it == gens.end()) gens.push_back(c[i]);
  }
  if (gens.empty()) {
    std::vector<Rational> v;
    for (const auto& x : c) v.push_back(x.to_rational());
    return primitive_part(RationalPolynomial(std::move(v)));
  }
  detail::TensorAlgebra algebra(gens);
  long n = static_cast<long>(c.size()) - 1;
  long total = n * static_cast<long>(algebra.size());
  std::vector<Rational> values;
  for (long x0 = 0; x0 <= total; ++x0) {
    Rational constant = 0, xp = 1;
    std::vector<Rational> weights(gens.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (which[i] < 0)
        constant += c[i].to_rational() * xp;
      else
        weights[static_cast<std::size_t>(which[i])] += xp;
      xp *= x0;
    }
    values.push_back(detail::determinant(algebra.multiplication_matrix(constant, weights)));
  }
  Integer den = 1;
  for (const auto& v : values) den = lcm(den, Integer(v.get_den()));
  std::vector<Integer> scaled;
  for (const auto& v : values) {
    Rational s = v * den;
    scaled.push_back(s.get_num());
  }
  return detail::interpolate_at_naturals(scaled);
}

/// Distinct real roots of sum coeffs[i] x^i, ascending.
inline std::vector<AlgebraicReal> real_roots(std::span<const AlgebraicReal> coeffs) {
  std::vector<AlgebraicReal> c = detail::trimmed(coeffs);
  std::vector<AlgebraicReal> out;
  if (c.size() == 1) return out;
  if (c.size() == 2) return {-c[0] / c[1]};
  bool all_rational = std::all_of(c.begin(), c.end(), [](const AlgebraicReal& x) { return x.is_rational(); });
  IntPolynomial norm = norm_polynomial(c);
  for (const auto& f : irreducible_factors(norm)) {
    for (const auto& iv : isolate_real_roots(f)) {
      AlgebraicReal r = AlgebraicReal::from_irreducible(f, iv);
      if (all_rational || detail::vanishes_at(c, r)) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return a < b; });
  return out;
}

inline std::vector<AlgebraicReal> real_roots(std::initializer_list<AlgebraicReal> coeffs) {
  return real_roots(std::span<const AlgebraicReal>(coeffs.begin(), coeffs.size()));
}

/// The unique real root of sum coeffs[i] x^i inside `hint`.
inline AlgebraicReal root_of(std::span<const AlgebraicReal> coeffs, const RootInterval& hint) {
  std::vector<AlgebraicReal> c = detail::trimmed(coeffs);
  std::vector<AlgebraicReal> found;
  IntPolynomial norm = norm_polynomial(c);
  bool all_rational = std::all_of(c.begin(), c.end(), [](const AlgebraicReal& x) { return x.is_rational(); });
  for (const auto& f : irreducible_factors(norm)) {
    for (const auto& iv : detail::roots_inside(f, hint)) {
      AlgebraicReal r = AlgebraicReal::from_irreducible(f, iv);
      if (all_rational || detail::vanishes_at(c, r)) found.push_back(r);
    }
  }
  if (found.size() != 1)
    throw Error(ErrorCode::HintNotIsolating, "hint (" + hint.low.get_str() + ", " + hint.high.get_str() + ") holds " +
                                                 std::to_string(found.size()) + " roots");
  return found.front();
}

inline AlgebraicReal root_of(std::initializer_list<AlgebraicReal> coeffs, const RootInterval& hint) {
  return root_of(std::span<const AlgebraicReal>(coeffs.begin(), coeffs.size()), hint);
}

}  // namespace origami
