#pragma once

#include <utility>
#include <vector>

#include "origami/polynomial.hpp"

namespace origami {

namespace detail {

inline IntPolynomial divide_content(const IntPolynomial& p, const Integer& c) {
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& x : p.coefficients()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    v.push_back(q);
  }
  return IntPolynomial(std::move(v));
}

inline IntPolynomial exact_scalar_divide(const IntPolynomial& p, const Integer& c) { return divide_content(p, c); }

/// Splits p = scale * integer polynomial with scale > 0.
inline std::pair<Rational, IntPolynomial> clear_denominators(const RationalPolynomial& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    Rational s = c * den;
    v.push_back(s.get_num());
  }
  return {Rational(1) / Rational(den), IntPolynomial(std::move(v))};
}

}  // namespace detail

/// Greatest common divisor of integer polynomials via the subresultant remainder sequence,
/// returned primitive with positive leading coefficient (content gcd included).
inline IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return normalize(a);
  Integer ca = content(a), cb = content(b);
  Integer d = origami::gcd(ca, cb);
  a = detail::divide_content(a, ca);
  b = detail::divide_content(b, cb);
  Integer g = 1, h = 1;
  while (true) {
    int delta = a.degree() - b.degree();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) return normalize(b) * d;
    if (r.degree() == 0) return IntPolynomial::constant(d);
    a = b;
    Integer divisor = g * pow(h, static_cast<unsigned long>(delta));
    b = detail::exact_scalar_divide(r, divisor);
    g = a.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      Integer num = pow(g, static_cast<unsigned long>(delta));
      Integer den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

/// Monic gcd over the rationals; gcd(p, 0) = monic(p).
inline RationalPolynomial poly_gcd(const RationalPolynomial& p, const RationalPolynomial& q) {
  if (p.is_zero()) return monic(q);
  if (q.is_zero()) return monic(p);
  IntPolynomial g = gcd(primitive_part(p), primitive_part(q));
  return monic(to_rational(g));
}

/// Resultant of integer polynomials by the subresultant algorithm.
inline Integer resultant(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  int da = a.degree(), db = b.degree();
  if (da == 0) return pow(a.leading(), static_cast<unsigned long>(db));
  if (db == 0) return pow(b.leading(), static_cast<unsigned long>(da));
  Integer ca = content(a), cb = content(b);
  a = detail::divide_content(a, ca);
  b = detail::divide_content(b, cb);
  Integer g = 1, h = 1;
  int s = 1;
  Integer t = pow(ca, static_cast<unsigned long>(db)) * pow(cb, static_cast<unsigned long>(da));
  if (da < db) {
    std::swap(a, b);
    if ((da & 1) && (db & 1)) s = -1;
  }
  while (true) {
    int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    a = b;
    if (r.is_zero()) return 0;
    Integer divisor = g * pow(h, static_cast<unsigned long>(delta));
    b = detail::exact_scalar_divide(r, divisor);
    g = a.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      Integer num = pow(g, static_cast<unsigned long>(delta));
      Integer den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) break;
  }
  int dA = a.degree();
  Integer num = pow(b.leading(), static_cast<unsigned long>(dA));
  Integer res;
  if (dA == 1) {
    res = num;
  } else {
    Integer den = pow(h, static_cast<unsigned long>(dA - 1));
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return s * t * res;
}

inline Rational resultant(const RationalPolynomial& p, const RationalPolynomial& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  auto [sp, ip] = detail::clear_denominators(p);
  auto [sq, iq] = detail::clear_denominators(q);
  Rational scale = pow(sp, static_cast<unsigned long>(q.degree())) * pow(sq, static_cast<unsigned long>(p.degree()));
  return scale * Rational(resultant(ip, iq));
}

/// p / gcd(p, p'), monic.
inline RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of zero polynomial");
  if (p.degree() == 0) return RationalPolynomial::constant(1);
  return monic(p / poly_gcd(p, p.derivative()));
}

inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  return primitive_part(squarefree_part(to_rational(p)));
}

/// Yun's algorithm: p = c * prod f_i^i with f_i monic, squarefree and pairwise coprime.
inline std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero polynomial");
  std::vector<std::pair<RationalPolynomial, int>> out;
  if (p.degree() == 0) return out;
  RationalPolynomial dp = p.derivative();
  RationalPolynomial a = poly_gcd(p, dp);
  RationalPolynomial b = p / a;
  RationalPolynomial c = dp / a;
  RationalPolynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    RationalPolynomial f = poly_gcd(b, d);
    if (f.degree() > 0) out.emplace_back(monic(f), i);
    b = b / f;
    c = d / f;
    d = c - b.derivative();
  }
  return out;
}

}  // namespace origami
