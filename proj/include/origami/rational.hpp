#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "origami/error.hpp"

namespace origami {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" with an optional leading sign.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidArgument, "not a rational: '" + s + "'");
  }
}

inline Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational pow(const Rational& base, unsigned long exp) {
  return make_rational(pow(Integer(base.get_num()), exp), pow(Integer(base.get_den()), exp));
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Exact integer square root when `q` is the square of a rational; returns false otherwise.
inline bool rational_sqrt(const Rational& q, Rational& out) {
  if (q < 0) return false;
  Integer n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = make_rational(rn, rd);
  return true;
}

inline bool rational_cbrt(const Rational& q, Rational& out) {
  Integer n = q.get_num(), d = q.get_den();
  Integer rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3)) return false;
  if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3)) return false;
  out = make_rational(rn, rd);
  return true;
}

/// Decimal rendering rounded half away from zero to `digits` places; never uses floating point.
inline std::string to_decimal(const Rational& q, int digits) {
  Integer scale = pow(Integer(10), static_cast<unsigned long>(digits));
  Rational scaled = q * scale;
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  Integer rounded = floor(scaled + Rational(1, 2));
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && rounded != 0) body.insert(0, "-");
  return body;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace origami
