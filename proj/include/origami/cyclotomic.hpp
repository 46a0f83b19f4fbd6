#pragma once

#include <cstdint>

#include "origami/polynomial.hpp"

namespace origami {

namespace detail {

inline int moebius(std::uint64_t n) {
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace detail

/// The n-th cyclotomic polynomial, as prod over d | n of (x^d - 1)^mu(n/d).
inline IntPolynomial cyclotomic(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  IntPolynomial num = IntPolynomial::constant(1), den = IntPolynomial::constant(1);
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = detail::moebius(n / d);
    if (mu == 0) continue;
    IntPolynomial term = IntPolynomial::monomial(1, d) - IntPolynomial::constant(1);
    if (mu > 0)
      num = num * term;
    else
      den = den * term;
  }
  IntPolynomial q;
  divides_exactly(den, num, &q);
  return q;
}

}  // namespace origami
