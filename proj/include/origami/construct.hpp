#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "origami/algebraic_real.hpp"
#include "origami/cyclotomic.hpp"
#include "origami/factor.hpp"

namespace origami {

enum class Verdict { PassesNecessaryTest, NotConstructible };

inline const char* to_string(Verdict v) {
  return v == Verdict::PassesNecessaryTest ? "passes-necessary" : "impossible";
}

/// degree = 2^r 3^s m with gcd(m, 6) = 1.
struct DegreeVerdict {
  std::uint64_t degree = 1;
  int r = 0;
  int s = 0;
  std::uint64_t m = 1;
  Verdict verdict = Verdict::PassesNecessaryTest;

  bool passes() const { return verdict == Verdict::PassesNecessaryTest; }
  bool operator==(const DegreeVerdict&) const = default;
};

namespace detail {

inline DegreeVerdict split_degree(std::uint64_t degree) {
  DegreeVerdict v;
  v.degree = degree;
  while (degree % 2 == 0) degree /= 2, ++v.r;
  while (degree % 3 == 0) degree /= 3, ++v.s;
  v.m = degree;
  return v;
}

}  // namespace detail

/// Necessary test for fold constructibility: the degree must be 3-smooth.
/// A pass is not a proof of constructibility; every degree up to 4 passes.
inline DegreeVerdict degree_test_origami(std::uint64_t degree) {
  DegreeVerdict v = detail::split_degree(degree);
  v.verdict = v.m == 1 ? Verdict::PassesNecessaryTest : Verdict::NotConstructible;
  return v;
}

inline DegreeVerdict degree_test_origami(const AlgebraicReal& a) { return degree_test_origami(a.degree()); }

/// Same scheme for straightedge and compass: the degree must be a power of two.
inline DegreeVerdict degree_test_ruler_compass(std::uint64_t degree) {
  DegreeVerdict v = detail::split_degree(degree);
  v.verdict = v.m == 1 && v.s == 0 ? Verdict::PassesNecessaryTest : Verdict::NotConstructible;
  return v;
}

inline DegreeVerdict degree_test_ruler_compass(const AlgebraicReal& a) {
  return degree_test_ruler_compass(a.degree());
}

struct PrimePower {
  std::uint64_t p;
  int e;
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization by trial division, ascending primes.
inline std::vector<PrimePower> factor_integer(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

struct PierpontExponents {
  int a;
  int b;
  bool operator==(const PierpontExponents&) const = default;
};

/// (a, b) with p = 2^a 3^b + 1 when p is such a prime.
inline std::optional<PierpontExponents> pierpont_prime(std::uint64_t p) {
  if (p < 2 || !modp::is_prime(p)) return std::nullopt;
  std::uint64_t q = p - 1;
  PierpontExponents e{0, 0};
  while (q % 2 == 0) q /= 2, ++e.a;
  while (q % 3 == 0) q /= 3, ++e.b;
  if (q != 1) return std::nullopt;
  return e;
}

struct PierpontFactor {
  std::uint64_t p;
  int a;
  int b;
  bool operator==(const PierpontFactor&) const = default;
};

struct PolygonVerdict {
  std::uint64_t n = 0;
  bool constructible = false;
  int r = 0;
  int s = 0;
  std::vector<PierpontFactor> primes;
  /// On failure: the first prime power of n outside 2^r 3^s that breaks the criterion.
  std::optional<PrimePower> failing;
};

/// Regular n-gon by folding: n = 2^r 3^s p_1 ... p_t with distinct Pierpont primes p_i >= 5.
inline PolygonVerdict polygon_constructible(std::uint64_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "polygon needs at least 3 sides");
  PolygonVerdict v;
  v.n = n;
  v.constructible = true;
  for (const auto& [p, e] : factor_integer(n)) {
    if (p == 2) {
      v.r = e;
    } else if (p == 3) {
      v.s = e;
    } else {
      auto ab = pierpont_prime(p);
      if (ab && e == 1) {
        v.primes.push_back({p, ab->a, ab->b});
      } else if (v.constructible) {
        v.constructible = false;
        v.failing = PrimePower{p, e};
      }
    }
  }
  return v;
}

/// Euler's totient from the prime factorization.
inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& f : factor_integer(n)) phi = phi / f.p * (f.p - 1);
  return phi;
}

/// Minimal polynomial of cos(2 pi / n), primitive with positive leading coefficient.
inline IntPolynomial cos_minpoly(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cos_minpoly index must be positive");
  if (n == 1) return IntPolynomial({-1, 1});
  if (n == 2) return IntPolynomial({1, 1});
  // Phi_n is palindromic of degree 2k: Phi_n(z) / z^k = c_k + sum_j c_{k+j} (z^j + z^-j),
  // and z^j + z^-j = D_j(w) with w = z + 1/z, D_0 = 2, D_1 = w, D_{j+1} = w D_j - D_{j-1}.
  IntPolynomial phi = cyclotomic(n);
  int k = phi.degree() / 2;
  IntPolynomial w = IntPolynomial::x();
  IntPolynomial prev = IntPolynomial::constant(2), cur = w;
  IntPolynomial g = IntPolynomial::constant(phi[k]);
  for (int j = 1; j <= k; ++j) {
    g = g + IntPolynomial::constant(phi[k + j]) * cur;
    IntPolynomial next = w * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  // cos = w / 2.
  std::vector<Integer> c(g.coefficients());
  Integer scale = 1;
  for (auto& coef : c) {
    coef *= scale;
    scale *= 2;
  }
  IntPolynomial result = normalize(IntPolynomial(std::move(c)));
  if (!is_irreducible(result)) throw Error(ErrorCode::InvalidArgument, "cos_minpoly: reducible image");
  return result;
}

/// cos(2 pi / n) as an exact algebraic number: the largest real root of its minimal polynomial.
inline AlgebraicReal cos_2pi_over(std::uint64_t n) {
  IntPolynomial f = cos_minpoly(n);
  auto roots = isolate_real_roots(f);
  return AlgebraicReal::from_irreducible(f, roots.back());
}

}  // namespace origami
