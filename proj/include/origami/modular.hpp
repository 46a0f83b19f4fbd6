#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "origami/polynomial.hpp"

namespace origami::modp {

/// Dense polynomial over Z/p for an odd prime p < 2^31, low-to-high, trimmed.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return a.empty() ? kZeroDegree : static_cast<int>(a.size()) - 1; }

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1u) r = r * b % p;
    b = b * b % p;
    e >>= 1u;
  }
  return r;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

inline Poly reduce(const IntPolynomial& f, std::uint64_t p) {
  Poly out(f.size());
  Integer r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

inline Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, std::uint64_t s, std::uint64_t p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s % p;
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) return {{}, a};
  Poly rem = a, quot(a.size() - b.size() + 1, 0);
  std::uint64_t inv = inverse(b.back(), p);
  for (std::size_t k = quot.size(); k-- > 0;) {
    std::uint64_t q = rem[k + b.size() - 1] * inv % p;
    quot[k] = q;
    if (!q) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] = (rem[k + j] + p - q * b[j] % p) % p;
  }
  rem.resize(b.size() - 1);
  trim(rem);
  trim(quot);
  return {quot, rem};
}

inline Poly rem(const Poly& a, const Poly& b, std::uint64_t p) { return divmod(a, b, p).second; }

inline Poly monic(const Poly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, inverse(a.back(), p), p);
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// Returns (s, t) with s*a + t*b = 1 for coprime a, b.
inline std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant.
  std::uint64_t inv = inverse(r0[0], p);
  return {scale(s0, inv, p), scale(t0, inv, p)};
}

inline Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  trim(r);
  return r;
}

/// base^e mod m, with the exponent given as a big integer.
inline Poly pow_mod(const Poly& base, const Integer& e, const Poly& m, std::uint64_t p) {
  Poly result{1}, b = rem(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

/// Distinct-degree factorization of a monic squarefree f: pairs (product of all degree-d factors, d).
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f, std::uint64_t p) {
  std::vector<std::pair<Poly, int>> out;
  Poly x{0, 1};
  Poly h = x;
  Integer pz(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = pow_mod(h, pz, f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(monic(f, p), degree(f));
  return out;
}

inline int count_factors(const std::vector<std::pair<Poly, int>>& ddf) {
  int n = 0;
  for (const auto& [g, d] : ddf) n += degree(g) / d;
  return n;
}

/// Cantor-Zassenhaus splitting of a product of degree-d irreducibles.
inline void equal_degree(const Poly& f, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(monic(f, p));
    return;
  }
  Integer e = (pow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly g = gcd(f, a, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
    Poly b = sub(pow_mod(a, e, f, p), Poly{1}, p);
    g = gcd(f, b, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

/// Monic irreducible factors of a monic squarefree polynomial, sorted by (degree, coefficients).
inline std::vector<Poly> factor_squarefree(const std::vector<std::pair<Poly, int>>& ddf, std::uint64_t p) {
  std::mt19937_64 rng(0x5eedULL + p);
  std::vector<Poly> out;
  for (const auto& [g, d] : ddf) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace origami::modp
