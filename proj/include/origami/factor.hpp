#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "origami/gcd.hpp"
#include "origami/modular.hpp"

namespace origami {

/// p = content * prod factor_i^multiplicity_i, factors primitive irreducible with positive leading coefficient.
struct Factorization {
  Integer content;
  std::vector<std::pair<IntPolynomial, int>> factors;

  IntPolynomial expand() const {
    IntPolynomial acc = IntPolynomial::constant(content);
    for (const auto& [f, m] : factors) acc = acc * pow(f, static_cast<unsigned>(m));
    return acc;
  }
};

namespace detail {

// ---- arithmetic in Z/m[x] on IntPolynomial carriers, coefficients kept in [0, m) ----

inline IntPolynomial mod_reduce(const IntPolynomial& a, const Integer& m) {
  std::vector<Integer> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(v[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  return IntPolynomial(std::move(v));
}

inline IntPolynomial symmetric_reduce(const IntPolynomial& a, const Integer& m) {
  Integer half = m / 2;
  std::vector<Integer> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(v[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    if (v[i] > half) v[i] -= m;
  }
  return IntPolynomial(std::move(v));
}

inline Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw Error(ErrorCode::InvalidArgument, "no modular inverse");
  return r;
}

/// Division by a monic polynomial modulo m.
inline std::pair<IntPolynomial, IntPolynomial> mod_divmod_monic(const IntPolynomial& a, const IntPolynomial& b,
                                                                const Integer& m) {
  if (a.degree() < b.degree()) return {IntPolynomial{}, mod_reduce(a, m)};
  std::vector<Integer> rem = mod_reduce(a, m).coefficients();
  rem.resize(a.size());
  std::vector<Integer> quot(a.size() - b.size() + 1);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Integer q = rem[static_cast<std::size_t>(k + b.degree())];
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      Integer& slot = rem[static_cast<std::size_t>(k + j)];
      slot -= q * b[static_cast<std::size_t>(j)];
      mpz_fdiv_r(slot.get_mpz_t(), slot.get_mpz_t(), m.get_mpz_t());
    }
  }
  rem.resize(static_cast<std::size_t>(b.degree()));
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

inline IntPolynomial lift_from(const modp::Poly& a) {
  std::vector<Integer> v;
  v.reserve(a.size());
  for (auto c : a) v.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(v));
}

struct HenselPair {
  IntPolynomial g, h, s, t;
};

/// One quadratic Hensel step: f = g h mod m  ->  f = g* h* mod m^2 (h monic), with refreshed Bezout pair.
inline HenselPair hensel_step(const IntPolynomial& f, const HenselPair& in, const Integer& m) {
  Integer m2 = m * m;
  const auto& [g, h, s, t] = in;
  IntPolynomial e = mod_reduce(f - g * h, m2);
  auto [q, r] = mod_divmod_monic(s * e, h, m2);
  IntPolynomial g1 = mod_reduce(g + t * e + q * g, m2);
  IntPolynomial h1 = mod_reduce(h + r, m2);
  IntPolynomial b = mod_reduce(s * g1 + t * h1 - IntPolynomial::constant(1), m2);
  auto [c, d] = mod_divmod_monic(s * b, h1, m2);
  IntPolynomial s1 = mod_reduce(s - d, m2);
  IntPolynomial t1 = mod_reduce(t - t * b - c * g1, m2);
  return {g1, h1, s1, t1};
}

/// Lifts f = lc(f) * prod(factors) mod p to monic factors modulo p^(2^steps).
inline std::vector<IntPolynomial> multifactor_lift(const IntPolynomial& f, const std::vector<modp::Poly>& factors,
                                                   std::uint64_t p, int steps) {
  Integer big_m = pow(Integer(static_cast<unsigned long>(p)), 1ul << steps);
  if (factors.size() == 1) {
    Integer inv = mod_inverse(f.leading(), big_m);
    return {mod_reduce(f * inv, big_m)};
  }
  std::size_t half = factors.size() / 2;
  std::vector<modp::Poly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<modp::Poly> right(factors.begin() + static_cast<long>(half), factors.end());
  Integer pz(static_cast<unsigned long>(p));
  Integer lc_mod;
  mpz_fdiv_r(lc_mod.get_mpz_t(), f.leading().get_mpz_t(), pz.get_mpz_t());
  modp::Poly g0{lc_mod.get_ui()}, h0{1};
  for (const auto& x : left) g0 = modp::mul(g0, x, p);
  for (const auto& x : right) h0 = modp::mul(h0, x, p);
  auto [s0, t0] = modp::bezout(g0, h0, p);
  HenselPair pair{lift_from(g0), lift_from(h0), lift_from(s0), lift_from(t0)};
  Integer m = pz;
  for (int i = 0; i < steps; ++i) {
    pair = hensel_step(f, pair, m);
    m *= m;
  }
  auto lg = multifactor_lift(pair.g, left, p, steps);
  auto rg = multifactor_lift(pair.h, right, p, steps);
  lg.insert(lg.end(), rg.begin(), rg.end());
  return lg;
}

/// Coefficient bound for any integer factor of f.
inline Integer factor_coefficient_bound(const IntPolynomial& f) {
  Integer mx = 0;
  for (const auto& c : f.coefficients()) mx = std::max<Integer>(mx, abs(c));
  Integer n = f.degree();
  return (n + 1) * pow(Integer(2), static_cast<unsigned long>(f.degree())) * mx;
}

inline void next_subset(std::vector<std::size_t>& idx, std::size_t n, bool& done) {
  std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return;
    }
  }
  done = true;
}

/// Irreducible factors of a primitive squarefree integer polynomial with positive leading coefficient.
inline std::vector<IntPolynomial> zassenhaus(const IntPolynomial& f) {
  if (f.degree() <= 1) return {f};
  if (f[0] == 0) {
    IntPolynomial rest;
    divides_exactly(IntPolynomial::x(), f, &rest);
    auto out = zassenhaus(normalize(rest));
    out.insert(out.begin(), IntPolynomial::x());
    return out;
  }

  // Pick the prime giving the fewest modular factors among a handful of admissible ones.
  std::uint64_t best_p = 0;
  std::vector<std::pair<modp::Poly, int>> best_ddf;
  int best_count = 0, tried = 0;
  for (std::uint64_t p = 3; tried < 8; p += 2) {
    if (!modp::is_prime(p)) continue;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    modp::Poly fp = modp::reduce(f, p);
    if (modp::degree(modp::gcd(fp, modp::derivative(fp, p), p)) != 0) continue;
    ++tried;
    auto ddf = modp::distinct_degree(modp::monic(fp, p), p);
    int count = modp::count_factors(ddf);
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_ddf = ddf;
      best_count = count;
    }
    if (count == 1) break;
  }
  if (best_count == 1) return {f};

  std::uint64_t p = best_p;
  std::vector<modp::Poly> modular = modp::factor_squarefree(best_ddf, p);

  Integer bound = 2 * abs(f.leading()) * factor_coefficient_bound(f);
  int steps = 0;
  Integer pz(static_cast<unsigned long>(p));
  Integer m = pz;
  while (m <= bound) {
    m *= m;
    ++steps;
  }
  std::vector<IntPolynomial> lifted = multifactor_lift(f, modular, p, steps);

  std::vector<IntPolynomial> found;
  IntPolynomial rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool done = false;
    while (!done) {
      IntPolynomial cand = IntPolynomial::constant(rest.leading());
      for (auto i : idx) cand = mod_reduce(cand * lifted[i], m);
      cand = normalize(symmetric_reduce(cand, m));
      IntPolynomial quotient;
      if (divides_exactly(cand, rest, &quotient)) {
        found.push_back(cand);
        rest = normalize(quotient);
        std::vector<IntPolynomial> remaining;
        for (std::size_t i = 0, j = 0; i < lifted.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          remaining.push_back(lifted[i]);
        }
        lifted = std::move(remaining);
        hit = true;
        break;
      }
      next_subset(idx, lifted.size(), done);
    }
    if (!hit) ++s;
  }
  if (rest.degree() > 0) found.push_back(rest);
  return found;
}

inline bool factor_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto k = static_cast<std::size_t>(i);
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

}  // namespace detail

/// Complete factorization over the integers (Zassenhaus: modular factorization, Hensel lifting, recombination).
inline Factorization factor_int(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of zero polynomial");
  Factorization out;
  out.content = content(p);
  if (p.leading() < 0) out.content = -out.content;
  if (p.degree() == 0) return out;
  IntPolynomial prim = normalize(p);
  for (const auto& [part, mult] : squarefree_decomposition(to_rational(prim))) {
    for (auto& f : detail::zassenhaus(primitive_part(part))) out.factors.emplace_back(std::move(f), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return detail::factor_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

inline bool is_irreducible(const IntPolynomial& p) {
  if (p.degree() <= 0) return false;
  Factorization f = factor_int(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

/// Distinct irreducible factors (multiplicities dropped), normalized.
inline std::vector<IntPolynomial> irreducible_factors(const IntPolynomial& p) {
  std::vector<IntPolynomial> out;
  for (auto& [f, m] : factor_int(p).factors) out.push_back(f);
  return out;
}

}  // namespace origami
