#pragma once

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "origami/error.hpp"
#include "origami/rational.hpp"

namespace origami {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

/// Dense univariate polynomial; coefficient i multiplies x^i and the top coefficient is never zero.
template <class R>
class Polynomial {
 public:
  using coefficient_type = R;

  Polynomial() = default;
  Polynomial(std::initializer_list<R> low_to_high) : c_(low_to_high) { trim(); }
  explicit Polynomial(std::vector<R> low_to_high) : c_(std::move(low_to_high)) { trim(); }

  static Polynomial constant(const R& c) { return Polynomial(std::vector<R>{c}); }
  static Polynomial monomial(const R& c, std::size_t k) {
    std::vector<R> v(k + 1, R(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(R(1), 1); }

  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }

  R operator[](std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const std::vector<R>& coefficients() const { return c_; }
  const R& leading() const { return c_.back(); }
  R constant_term() const { return (*this)[0]; }

  template <class T>
  T evaluate(const T& at) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + T(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
  }

  /// p(q(x)).
  Polynomial compose(const Polynomial& q) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  /// p(-x).
  Polynomial reflect() const {
    std::vector<R> v = c_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Polynomial(std::move(v));
  }

  /// x^deg p(1/x).
  Polynomial reverse() const {
    std::vector<R> v(c_.rbegin(), c_.rend());
    return Polynomial(std::move(v));
  }

  /// p(x^k).
  Polynomial inflate(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<R> v((c_.size() - 1) * k + 1, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return Polynomial(std::move(v));
  }

  Polynomial operator-() const {
    std::vector<R> v = c_;
    for (auto& x : v) x = -x;
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const R& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const R& s) { return a *= s; }
  friend Polynomial operator*(const R& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<R> c_;
};

using RationalPolynomial = Polynomial<Rational>;
using IntPolynomial = Polynomial<Integer>;

template <class R>
Polynomial<R> pow(const Polynomial<R>& p, unsigned exp) {
  Polynomial<R> result = Polynomial<R>::constant(R(1)), base = p;
  while (exp) {
    if (exp & 1u) result = result * base;
    exp >>= 1u;
    if (exp) base = base * base;
  }
  return result;
}

inline RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RationalPolynomial(std::move(v));
}

inline Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) g = gcd(g, c);
  return g;
}

/// Primitive with positive leading coefficient; the zero polynomial is returned unchanged.
inline IntPolynomial normalize(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    v.push_back(q);
  }
  return IntPolynomial(std::move(v));
}

/// Clears denominators and normalizes: the canonical integer carrier of a rational polynomial.
inline IntPolynomial primitive_part(const RationalPolynomial& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    Rational scaled = c * den;
    v.push_back(scaled.get_num());
  }
  return normalize(IntPolynomial(std::move(v)));
}

inline RationalPolynomial monic(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

/// Euclidean division over the rationals.
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                const RationalPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(a.size() - b.size() + 1, Rational(0));
  const Rational& lc = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational q = rem[k + b.degree()] / lc;
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b[j];
  }
  rem.resize(b.size() - 1);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

inline RationalPolynomial operator%(const RationalPolynomial& a, const RationalPolynomial& b) {
  return divmod(a, b).second;
}
inline RationalPolynomial operator/(const RationalPolynomial& a, const RationalPolynomial& b) {
  return divmod(a, b).first;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed over the integers.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> rem = a.coefficients();
  const Integer& lc = b.leading();
  int db = b.degree();
  int steps = a.degree() - db + 1;
  for (int top = a.degree(); top >= db; --top) {
    Integer t = rem[top];
    for (auto& x : rem) x *= lc;
    for (int j = 0; j <= db; ++j) rem[top - db + j] -= t * b[j];
    --steps;
  }
  for (; steps > 0; --steps)
    for (auto& x : rem) x *= lc;
  rem.resize(db);
  return IntPolynomial(std::move(rem));
}

/// Exact quotient a / b over the integers; fails if b does not divide a.
inline bool divides_exactly(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient = nullptr) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    if (quotient) *quotient = {};
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Integer> rem = a.coefficients();
  std::vector<Integer> quot(a.size() - b.size() + 1);
  const Integer& lc = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Integer& top = rem[k + b.degree()];
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b[j];
  }
  for (int j = 0; j < b.degree(); ++j)
    if (rem[j] != 0) return false;
  if (quotient) *quotient = IntPolynomial(std::move(quot));
  return true;
}

/// Conventional infix text, e.g. "8x^3-6x-1"; non-integral coefficients print as "(3/2)x^2".
template <class R>
std::string to_string(const Polynomial<R>& p, char var = 'x') {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c(p[static_cast<std::size_t>(i)]);
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (negative)
      out += "-";
    else if (!out.empty())
      out += "+";
    bool integral = mag.get_den() == 1;
    std::string coef = integral ? mag.get_str() : "(" + mag.get_str() + ")";
    if (i == 0) {
      out += coef;
      continue;
    }
    if (mag != 1) out += coef;
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace detail {

class PolynomialTextParser {
 public:
  PolynomialTextParser(std::string_view text, char var) : s_(text), var_(var) {}

  RationalPolynomial parse() {
    RationalPolynomial acc;
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      Rational sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      acc += term() * sign;
    }
    return acc;
  }

 private:
  RationalPolynomial term() {
    skip();
    Rational coef = 1;
    bool have_coef = false;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      skip();
      Rational sign = 1;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        sign = -1;
        ++pos_;
      }
      coef = sign * number();
      skip();
      expect(')');
      have_coef = true;
    } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coef = number();
      have_coef = true;
    }
    skip();
    if (pos_ < s_.size() && s_[pos_] == '*') {
      if (!have_coef) fail("dangling '*'");
      ++pos_;
      skip();
    }
    std::size_t power = 0;
    if (pos_ < s_.size() && s_[pos_] == var_) {
      ++pos_;
      power = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        power = std::stoul(std::string(s_.substr(start, pos_ - start)));
      }
    } else if (!have_coef) {
      fail("expected coefficient or variable");
    }
    return RationalPolynomial::monomial(coef, power);
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    Integer num(std::string(s_.substr(start, pos_ - start)));
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected denominator");
      return make_rational(num, Integer(std::string(s_.substr(dstart, pos_ - dstart))));
    }
    return Rational(num);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError,
                msg + " at offset " + std::to_string(pos_) + " in polynomial '" + std::string(s_) + "'");
  }

  std::string_view s_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RationalPolynomial parse_polynomial(std::string_view text, char var = 'x') {
  return detail::PolynomialTextParser(text, var).parse();
}

}  // namespace origami
