// Acceptance gate: each criterion prints one PASS/FAIL line; the exit status is nonzero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "geometry_oracles.hpp"
#include "origami/construct.hpp"
#include "origami/foldlang.hpp"
#include "test_support.hpp"

using namespace origami;
using namespace origami::foldlang;
using A = AlgebraicReal;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Command {
  int status;
  std::string out;
};

Command shell(const std::string& cmd) {
  Command c{-1, ""};
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kCli = ORIGAMI_CLI;
const std::string kScripts = std::string(ORIGAMI_SOURCE_DIR) + "/scripts/";

bool assertion_passed(const Json& report, const std::string& prefix) {
  for (const auto& a : report["assertions"])
    if (a["assertion"].get<std::string>().rfind(prefix, 0) == 0) return a["passed"].get<bool>();
  return false;
}

Outcome cube_doubling() {
  Outcome o;
  Command c = shell(kCli + " run " + kScripts + "double_cube.fold --json");
  o.require(c.status == 0, "origami run exited with " + std::to_string(c.status));
  if (!o.ok) return o;
  Json report = Json::parse(c.out);
  o.require(assertion_passed(report, "assert minpoly (1 - T.y)/T.y \"x^3-2\""), "minpoly assertion not passed");
  o.require(assertion_passed(report, "assert eq ((1 - T.y)/T.y) cbrt(2)"), "equality assertion not passed");
  Environment env = evaluate(parse(slurp(kScripts + "double_cube.fold")));
  A t = env.point("T").y.value();
  A ratio = (A(1) - t) / t;
  o.require(ratio == cbrt_real(A(2)) && ratio.min_poly() == IntPolynomial({-2, 0, 0, 1}), "(1-T.y)/T.y is not cbrt 2");
  o.detail = o.ok ? "(1-T.y)/T.y = " + to_string(ratio) : o.detail;
  return o;
}

Outcome trisection() {
  Outcome o;
  Command c = shell(kCli + " run " + kScripts + "trisect_60.fold --json");
  o.require(c.status == 0, "origami run exited with " + std::to_string(c.status));
  if (!o.ok) return o;
  Json report = Json::parse(c.out);
  o.require(assertion_passed(report, "assert minpoly I.x/dist(O, I) \"8x^3-6x-1\""), "direction cosine assertion failed");
  Environment env = evaluate(parse(slurp(kScripts + "trisect_60.fold")));
  A x = env.point("I").x.value(), y = env.point("I").y.value();
  A cosine = x / sqrt(x * x + y * y);
  o.require(cosine.min_poly() == IntPolynomial({-1, -6, 0, 8}), "cosine minpoly is " + to_string(cosine.min_poly()));
  o.detail = o.ok ? "cos of ray angle = " + to_string(cosine) : o.detail;
  return o;
}

Outcome normalized_pair_cubic() {
  Outcome o;
  auto run = [&](const std::string& a, const std::string& b) {
    Command c = shell(kCli + " solve-cubic --a " + a + " --b " + b + " --json");
    o.require(c.status == 0, "solve-cubic exited with " + std::to_string(c.status));
    return c.status == 0 ? Json::parse(c.out) : Json::object();
  };
  Json one = run("0", "-2");
  Json three = run("-7", "6");
  if (!o.ok) return o;
  o.require(one["roots"].size() == 1 && one["roots"][0]["root"]["minpoly"] == "x^3-2", "a=0 b=-2 roots wrong");
  o.require(one["verified"].get<bool>(), "a=0 b=-2 reflection check failed");
  std::vector<std::string> polys;
  for (const auto& r : three["roots"]) polys.push_back(r["root"]["minpoly"]);
  o.require(polys == std::vector<std::string>{"x+3", "x-1", "x-2"}, "a=-7 b=6 roots wrong");
  o.require(three["verified"].get<bool>(), "a=-7 b=6 reflection check failed");

  // Independent in-process double-reflection check against the parabola pair.
  for (auto [a, b] : {std::pair<long, long>{0, -2}, {-7, 6}}) {
    Point<A> f1{A(Rational(b, 2)), A(Rational(a, 2))}, f2{A(0), A(Rational(1, 2))};
    Line<A> d1 = Line<A>::from_coefficients(A(1), A(0), A(Rational(b, 2)));
    Line<A> d2 = Line<A>::from_coefficients(A(0), A(1), A(Rational(1, 2)));
    for (const auto& mu : real_roots({A(b), A(a), A(0), A(1)})) {
      bool found = false;
      for (const auto& s : fold6(f1, d1, f2, d2))
        if (s.crease.slope() == mu && d1.contains(reflect(f1, s.crease)) && d2.contains(reflect(f2, s.crease)))
          found = true;
      o.require(found, "no verified crease for root " + to_string(mu));
    }
  }
  o.detail = o.ok ? "cbrt 2 and {-3, 1, 2}, creases verified" : o.detail;
  return o;
}

Outcome degree_theorem() {
  Outcome o;
  A c2 = cbrt_real(A(2)), s2 = sqrt(A(2));
  A fifth = A::from_root(IntPolynomial({-2, 0, 0, 0, 0, 1}), {Rational(1), Rational(2)});
  A c7 = cos_2pi_over(7), c11 = cos_2pi_over(11);
  o.require(degree_test_origami(c2).passes() && !degree_test_ruler_compass(c2).passes(), "cbrt 2");
  o.require(degree_test_origami(s2).passes() && degree_test_ruler_compass(s2).passes(), "sqrt 2");
  o.require(degree_test_origami(fifth).verdict == Verdict::NotConstructible, "root of x^5-2");
  o.require(c7.degree() == 3 && degree_test_origami(c7).passes() && !degree_test_ruler_compass(c7).passes(), "cos 2pi/7");
  o.require(c11.degree() == 5 && degree_test_origami(c11).verdict == Verdict::NotConstructible, "cos 2pi/11");
  o.detail = o.ok ? "five verdicts exact" : "wrong verdict for " + o.detail;
  return o;
}

Outcome polygon_sweep() {
  Outcome o;
  for (std::uint64_t n = 3; n <= 2000; ++n) {
    std::uint64_t phi = 0;
    for (std::uint64_t k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    while (phi % 2 == 0) phi /= 2;
    while (phi % 3 == 0) phi /= 3;
    o.require(polygon_constructible(n).constructible == (phi == 1), "disagreement at n = " + std::to_string(n));
  }
  for (std::uint64_t n : {7, 9, 13, 19}) o.require(polygon_constructible(n).constructible, std::to_string(n));
  for (std::uint64_t n : {11, 22, 23, 25, 29}) o.require(!polygon_constructible(n).constructible, std::to_string(n));
  o.detail = o.ok ? "3 <= n <= 2000 agree with the 3-smooth totient oracle" : o.detail;
  return o;
}

Outcome field_closure() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5), pos(0, 12);
  auto rational = [&] { return make_rational(num(rng), den(rng)); };
  auto nonneg = [&] { return make_rational(pos(rng), den(rng)); };
  auto element = [&]() -> A {
    switch (rng() % 4) {
      case 0: return A(rational());
      case 1: return A(rational()) + sqrt(A(nonneg()));
      case 2: return cbrt_real(A(rational()));
      default: return A(rational()) * sqrt(A(nonneg())) + A(rational());
    }
  };
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    A a = element(), b = element(), c = element();
    o.require(is_equal(a + b, b + a), "commutativity of +");
    o.require(is_equal(a * (b + c), a * b + a * c), "distributivity");
    o.require(is_equal((a * b) * c, a * (b * c)), "associativity of *");
    if (sign(a) != 0) o.require(is_equal(a * (A(1) / a), A(1)), "multiplicative inverse");
    o.require(is_equal(a - a, A(0)), "additive inverse");
    checked += 5;
  }
  for (int i = 0; i < 25; ++i) {
    Rational p = nonneg(), q = nonneg(), r = rational();
    o.require(is_equal(sqrt(A(p)) * sqrt(A(p)), A(p)), "sqrt squared");
    o.require(is_equal(pow(cbrt_real(A(r)), 3), A(r)), "cbrt cubed");
    o.require(is_equal(sqrt(A(p)) * sqrt(A(q)), sqrt(A(p * q))), "sqrt product");
    checked += 3;
  }
  for (int i = 0; i < 25; ++i) {
    A a = element();
    A sq = a * a;
    o.require(is_equal(sqrt(sq) * sqrt(sq), sq), "sqrt of algebraic squared");
    checked += 1;
  }
  o.detail = o.ok ? std::to_string(checked) + " identities decided true" : o.detail;
  return o;
}

Outcome fold_suite() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  auto rat = [&] { return make_rational(num(rng), den(rng)); };
  auto point = [&] { return Point<A>{A(rat()), A(rat())}; };
  auto line = [&] {
    while (true) {
      Rational a = rat(), b = rat();
      if (a != 0 || b != 0) return Line<A>::from_coefficients(A(a), A(b), A(rat()));
    }
  };
  auto approx = [](const A& x) { return approximate(x, Rational(1, 1000000000000)).get_d(); };
  int fold5_instances = 0, fold6_instances = 0, creases = 0;
  while (fold5_instances < 50) {
    Point<A> p = point(), q = point();
    Line<A> l = line();
    if (l.contains(p)) continue;
    ++fold5_instances;
    for (const auto& s : fold5(p, l, q)) {
      ++creases;
      o.require(l.contains(reflect(p, s.crease)) && s.crease.contains(q), "fold5 crease fails reflection check");
    }
  }
  while (fold6_instances < 50) {
    Point<A> p = point(), q = point();
    Line<A> l = line(), m = line();
    if (l.contains(p) || m.contains(q) || (p == q && l == m)) continue;
    ++fold6_instances;
    auto sols = fold6(p, l, q, m);
    for (const auto& s : sols) {
      ++creases;
      o.require(l.contains(reflect(p, s.crease)) && m.contains(reflect(q, s.crease)), "fold6 crease fails reflection check");
    }
    int oracle = origami::testing::numeric_fold6_count({approx(p.x), approx(p.y)}, {approx(l.a()), approx(l.b()), approx(l.c())},
                                                       {approx(q.x), approx(q.y)}, {approx(m.a()), approx(m.b()), approx(m.c())});
    o.require(static_cast<int>(sols.size()) == oracle, "fold6 count " + std::to_string(sols.size()) + " vs oracle " +
                                                           std::to_string(oracle));
  }
  o.detail = o.ok ? "100 instances, " + std::to_string(creases) + " creases verified, fold6 counts match" : o.detail;
  return o;
}

Outcome polycore_oracles() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    IntPolynomial p = IntPolynomial::constant(static_cast<long>(rng() % 5) + 1);
    int parts = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < parts; ++k) p = p * origami::testing::random_int_poly(rng, 1 + static_cast<int>(rng() % 4), 6);
    o.require(factor_int(p).expand() == p, "factor round trip failed for " + to_string(p));
  }
  for (std::uint64_t n = 1; n <= 50; ++n) {
    IntPolynomial prod = IntPolynomial::constant(1);
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    o.require(prod == IntPolynomial::monomial(1, static_cast<int>(n)) - IntPolynomial::constant(1),
              "cyclotomic product fails at n = " + std::to_string(n));
  }
  int checked = 0;
  while (checked < 100) {
    auto p = origami::testing::random_int_poly(rng, 3 + static_cast<int>(rng() % 2), 12);
    if (gcd(p, p.derivative()).degree() > 0) continue;
    Rational b = root_bound(p);
    o.require(sturm_count(p, {-b, b}) == origami::testing::numeric_real_root_count(p), "Sturm count for " + to_string(p));
    ++checked;
  }
  o.detail = o.ok ? "100 factorizations, n <= 50 cyclotomic products, 100 Sturm counts" : o.detail;
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const char* name : {"double_cube", "trisect_60", "heptagon_degree"}) {
    std::string outputs[2], svgs[2];
    for (int k = 0; k < 2; ++k) {
      std::string svg = std::string(ORIGAMI_BINARY_DIR) + "/" + name + "_" + std::to_string(k) + ".svg";
      Command c = shell(kCli + " run " + kScripts + name + ".fold --json --svg " + svg);
      o.require(c.status == 0, std::string(name) + " exited with " + std::to_string(c.status));
      outputs[k] = c.out;
      svgs[k] = slurp(svg);
    }
    o.require(!outputs[0].empty() && outputs[0] == outputs[1], std::string(name) + " JSON differs between runs");
    o.require(!svgs[0].empty() && svgs[0] == svgs[1], std::string(name) + " SVG differs between runs");
  }
  o.detail = o.ok ? "JSON and SVG byte-identical across two runs of each script" : o.detail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {1, "cube doubling script", 10, cube_doubling},
      {2, "angle trisection script", 10, trisection},
      {3, "normalized parabola pair cubic", 0, normalized_pair_cubic},
      {4, "degree verdicts", 5, degree_theorem},
      {5, "regular polygon sweep", 30, polygon_sweep},
      {6, "field closure identities", 60, field_closure},
      {7, "randomized fold verification", 120, fold_suite},
      {8, "polynomial core oracles", 0, polycore_oracles},
      {9, "determinism of script outputs", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    bool pass = o.ok && in_time;
    failures += !pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << " [" << (pass ? "PASS" : "FAIL") << "] " << c.name << ": " << o.detail << " ("
         << secs << " s";
    if (c.limit_seconds > 0) line << ", limit " << c.limit_seconds << " s";
    line << ")";
    if (!in_time) line << " too slow";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
