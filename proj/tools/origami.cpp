// Command-line front end: run fold scripts and query the constructibility tests.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "origami/construct.hpp"
#include "origami/foldlang.hpp"

namespace {

using namespace origami;
using namespace origami::foldlang;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_text(const Environment& env) {
  for (const auto& b : env.bindings()) {
    auto c = b.coordinates();
    if (b.is_point)
      std::cout << "point " << b.name << " = (" << to_string(c[0].value()) << ", " << to_string(c[1].value()) << ")\n";
    else
      std::cout << "line  " << b.name << " : (" << to_string(c[0].value()) << ")x + (" << to_string(c[1].value())
                << ")y + (" << to_string(c[2].value()) << ") = 0\n";
  }
  for (const auto& a : env.assertions())
    std::cout << (a.passed ? "ok     " : "FAILED ") << "line " << a.loc.line << ": " << a.text << "  [" << a.detail
              << "]\n";
}

int run(const std::string& file, const std::string& svg, bool json) {
  Script script;
  try {
    script = parse(read_file(file));
  } catch (const Error& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kUsage;
  }
  Environment env;
  try {
    env = evaluate(script);
  } catch (const Error& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kFailed;
  }
  if (!svg.empty()) {
    std::ofstream out(svg, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << svg << "'\n";
      return kFailed;
    }
    out << render_svg(env);
  }
  if (json)
    std::cout << to_json(env).dump(2) << "\n";
  else
    print_text(env);
  for (const auto& a : env.assertions())
    if (!a.passed) std::cerr << file << ": line " << a.loc.line << ": assertion failed: " << a.detail << "\n";
  return env.all_passed() ? kOk : kFailed;
}

int check_number(const std::string& text, bool json) {
  ExprPtr expr;
  try {
    expr = parse_expression(text);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  Traced value;
  try {
    value = evaluate_expression(*expr);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kFailed;
  }
  Json report = number_verdict_json(text, value.value());
  Json cert = coordinate_json(value);
  report["certificate"] = cert["certificate"];
  if (json) {
    std::cout << report.dump(2) << "\n";
    return kOk;
  }
  const auto& o = report["factorization"];
  std::cout << text << " = " << to_string(value.value()) << "\n"
            << "degree " << report["degree"] << " = 2^" << o["r"] << " * 3^" << o["s"] << " * " << o["m"] << "\n"
            << "origami: " << report["origami"].get<std::string>()
            << "\nruler and compass: " << report["ruler_compass"].get<std::string>() << "\n";
  if (report["certificate"].contains("steps")) {
    int i = 0;
    for (const auto& s : report["certificate"]["steps"]) {
      std::cout << "  u" << i++ << ": " << s["kind"].get<std::string>() << " (degree " << s["degree"] << ") ";
      if (s.contains("radicand"))
        std::cout << "of " << s["radicand"].get<std::string>() << "\n";
      else
        std::cout << s["coefficients"].dump() << " in " << s["interval"].dump() << "\n";
    }
    std::cout << "  value: " << report["certificate"]["value"].get<std::string>() << "\n";
  }
  return kOk;
}

int check_polygon(std::uint64_t n, bool json) {
  if (n < 3) {
    std::cerr << "a polygon needs at least 3 sides\n";
    return kUsage;
  }
  PolygonVerdict v = polygon_constructible(n);
  if (json) {
    std::cout << to_json(v).dump(2) << "\n";
    return kOk;
  }
  std::cout << "regular " << n << "-gon: " << (v.constructible ? "constructible by folding" : "not constructible by folding")
            << "\n";
  if (v.constructible) {
    std::cout << "  " << n << " = 2^" << v.r << " * 3^" << v.s;
    for (const auto& p : v.primes) std::cout << " * " << p.p << " (2^" << p.a << "*3^" << p.b << "+1)";
    std::cout << "\n";
  } else if (v.failing) {
    std::cout << "  obstruction: " << v.failing->p << "^" << v.failing->e << "\n";
  }
  return kOk;
}

int pierpont(std::uint64_t limit) {
  for (std::uint64_t p = 2; p <= limit; ++p)
    if (auto e = pierpont_prime(p)) std::cout << p << " = 2^" << e->a << " * 3^" << e->b << " + 1\n";
  return kOk;
}

Json point_json(const Point<AlgebraicReal>& p) { return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }
Json line_json(const Line<AlgebraicReal>& l) { return Json{{"a", to_json(l.a())}, {"b", to_json(l.b())}, {"c", to_json(l.c())}}; }

std::string line_text(const Line<AlgebraicReal>& l) {
  if (l.is_vertical()) return "x = " + to_string(-l.c());
  return "y = (" + to_string(l.slope()) + ")x + (" + to_string(-l.c() / l.b()) + ")";
}

/// Real roots of mu^3 + a mu + b, each matched with a common tangent of
/// (y - a/2)^2 = 2 b x and y = x^2 / 2 and checked by exact reflection.
int solve_cubic(const std::string& a_text, const std::string& b_text, bool json) {
  Rational a, b;
  try {
    a = parse_rational(a_text);
    b = parse_rational(b_text);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  using A = AlgebraicReal;
  std::vector<A> roots = real_roots({A(b), A(a), A(0), A(1)});
  Point<A> f1{A(b / 2), A(a / 2)}, f2{A(0), A(Rational(1, 2))};
  Line<A> d1 = Line<A>::from_coefficients(A(1), A(0), A(b / 2));
  Line<A> d2 = Line<A>::from_coefficients(A(0), A(1), A(Rational(1, 2)));
  bool degenerate = b == 0;
  std::vector<FoldSolution<A>> folds;
  if (!degenerate) folds = fold6(f1, d1, f2, d2);

  Json report{{"a", to_string(a)}, {"b", to_string(b)},
              {"cubic", to_string(IntPolynomial(primitive_part(RationalPolynomial({b, a, 0, 1}))))}};
  if (degenerate) {
    report["parabolas"] = nullptr;
    report["note"] = "b = 0 collapses the first parabola onto its axis; no crease is defined";
  } else {
    report["parabolas"] = Json::array({{{"focus", point_json(f1)}, {"directrix", line_json(d1)}},
                                        {{"focus", point_json(f2)}, {"directrix", line_json(d2)}}});
  }
  bool all_verified = true;
  Json rows = Json::array();
  if (!json) std::cout << "mu^3 + (" << to_string(a) << ")mu + (" << to_string(b) << ") = 0: " << roots.size()
                       << " real root(s)\n";
  for (const A& mu : roots) {
    Json row{{"root", to_json(mu)}, {"display", to_string(mu)}};
    if (!json) std::cout << "  mu = " << to_string(mu) << "\n";
    if (!degenerate) {
      const FoldSolution<A>* match = nullptr;
      for (const auto& f : folds)
        if (!f.crease.is_vertical() && f.crease.slope() == mu) match = &f;
      bool verified = match && folds_onto(f1, d1, match->crease) && folds_onto(f2, d2, match->crease);
      all_verified = all_verified && verified;
      row["verified"] = verified;
      if (match) {
        row["crease"] = line_json(match->crease);
        row["touch1"] = point_json(match->touch1);
        row["touch2"] = point_json(*match->touch2);
        if (!json)
          std::cout << "    crease " << line_text(match->crease) << "  reflection check: " << (verified ? "ok" : "FAILED")
                    << "\n";
      } else if (!json) {
        std::cout << "    no matching crease\n";
      }
    }
    rows.push_back(row);
  }
  if (!degenerate && folds.size() != roots.size()) all_verified = false;
  report["roots"] = rows;
  report["verified"] = all_verified;
  if (json) std::cout << report.dump(2) << "\n";
  if (degenerate && !json) std::cout << "  (b = 0: the first parabola degenerates, no creases)\n";
  return all_verified ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact origami constructions and constructibility tests"};
  app.require_subcommand(1);

  std::string file, svg, expr, a_text, b_text;
  bool json = false;
  std::uint64_t n = 0, limit = 0;

  auto* run_cmd = app.add_subcommand("run", "Evaluate a fold script");
  run_cmd->add_option("file", file, "Script path")->required();
  run_cmd->add_option("--svg", svg, "Write an SVG drawing");
  run_cmd->add_flag("--json", json, "Print a JSON report");

  auto* number_cmd = app.add_subcommand("check-number", "Degree tests for an expression");
  number_cmd->add_option("expr", expr, "Expression, e.g. \"cbrt(2)\"")->required();
  number_cmd->add_flag("--json", json, "Print a JSON report");

  auto* polygon_cmd = app.add_subcommand("check-polygon", "Is the regular n-gon constructible by folding");
  polygon_cmd->add_option("n", n, "Number of sides")->required();
  polygon_cmd->add_flag("--json", json, "Print a JSON report");

  auto* pierpont_cmd = app.add_subcommand("pierpont", "List primes 2^a 3^b + 1");
  pierpont_cmd->add_option("--limit", limit, "Upper bound")->required();

  auto* cubic_cmd = app.add_subcommand("solve-cubic", "Solve mu^3 + a mu + b = 0 by a single fold");
  cubic_cmd->add_option("--a", a_text, "Rational a")->required();
  cubic_cmd->add_option("--b", b_text, "Rational b")->required();
  cubic_cmd->add_flag("--json", json, "Print a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run_cmd) return run(file, svg, json);
    if (*number_cmd) return check_number(expr, json);
    if (*polygon_cmd) return check_polygon(n, json);
    if (*pierpont_cmd) return pierpont(limit);
    if (*cubic_cmd) return solve_cubic(a_text, b_text, json);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
