#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "origami/foldlang/interpreter.hpp"

namespace origami::foldlang {

struct Viewport {
  Rational xmin, ymin, xmax, ymax;
};

namespace detail {

inline Rational approx(const Traced& t) { return approximate(t.value(), Rational(1, 100000000)); }

inline std::string num(const Rational& q) { return to_decimal(q, 6); }

/// Segment of a x + b y + c = 0 inside the viewport, or nothing.
inline std::optional<std::pair<std::pair<Rational, Rational>, std::pair<Rational, Rational>>> clip(
    const Rational& a, const Rational& b, const Rational& c, const Viewport& v) {
  std::vector<std::pair<Rational, Rational>> hits;
  auto add = [&](const Rational& x, const Rational& y) {
    if (x < v.xmin || x > v.xmax || y < v.ymin || y > v.ymax) return;
    for (const auto& h : hits)
      if (h.first == x && h.second == y) return;
    hits.emplace_back(x, y);
  };
  if (b != 0) {
    add(v.xmin, Rational(-(a * v.xmin + c) / b));
    add(v.xmax, Rational(-(a * v.xmax + c) / b));
  }
  if (a != 0) {
    add(Rational(-(b * v.ymin + c) / a), v.ymin);
    add(Rational(-(b * v.ymax + c) / a), v.ymax);
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  return std::make_pair(hits.front(), hits.back());
}

}  // namespace detail

/// Bounding box of the points together with the unit square, padded by a tenth of its larger side.
inline Viewport default_viewport(const Environment& env) {
  Viewport v{0, 0, 1, 1};
  for (const auto& b : env.bindings()) {
    if (!b.is_point) continue;
    Rational x = detail::approx(b.point.x), y = detail::approx(b.point.y);
    v.xmin = std::min(v.xmin, x);
    v.xmax = std::max(v.xmax, x);
    v.ymin = std::min(v.ymin, y);
    v.ymax = std::max(v.ymax, y);
  }
  Rational pad = std::max(Rational(v.xmax - v.xmin), Rational(v.ymax - v.ymin)) / 10;
  return {v.xmin - pad, v.ymin - pad, v.xmax + pad, v.ymax + pad};
}

/// Points as circles, lines clipped to the viewport, labels; in declaration order.
inline std::string render_svg(const Environment& env, std::optional<Viewport> viewport = std::nullopt) {
  Viewport v = viewport ? *viewport : default_viewport(env);
  Rational width = v.xmax - v.xmin, height = v.ymax - v.ymin;
  Rational unit = std::max(width, height) / 200;
  auto sx = [&](const Rational& x) { return detail::num(Rational(x - v.xmin)); };
  auto sy = [&](const Rational& y) { return detail::num(Rational(v.ymax - y)); };
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0.000000 0.000000 " +
         detail::num(width) + " " + detail::num(height) + "\">\n";
  out += "  <rect x=\"0.000000\" y=\"0.000000\" width=\"" + detail::num(width) + "\" height=\"" +
         detail::num(height) + "\" fill=\"white\"/>\n";
  std::string font = detail::num(Rational(unit * 6));
  for (const auto& b : env.bindings()) {
    if (b.is_point) {
      Rational x = detail::approx(b.point.x), y = detail::approx(b.point.y);
      if (x < v.xmin || x > v.xmax || y < v.ymin || y > v.ymax) continue;
      out += "  <circle id=\"" + b.name + "\" cx=\"" + sx(x) + "\" cy=\"" + sy(y) + "\" r=\"" +
             detail::num(Rational(unit * 2)) + "\" fill=\"#b03a2e\"/>\n";
      out += "  <text x=\"" + sx(Rational(x + unit * 3)) + "\" y=\"" + sy(Rational(y + unit * 3)) +
             "\" font-size=\"" + font + "\" fill=\"#b03a2e\">" + b.name + "</text>\n";
    } else {
      auto seg = detail::clip(detail::approx(b.line.a()), detail::approx(b.line.b()), detail::approx(b.line.c()), v);
      if (!seg) continue;
      const auto& [p, q] = *seg;
      out += "  <line id=\"" + b.name + "\" x1=\"" + sx(p.first) + "\" y1=\"" + sy(p.second) + "\" x2=\"" +
             sx(q.first) + "\" y2=\"" + sy(q.second) + "\" stroke=\"#1f4e79\" stroke-width=\"" +
             detail::num(unit) + "\"/>\n";
      Rational mx = (p.first + q.first) / 2, my = (p.second + q.second) / 2;
      out += "  <text x=\"" + sx(Rational(mx + unit * 2)) + "\" y=\"" + sy(Rational(my + unit * 2)) +
             "\" font-size=\"" + font + "\" fill=\"#1f4e79\">" + b.name + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace origami::foldlang
