#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "test_support.hpp"

namespace origami::testing {

struct NumLine {
  double a, b, c;
};
struct NumPoint {
  double x, y;
};

/// Number of distinct real creases reflecting f1 onto l1 and f2 onto l2, found numerically.
/// Route: for a crease y = mu x + w, tangency to each parabola fixes w as a rational function of mu;
/// equate the two, clear denominators, fit the cubic by sampling and solve with Cardano.
inline int numeric_fold6_count(NumPoint f1, NumLine l1, NumPoint f2, NumLine l2) {
  auto w_num = [](NumPoint f, NumLine l, double mu) {
    double k = l.a * f.x + l.b * f.y + l.c;
    return std::array<double, 2>{k * (mu * mu + 1) - 2 * (mu * f.x - f.y) * (l.a * mu - l.b), 2 * (l.a * mu - l.b)};
  };
  auto g = [&](double mu) {
    auto [n1, d1] = w_num(f1, l1, mu);
    auto [n2, d2] = w_num(f2, l2, mu);
    return n1 * d2 - n2 * d1;
  };
  // Fit g (degree <= 3) through mu = -1, 0, 1, 2.
  double gm1 = g(-1), g0 = g(0), g1 = g(1), g2 = g(2);
  double c0 = g0;
  double c2 = (g1 + gm1) / 2 - g0;
  double c1_plus_c3 = (g1 - gm1) / 2;
  // g(2) = c0 + 2 c1 + 4 c2 + 8 c3
  double c3 = (g2 - c0 - 4 * c2 - 2 * c1_plus_c3) / 6;
  double c1 = c1_plus_c3 - c3;
  int count = 0;
  double scale = std::abs(c0) + std::abs(c1) + std::abs(c2) + std::abs(c3);
  for (double mu : cardano_real_roots(c3, c2, c1, c0, 1e-11)) {
    if (std::abs(l1.a * mu - l1.b) < 1e-7 || std::abs(l2.a * mu - l2.b) < 1e-7) continue;
    ++count;
  }
  (void)scale;
  if (std::abs(l1.a) > 1e-12 && std::abs(l2.a) > 1e-12) {
    double s1 = (l1.a * f1.x - l1.b * f1.y - l1.c) / (2 * l1.a);
    double s2 = (l2.a * f2.x - l2.b * f2.y - l2.c) / (2 * l2.a);
    if (std::abs(s1 - s2) < 1e-9) ++count;
  }
  return count;
}

}  // namespace origami::testing
