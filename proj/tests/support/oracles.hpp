#pragma once

// Independent reference computations used by the tests. None of these go
// through the map-based jet arithmetic they check.

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "germ/jet.hpp"

namespace germ::testing {

using Dense = std::vector<std::vector<Rational>>;

inline Dense to_dense(const Jet& a) {
  Dense d(a.order() + 1, std::vector<Rational>(a.order() + 1, Rational(0)));
  for (const auto& [m, c] : a.terms()) d[m.x][m.y] = c;
  return d;
}

inline Jet from_dense(const Dense& d, int order) {
  Jet::Terms t;
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) t[Monomial{i, j}] = d[i][j];
  return Jet(order, t);
}

/// Schoolbook convolution over dense coefficient arrays.
inline Jet brute_mul(const Jet& a, const Jet& b) {
  const int n = a.order();
  Dense da = to_dense(a), db = to_dense(b);
  Dense out(n + 1, std::vector<Rational>(n + 1, Rational(0)));
  for (int i1 = 0; i1 <= n; ++i1)
    for (int j1 = 0; i1 + j1 <= n; ++j1)
      for (int i2 = 0; i1 + i2 <= n; ++i2)
        for (int j2 = 0; i1 + j1 + i2 + j2 <= n; ++j2) out[i1 + i2][j1 + j2] += da[i1][j1] * db[i2][j2];
  return from_dense(out, n);
}

/// Sum of c * x^i * y^j with std::pow.
inline double brute_eval(const Jet& a, double x, double y) {
  double s = 0.0;
  for (const auto& [m, c] : a.terms()) s += c.get_d() * std::pow(x, m.x) * std::pow(y, m.y);
  return s;
}

/// Central finite difference of d^(i+j) f / dx^i dy^j at (x0, y0), i + j <= 2.
inline double fd_partial(const Jet& f, int i, int j, double x0 = 0.0, double y0 = 0.0, double h = 1e-3) {
  auto F = [&](double x, double y) { return brute_eval(f, x, y); };
  if (i == 0 && j == 0) return F(x0, y0);
  if (i == 1 && j == 0) return (F(x0 + h, y0) - F(x0 - h, y0)) / (2 * h);
  if (i == 0 && j == 1) return (F(x0, y0 + h) - F(x0, y0 - h)) / (2 * h);
  if (i == 2 && j == 0) return (F(x0 + h, y0) - 2 * F(x0, y0) + F(x0 - h, y0)) / (h * h);
  if (i == 0 && j == 2) return (F(x0, y0 + h) - 2 * F(x0, y0) + F(x0, y0 - h)) / (h * h);
  return (F(x0 + h, y0 + h) - F(x0 + h, y0 - h) - F(x0 - h, y0 + h) + F(x0 - h, y0 - h)) / (4 * h * h);
}

/// Fourth-order central difference on evenly spaced samples. Exact (up to
/// rounding) when the samples come from a polynomial of degree <= 4.
inline Eigen::Vector2d five_point_tangent(const std::vector<Eigen::Vector2d>& pts, std::size_t k,
                                          double spacing) {
  return (pts[k - 2] - 8.0 * pts[k - 1] + 8.0 * pts[k + 1] - pts[k + 2]) / (12.0 * spacing);
}

}  // namespace germ::testing
