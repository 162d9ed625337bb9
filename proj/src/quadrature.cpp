#include "nitsche/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nitsche {

QuadRule gauss_rule_1d(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("gauss_rule_1d: n must be in [1, 20]");
  QuadRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n from the Chebyshev-like initial guess; roots are symmetric.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      // P_n = p1, P_{n-1} = p0
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.points[i] = -x;
    rule.points[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.points[n / 2] = 0.0;
  return rule;
}

QuadRule2D gauss_rule_2d(int n) {
  const QuadRule r = gauss_rule_1d(n);
  QuadRule2D out;
  out.points.reserve(n * n);
  out.weights.reserve(n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      out.points.emplace_back(r.points[i], r.points[j]);
      out.weights.push_back(r.weights[i] * r.weights[j]);
    }
  }
  return out;
}

std::vector<QuadPoint> map_rule(const QuadRule2D& rule, const Cell& cell) {
  const double cx = 0.5 * (cell.x0 + cell.x1), hx = 0.5 * (cell.x1 - cell.x0);
  const double cy = 0.5 * (cell.y0 + cell.y1), hy = 0.5 * (cell.y1 - cell.y0);
  const double jac = hx * hy;
  std::vector<QuadPoint> out;
  out.reserve(rule.size());
  for (std::size_t q = 0; q < rule.size(); ++q) {
    out.push_back({Vec2(cx + hx * rule.points[q].x(), cy + hy * rule.points[q].y()), rule.weights[q] * jac});
  }
  return out;
}

std::vector<QuadPoint> map_rule(const QuadRule& rule, const BoundaryEdge& edge) {
  const Vec2 mid = 0.5 * (edge.start + edge.end);
  const Vec2 half = 0.5 * (edge.end - edge.start);
  const double jac = half.norm();
  std::vector<QuadPoint> out;
  out.reserve(rule.size());
  for (std::size_t q = 0; q < rule.size(); ++q) {
    out.push_back({mid + rule.points[q] * half, rule.weights[q] * jac});
  }
  return out;
}

}  // namespace nitsche
