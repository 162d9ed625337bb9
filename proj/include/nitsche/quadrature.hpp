#pragma once

#include <vector>

#include "nitsche/mesh.hpp"

namespace nitsche {

/// Gauss-Legendre rule on [-1, 1].
struct QuadRule {
  std::vector<double> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

/// Tensor Gauss-Legendre rule on [-1, 1]^2.
struct QuadRule2D {
  std::vector<Vec2> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

struct QuadPoint {
  Vec2 x;
  double weight;
};

QuadRule gauss_rule_1d(int n);
QuadRule2D gauss_rule_2d(int n);

std::vector<QuadPoint> map_rule(const QuadRule2D& rule, const Cell& cell);
std::vector<QuadPoint> map_rule(const QuadRule& rule, const BoundaryEdge& edge);

}  // namespace nitsche
