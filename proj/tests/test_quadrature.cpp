#include "doctest.h"
#include "nitsche/quadrature.hpp"

#include <cmath>

using namespace nitsche;

TEST_CASE("classical Gauss rules") {
  const QuadRule r1 = gauss_rule_1d(1);
  CHECK(r1.points[0] == doctest::Approx(0.0));
  CHECK(r1.weights[0] == doctest::Approx(2.0));
  const QuadRule r2 = gauss_rule_1d(2);
  CHECK(r2.points[0] == doctest::Approx(-1 / std::sqrt(3.0)));
  CHECK(r2.points[1] == doctest::Approx(1 / std::sqrt(3.0)));
  CHECK(r2.weights[0] == doctest::Approx(1.0));
  CHECK(r2.weights[1] == doctest::Approx(1.0));
  double x2 = 0.0;
  for (std::size_t i = 0; i < 2; ++i) x2 += r2.weights[i] * r2.points[i] * r2.points[i];
  CHECK(x2 == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(gauss_rule_1d(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_rule_1d(21), std::invalid_argument);
}

TEST_CASE("exactness up to degree 2n-1") {
  for (int n = 1; n <= 20; ++n) {
    const QuadRule r = gauss_rule_1d(n);
    double wsum = 0.0;
    for (double w : r.weights) {
      CHECK(w > 0.0);
      wsum += w;
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.points[i], d);
      const double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
  double w2 = 0.0;
  for (double w : gauss_rule_2d(3).weights) w2 += w;
  CHECK(w2 == doctest::Approx(4.0));
}

TEST_CASE("mapped rules") {
  Cell c;
  c.x0 = 0;
  c.x1 = 0.5;
  c.y0 = 0;
  c.y1 = 0.5;
  const auto one = map_rule(gauss_rule_2d(1), c);
  CHECK(one.size() == 1);
  CHECK(one[0].x.x() == doctest::Approx(0.25));
  CHECK(one[0].x.y() == doctest::Approx(0.25));
  CHECK(one[0].weight == doctest::Approx(0.25));

  BoundaryEdge e;
  e.start = Vec2(0, 0);
  e.end = Vec2(0.5, 0);
  for (const auto& q : map_rule(gauss_rule_1d(2), e)) CHECK(q.weight == doctest::Approx(0.25));

  const CartesianMesh m = build_mesh(RectDomain(1, 1), 3, 2);
  double xy = 0.0;
  for (int iy = 0; iy < 2; ++iy)
    for (int ix = 0; ix < 3; ++ix)
      for (const auto& q : map_rule(gauss_rule_2d(2), m.cell(ix, iy))) xy += q.weight * q.x.x() * q.x.y();
  CHECK(xy == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("mapped rule integrates monomials on cells") {
  Cell c;
  c.x0 = 0.3;
  c.x1 = 0.55;
  c.y0 = -0.2;
  c.y1 = 0.4;
  const int n = 4;
  const auto pts = map_rule(gauss_rule_2d(n), c);
  for (int i = 0; i <= 2 * n - 1; ++i)
    for (int j = 0; j <= 2 * n - 1; ++j) {
      double s = 0.0;
      for (const auto& q : pts) s += q.weight * std::pow(q.x.x(), i) * std::pow(q.x.y(), j);
      const double ex = (std::pow(c.x1, i + 1) - std::pow(c.x0, i + 1)) / (i + 1) *
                        (std::pow(c.y1, j + 1) - std::pow(c.y0, j + 1)) / (j + 1);
      CHECK(std::abs(s - ex) <= 1e-13 * std::max(std::abs(ex), 1e-3));
    }
}
