#include "nitsche/fields.hpp"

#include <cmath>
#include <numbers>

namespace nitsche {

namespace {

// k-th derivative of sin(w s + phase) with respect to s.
double sin_derivative(int k, double w, double arg) {
  const double scale = std::pow(w, k);
  switch (k % 4) {
    case 0: return scale * std::sin(arg);
    case 1: return scale * std::cos(arg);
    case 2: return -scale * std::sin(arg);
    default: return -scale * std::cos(arg);
  }
}

// d^k/ds^k s^i
double monomial_derivative(int i, int k, double s) {
  if (k > i) return 0.0;
  double c = 1.0;
  for (int r = 0; r < k; ++r) c *= (i - r);
  return c * std::pow(s, i - k);
}

template <class Fx, class Fy>
Jet separable_jet(Fx fx, Fy fy) {
  Jet j;
  j.value = fx(0) * fy(0);
  j.grad = {fx(1) * fy(0), fx(0) * fy(1)};
  j.hess = {fx(2) * fy(0), fx(1) * fy(1), fx(0) * fy(2)};
  j.third = {fx(3) * fy(0), fx(2) * fy(1), fx(1) * fy(2), fx(0) * fy(3)};
  j.fourth = {fx(4) * fy(0), fx(3) * fy(1), fx(2) * fy(2), fx(1) * fy(3), fx(0) * fy(4)};
  return j;
}

}  // namespace

ScalarField trig_field(double a, double b, double amplitude, double phase_x, double phase_y) {
  const double wx = a * std::numbers::pi;
  const double wy = b * std::numbers::pi;
  return ScalarField([=](const Vec2& p) {
    const double ax = wx * p.x() + phase_x;
    const double ay = wy * p.y() + phase_y;
    Jet j = separable_jet([&](int k) { return sin_derivative(k, wx, ax); },
                          [&](int k) { return sin_derivative(k, wy, ay); });
    Jet out;
    out.add_scaled(amplitude, j);
    return out;
  });
}

ScalarField polynomial_field(Eigen::MatrixXd coeffs) {
  return ScalarField([c = std::move(coeffs)](const Vec2& p) {
    Jet out;
    for (int i = 0; i < c.rows(); ++i) {
      for (int j = 0; j < c.cols(); ++j) {
        if (c(i, j) == 0.0) continue;
        out.add_scaled(c(i, j), separable_jet([&](int k) { return monomial_derivative(i, k, p.x()); },
                                              [&](int k) { return monomial_derivative(j, k, p.y()); }));
      }
    }
    return out;
  });
}

}  // namespace nitsche
