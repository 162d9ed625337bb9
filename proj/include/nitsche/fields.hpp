#pragma once

#include <functional>

#include <Eigen/Core>

#include "nitsche/jet.hpp"
#include "nitsche/mesh.hpp"

namespace nitsche {

/// Analytic scalar field with exact derivatives through order 4.
class ScalarField {
 public:
  using Fn = std::function<Jet(const Vec2&)>;

  ScalarField() = default;
  explicit ScalarField(Fn fn) : fn_(std::move(fn)) {}

  Jet operator()(const Vec2& x) const { return fn_(x); }
  explicit operator bool() const { return static_cast<bool>(fn_); }

 private:
  Fn fn_;
};

/// amplitude * sin(a*pi*x + phase_x) * sin(b*pi*y + phase_y)
ScalarField trig_field(double a, double b, double amplitude = 1.0, double phase_x = 0.0, double phase_y = 0.0);

/// sum_{i,j} coeffs(i, j) x^i y^j
ScalarField polynomial_field(Eigen::MatrixXd coeffs);

}  // namespace nitsche
