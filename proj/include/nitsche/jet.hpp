#pragma once

#include <array>

#include <Eigen/Core>

namespace nitsche {

/// Value and Cartesian partial derivatives of a scalar field at one point.
///
/// Mixed partials are stored once, ordered by the number of y-derivatives:
/// hess = (xx, xy, yy), third = (xxx, xxy, xyy, yyy), fourth = (xxxx, ..., yyyy).
/// Spline bases fill derivatives through order 3; analytic fields through order 4.
struct Jet {
  double value = 0.0;
  std::array<double, 2> grad{};
  std::array<double, 3> hess{};
  std::array<double, 4> third{};
  std::array<double, 5> fourth{};

  double dx() const { return grad[0]; }
  double dy() const { return grad[1]; }

  double laplacian() const { return hess[0] + hess[2]; }
  Eigen::Vector2d gradient() const { return {grad[0], grad[1]}; }
  Eigen::Vector2d grad_laplacian() const { return {third[0] + third[2], third[1] + third[3]}; }
  double bilaplacian() const { return fourth[0] + 2.0 * fourth[2] + fourth[4]; }

  double hess_frobenius_dot(const Jet& o) const {
    return hess[0] * o.hess[0] + 2.0 * hess[1] * o.hess[1] + hess[2] * o.hess[2];
  }

  /// a^T H b
  double hess_dir(const Eigen::Vector2d& a, const Eigen::Vector2d& b) const {
    return hess[0] * a.x() * b.x() + hess[1] * (a.x() * b.y() + a.y() * b.x()) + hess[2] * a.y() * b.y();
  }

  /// Third derivative tensor contracted with a, b, c.
  double third_dir(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) const {
    // Sum over i,j,k of T_ijk a_i b_j c_k with T symmetric; count y-indices to pick the entry.
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) s += third[i + j + k] * a[i] * b[j] * c[k];
    return s;
  }

  Jet& operator+=(const Jet& o) {
    add_scaled(1.0, o);
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    add_scaled(-1.0, o);
    return *this;
  }

  void add_scaled(double s, const Jet& o) {
    value += s * o.value;
    for (int i = 0; i < 2; ++i) grad[i] += s * o.grad[i];
    for (int i = 0; i < 3; ++i) hess[i] += s * o.hess[i];
    for (int i = 0; i < 4; ++i) third[i] += s * o.third[i];
    for (int i = 0; i < 5; ++i) fourth[i] += s * o.fourth[i];
  }
};

inline Jet operator-(Jet a, const Jet& b) {
  a -= b;
  return a;
}

}  // namespace nitsche
