#pragma once

#include <array>
#include <vector>

#include "nitsche/jet.hpp"
#include "nitsche/mesh.hpp"

namespace nitsche {

inline constexpr int kMaxDerivative = 3;

/// Clamped knot vector: end knots repeated degree+1 times.
class KnotVector {
 public:
  KnotVector(int degree, std::vector<double> knots);

  int degree() const { return degree_; }
  const std::vector<double>& knots() const { return knots_; }
  int num_basis() const { return static_cast<int>(knots_.size()) - degree_ - 1; }
  double front() const { return knots_.front(); }
  double back() const { return knots_.back(); }

  /// Number of nonzero-length knot spans.
  int num_spans() const { return static_cast<int>(spans_.size()); }
  /// Knot index i of the k-th nonzero span [t_i, t_{i+1}).
  int span_index(int k) const;
  /// Span index containing x; the last span is closed on the right.
  int find_span(double x) const;

 private:
  int degree_;
  std::vector<double> knots_;
  std::vector<int> spans_;
};

/// Uniform clamped knot vector on [a, b] with n_elem spans.
KnotVector open_knot_vector(int degree, int n_elem, double a, double b);

/// Active 1D basis functions at a point: functions first .. first+p, with
/// derivative k of function first+j stored in ders[k][j].
struct BasisValues1D {
  int first = 0;
  std::array<std::vector<double>, kMaxDerivative + 1> ders;
};

BasisValues1D eval_basis_1d(const KnotVector& kv, double x, int max_deriv);
/// Evaluates using the polynomial piece of a given span (one-sided at knots).
BasisValues1D eval_basis_1d_on_span(const KnotVector& kv, int span, double x, int max_deriv);

/// Active tensor-product basis functions at a point.
struct BasisEval {
  std::vector<int> index;  // scalar basis index iy * n_x + ix
  std::vector<Jet> jets;

  std::size_t size() const { return index.size(); }
};

class TensorSplineSpace {
 public:
  TensorSplineSpace(KnotVector kv_x, KnotVector kv_y, int components = 1);

  /// Space of degree p in both directions matching the mesh cells.
  static TensorSplineSpace on_mesh(const CartesianMesh& mesh, int degree, int components = 1);

  const KnotVector& kv_x() const { return kv_x_; }
  const KnotVector& kv_y() const { return kv_y_; }
  int components() const { return components_; }
  int degree_x() const { return kv_x_.degree(); }
  int degree_y() const { return kv_y_.degree(); }
  int min_degree() const;
  int n_x() const { return kv_x_.num_basis(); }
  int n_y() const { return kv_y_.num_basis(); }
  int scalar_dim() const { return n_x() * n_y(); }
  int dim() const { return components_ * scalar_dim(); }

  /// Evaluation using the cell that contains the point (right-continuous at knots).
  BasisEval eval(const Vec2& point, int max_deriv) const;
  /// Evaluation using the polynomial piece of element (ex, ey), counted over nonzero spans.
  BasisEval eval_on_element(int ex, int ey, const Vec2& point, int max_deriv) const;

 private:
  BasisEval combine(const BasisValues1D& bx, const BasisValues1D& by, int max_deriv) const;

  KnotVector kv_x_;
  KnotVector kv_y_;
  int components_;
};

BasisEval eval_tensor(const TensorSplineSpace& space, const Vec2& point, int max_deriv);

/// Jet of sum_i coeffs[offset + index_i] * N_i at the evaluation point.
Jet combine_jets(const BasisEval& eval, const Eigen::Ref<const Eigen::VectorXd>& coeffs, int offset = 0);

}  // namespace nitsche
