#include "nitsche/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nitsche {

KnotVector::KnotVector(int degree, std::vector<double> knots) : degree_(degree), knots_(std::move(knots)) {
  if (degree_ < 1) throw std::invalid_argument("KnotVector: degree must be >= 1");
  if (static_cast<int>(knots_.size()) < 2 * (degree_ + 1)) {
    throw std::invalid_argument("KnotVector: too few knots for degree");
  }
  if (!std::is_sorted(knots_.begin(), knots_.end())) {
    throw std::invalid_argument("KnotVector: knots must be nondecreasing");
  }
  for (int i = 0; i <= degree_; ++i) {
    if (knots_[i] != knots_.front() || knots_[knots_.size() - 1 - i] != knots_.back()) {
      throw std::invalid_argument("KnotVector: end knots must have multiplicity degree+1");
    }
  }
  if (!(knots_.back() > knots_.front())) throw std::invalid_argument("KnotVector: empty parameter range");
  for (std::size_t i = degree_ + 1; i + degree_ + 1 < knots_.size(); ++i) {
    if (!(knots_[i] > knots_[i - 1])) {
      throw std::invalid_argument("KnotVector: interior knots must be simple");
    }
  }
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    if (knots_[i + 1] > knots_[i]) spans_.push_back(static_cast<int>(i));
  }
}

int KnotVector::span_index(int k) const {
  if (k < 0 || k >= num_spans()) throw std::out_of_range("KnotVector::span_index: no such span");
  return spans_[k];
}

int KnotVector::find_span(double x) const {
  const int n = num_basis();
  if (x < front() || x > back()) {
    throw std::invalid_argument("KnotVector::find_span: x = " + std::to_string(x) + " outside knot range");
  }
  if (x >= knots_[n]) return n - 1;
  auto it = std::upper_bound(knots_.begin() + degree_, knots_.begin() + n + 1, x);
  return static_cast<int>(it - knots_.begin()) - 1;
}

KnotVector open_knot_vector(int degree, int n_elem, double a, double b) {
  if (degree < 1) throw std::invalid_argument("open_knot_vector: degree must be >= 1");
  if (n_elem < 1) throw std::invalid_argument("open_knot_vector: need at least one element");
  if (!(a < b)) throw std::invalid_argument("open_knot_vector: require a < b");
  std::vector<double> knots;
  knots.reserve(n_elem + 2 * degree + 1);
  for (int i = 0; i < degree; ++i) knots.push_back(a);
  for (int i = 0; i <= n_elem; ++i) {
    knots.push_back(i == n_elem ? b : a + (b - a) * i / n_elem);
  }
  for (int i = 0; i < degree; ++i) knots.push_back(b);
  return KnotVector(degree, std::move(knots));
}

BasisValues1D eval_basis_1d_on_span(const KnotVector& kv, int span, double x, int max_deriv) {
  if (max_deriv < 0 || max_deriv > kMaxDerivative) {
    throw std::invalid_argument("eval_basis_1d: max_deriv must be in [0, 3]");
  }
  const int p = kv.degree();
  const auto& U = kv.knots();
  // Cox-de Boor table with derivative recurrence (Piegl & Tiller, A2.3).
  std::vector<std::vector<double>> ndu(p + 1, std::vector<double>(p + 1, 0.0));
  std::vector<double> left(p + 1, 0.0), right(p + 1, 0.0);
  ndu[0][0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = x - U[span + 1 - j];
    right[j] = U[span + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      ndu[j][r] = right[r + 1] + left[j - r];
      const double temp = ndu[r][j - 1] / ndu[j][r];
      ndu[r][j] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    ndu[j][j] = saved;
  }

  BasisValues1D out;
  out.first = span - p;
  for (auto& d : out.ders) d.assign(p + 1, 0.0);
  for (int j = 0; j <= p; ++j) out.ders[0][j] = ndu[j][p];

  const int n = std::min(max_deriv, p);
  std::array<std::vector<double>, 2> a{std::vector<double>(p + 1), std::vector<double>(p + 1)};
  for (int r = 0; r <= p; ++r) {
    int s1 = 0, s2 = 1;
    a[0][0] = 1.0;
    for (int k = 1; k <= n; ++k) {
      double d = 0.0;
      const int rk = r - k;
      const int pk = p - k;
      if (r >= k) {
        a[s2][0] = a[s1][0] / ndu[pk + 1][rk];
        d = a[s2][0] * ndu[rk][pk];
      }
      const int j1 = (rk >= -1) ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? k - 1 : p - r;
      for (int j = j1; j <= j2; ++j) {
        a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][rk + j];
        d += a[s2][j] * ndu[rk + j][pk];
      }
      if (r <= pk) {
        a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
        d += a[s2][k] * ndu[r][pk];
      }
      out.ders[k][r] = d;
      std::swap(s1, s2);
    }
  }
  double factor = p;
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j <= p; ++j) out.ders[k][j] *= factor;
    factor *= (p - k);
  }
  return out;
}

BasisValues1D eval_basis_1d(const KnotVector& kv, double x, int max_deriv) {
  return eval_basis_1d_on_span(kv, kv.find_span(x), x, max_deriv);
}

TensorSplineSpace::TensorSplineSpace(KnotVector kv_x, KnotVector kv_y, int components)
    : kv_x_(std::move(kv_x)), kv_y_(std::move(kv_y)), components_(components) {
  if (components_ < 1) throw std::invalid_argument("TensorSplineSpace: components must be >= 1");
}

TensorSplineSpace TensorSplineSpace::on_mesh(const CartesianMesh& mesh, int degree, int components) {
  return TensorSplineSpace(open_knot_vector(degree, mesh.nx(), 0.0, mesh.domain().length_x),
                           open_knot_vector(degree, mesh.ny(), 0.0, mesh.domain().length_y), components);
}

int TensorSplineSpace::min_degree() const { return std::min(degree_x(), degree_y()); }

BasisEval TensorSplineSpace::combine(const BasisValues1D& bx, const BasisValues1D& by, int max_deriv) const {
  const int px = degree_x();
  const int py = degree_y();
  const int nx = n_x();
  BasisEval out;
  out.index.reserve((px + 1) * (py + 1));
  out.jets.reserve((px + 1) * (py + 1));
  auto dx = [&](int k, int i) { return bx.ders[k][i]; };
  auto dy = [&](int k, int j) { return by.ders[k][j]; };
  for (int j = 0; j <= py; ++j) {
    for (int i = 0; i <= px; ++i) {
      Jet g;
      g.value = dx(0, i) * dy(0, j);
      if (max_deriv >= 1) {
        g.grad = {dx(1, i) * dy(0, j), dx(0, i) * dy(1, j)};
      }
      if (max_deriv >= 2) {
        g.hess = {dx(2, i) * dy(0, j), dx(1, i) * dy(1, j), dx(0, i) * dy(2, j)};
      }
      if (max_deriv >= 3) {
        g.third = {dx(3, i) * dy(0, j), dx(2, i) * dy(1, j), dx(1, i) * dy(2, j), dx(0, i) * dy(3, j)};
      }
      out.index.push_back((by.first + j) * nx + (bx.first + i));
      out.jets.push_back(g);
    }
  }
  return out;
}

BasisEval TensorSplineSpace::eval(const Vec2& point, int max_deriv) const {
  if (point.x() < kv_x_.front() || point.x() > kv_x_.back() || point.y() < kv_y_.front() ||
      point.y() > kv_y_.back()) {
    throw std::invalid_argument("TensorSplineSpace::eval: point outside the domain");
  }
  return combine(eval_basis_1d(kv_x_, point.x(), max_deriv), eval_basis_1d(kv_y_, point.y(), max_deriv),
                 max_deriv);
}

BasisEval TensorSplineSpace::eval_on_element(int ex, int ey, const Vec2& point, int max_deriv) const {
  return combine(eval_basis_1d_on_span(kv_x_, kv_x_.span_index(ex), point.x(), max_deriv),
                 eval_basis_1d_on_span(kv_y_, kv_y_.span_index(ey), point.y(), max_deriv), max_deriv);
}

BasisEval eval_tensor(const TensorSplineSpace& space, const Vec2& point, int max_deriv) {
  return space.eval(point, max_deriv);
}

Jet combine_jets(const BasisEval& eval, const Eigen::Ref<const Eigen::VectorXd>& coeffs, int offset) {
  Jet out;
  for (std::size_t a = 0; a < eval.size(); ++a) {
    out.add_scaled(coeffs[offset + eval.index[a]], eval.jets[a]);
  }
  return out;
}

}  // namespace nitsche
