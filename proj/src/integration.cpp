#include "integration.hpp"

#include <algorithm>
#include <vector>

#include "nitsche/quadrature.hpp"

namespace nitsche::detail {

namespace {

struct Sample {
  double weight;
  BasisEval basis;
};

std::vector<Sample> cell_samples(const Discretization& disc, int ex, int ey, const QuadRule2D& rule, int order) {
  std::vector<Sample> out;
  for (const QuadPoint& q : map_rule(rule, disc.mesh.cell(ex, ey))) {
    out.push_back({q.weight, disc.space.eval_on_element(ex, ey, q.x, order)});
  }
  return out;
}

template <class Visit>
void for_each_cell_point(const Discretization& disc, int points, Visit&& visit) {
  const QuadRule2D rule = gauss_rule_2d(points);
  const int order = eval_order(disc);
  for (int ey = 0; ey < disc.mesh.ny(); ++ey) {
    for (int ex = 0; ex < disc.mesh.nx(); ++ex) {
      for (const QuadPoint& q : map_rule(rule, disc.mesh.cell(ex, ey))) visit(ex, ey, q, order);
    }
  }
}

template <class Visit>
void for_each_edge_point(const Discretization& disc, int points, Visit&& visit) {
  const QuadRule rule = gauss_rule_1d(points);
  const int order = eval_order(disc);
  for (int set = 1; set <= num_condition_sets(disc.kind); ++set) {
    for (const BoundaryEdge& e : disc.dirichlet_edges[set - 1]) {
      for (const QuadPoint& q : map_rule(rule, e)) visit(e, set, q, order);
    }
  }
}

std::vector<Corner> dirichlet_corners(const Discretization& disc) {
  if (!disc.has_corners()) return {};
  return disc.corners.of_class(CornerClass::Dirichlet);
}

}  // namespace

int eval_order(const Discretization& disc) { return std::min(required_derivative(disc.kind), kMaxDerivative); }

SparseMatrix scalar_matrix(const Discretization& disc, const BilinearKernels& kernels, int points) {
  const int n = disc.space.scalar_dim();
  std::vector<Eigen::Triplet<double>> trip;
  auto add_block = [&](const BasisEval& b, auto&& value) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const double v = value(b.jets[j], b.jets[i]);
        if (v != 0.0) trip.emplace_back(b.index[i], b.index[j], v);
      }
    }
  };
  if (kernels.cell) {
    const QuadRule2D rule = gauss_rule_2d(points);
    const int order = eval_order(disc);
    for (int ey = 0; ey < disc.mesh.ny(); ++ey) {
      for (int ex = 0; ex < disc.mesh.nx(); ++ex) {
        // Accumulate the element matrix first to keep the triplet list short.
        const auto samples = cell_samples(disc, ex, ey, rule, order);
        const std::size_t na = samples.front().basis.size();
        Eigen::MatrixXd local = Eigen::MatrixXd::Zero(na, na);
        for (const Sample& s : samples) {
          for (std::size_t i = 0; i < na; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
              local(i, j) += s.weight * kernels.cell(s.basis.jets[j], s.basis.jets[i]);
            }
          }
        }
        const auto& idx = samples.front().basis.index;
        for (std::size_t i = 0; i < na; ++i) {
          for (std::size_t j = 0; j <= i; ++j) {
            if (local(i, j) == 0.0) continue;
            trip.emplace_back(idx[i], idx[j], local(i, j));
            if (i != j) trip.emplace_back(idx[j], idx[i], local(i, j));
          }
        }
      }
    }
  }
  if (kernels.edge) {
    for_each_edge_point(disc, points, [&](const BoundaryEdge& e, int set, const QuadPoint& q, int order) {
      const BasisEval b = disc.space.eval_on_element(e.ix, e.iy, q.x, order);
      add_block(b, [&](const Jet& w, const Jet& v) { return q.weight * kernels.edge(w, v, e, set); });
    });
  }
  if (kernels.corner) {
    for (const Corner& c : dirichlet_corners(disc)) {
      const BasisEval b = disc.space.eval_on_element(c.ix, c.iy, c.point, eval_order(disc));
      add_block(b, [&](const Jet& w, const Jet& v) { return kernels.corner(w, v, c); });
    }
  }
  SparseMatrix m(n, n);
  m.setFromTriplets(trip.begin(), trip.end());
  m.makeCompressed();
  return m;
}

Eigen::VectorXd pair_with_basis(const Discretization& disc, const BilinearKernels& kernels, const ElementField& w,
                                int points) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(disc.space.scalar_dim());
  if (kernels.cell) {
    for_each_cell_point(disc, points, [&](int ex, int ey, const QuadPoint& q, int order) {
      const BasisEval b = disc.space.eval_on_element(ex, ey, q.x, order);
      const Jet wj = w(ex, ey, q.x);
      for (std::size_t i = 0; i < b.size(); ++i) out[b.index[i]] += q.weight * kernels.cell(wj, b.jets[i]);
    });
  }
  if (kernels.edge) {
    for_each_edge_point(disc, points, [&](const BoundaryEdge& e, int set, const QuadPoint& q, int order) {
      const BasisEval b = disc.space.eval_on_element(e.ix, e.iy, q.x, order);
      const Jet wj = w(e.ix, e.iy, q.x);
      for (std::size_t i = 0; i < b.size(); ++i) out[b.index[i]] += q.weight * kernels.edge(wj, b.jets[i], e, set);
    });
  }
  if (kernels.corner) {
    for (const Corner& c : dirichlet_corners(disc)) {
      const BasisEval b = disc.space.eval_on_element(c.ix, c.iy, c.point, eval_order(disc));
      const Jet wj = w(c.ix, c.iy, c.point);
      for (std::size_t i = 0; i < b.size(); ++i) out[b.index[i]] += kernels.corner(wj, b.jets[i], c);
    }
  }
  return out;
}

double form_value(const Discretization& disc, const BilinearKernels& kernels, const ElementField& w,
                  const ElementField& v, int points) {
  double total = 0.0;
  if (kernels.cell) {
    for_each_cell_point(disc, points, [&](int ex, int ey, const QuadPoint& q, int) {
      total += q.weight * kernels.cell(w(ex, ey, q.x), v(ex, ey, q.x));
    });
  }
  if (kernels.edge) {
    for_each_edge_point(disc, points, [&](const BoundaryEdge& e, int set, const QuadPoint& q, int) {
      total += q.weight * kernels.edge(w(e.ix, e.iy, q.x), v(e.ix, e.iy, q.x), e, set);
    });
  }
  if (kernels.corner) {
    for (const Corner& c : dirichlet_corners(disc)) {
      total += kernels.corner(w(c.ix, c.iy, c.point), v(c.ix, c.iy, c.point), c);
    }
  }
  return total;
}

BilinearKernels interior_only(const Discretization& disc) {
  BilinearKernels k;
  k.cell = [kind = disc.kind, params = disc.params](const Jet& w, const Jet& v) {
    return interior_kernel(kind, params, w, v);
  };
  return k;
}

BilinearKernels nitsche_kernels(const Discretization& disc, const NitscheConstants& constants,
                                EnforcementVariant variant) {
  BilinearKernels k = interior_only(disc);
  const ProblemKind kind = disc.kind;
  const MaterialParams params = disc.params;
  k.edge = [=](const Jet& w, const Jet& v, const BoundaryEdge& e, int set) {
    return nitsche_edge_kernels(kind, params, variant, w, v, e, set, constants).total();
  };
  if (disc.has_corners()) {
    k.corner = [=](const Jet& w, const Jet& v, const Corner& c) {
      return nitsche_corner_kernels(params, variant, w, v, c, constants).total();
    };
  }
  return k;
}

BilinearKernels energy_kernels(const Discretization& disc, const NitscheConstants& constants) {
  BilinearKernels k = interior_only(disc);
  const ProblemKind kind = disc.kind;
  const MaterialParams params = disc.params;
  k.edge = [=](const Jet& w, const Jet& v, const BoundaryEdge& e, int set) {
    const int s = set - 1;
    const double eta = edge_eta_weight(kind, params, set, e.h, constants);
    const double pen = edge_penalty_weight(kind, params, set, e.h, constants);
    const double bw = boundary_operator(kind, params, w, e.normal, e.tangent)[s];
    const double bv = boundary_operator(kind, params, v, e.normal, e.tangent)[s];
    return eta * bw * bv + 2.0 * pen * trace_operator(kind, w, e.normal)[s] * trace_operator(kind, v, e.normal)[s];
  };
  if (disc.has_corners()) {
    k.corner = [=](const Jet& w, const Jet& v, const Corner& c) {
      return corner_eta_weight(params, c.h, constants) * corner_jump(params, w, c) * corner_jump(params, v, c) +
             2.0 * corner_penalty_weight(params, c.h, constants) * w.value * v.value;
    };
  }
  return k;
}

ElementField exact_field(const ManufacturedSolution& exact, int component) {
  return [&exact, component](int, int, const Vec2& x) { return exact.exact(component, x); };
}

ElementField discrete_field(const Discretization& disc, const Eigen::VectorXd& coeffs, int component) {
  const int order = eval_order(disc);
  return [&disc, &coeffs, component, order](int ex, int ey, const Vec2& x) {
    return discrete_jet(disc, coeffs, component, ex, ey, x, order);
  };
}

SparseMatrix replicate(const SparseMatrix& scalar, int components) {
  if (components == 1) return scalar;
  const int n = static_cast<int>(scalar.rows());
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(scalar.nonZeros()) * components);
  for (int c = 0; c < components; ++c) {
    for (int k = 0; k < scalar.outerSize(); ++k) {
      for (SparseMatrix::InnerIterator it(scalar, k); it; ++it) {
        trip.emplace_back(c * n + it.row(), c * n + it.col(), it.value());
      }
    }
  }
  SparseMatrix m(n * components, n * components);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

}  // namespace nitsche::detail
