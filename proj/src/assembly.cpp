#include "nitsche/assembly.hpp"

#include <cmath>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

#include "integration.hpp"
#include "nitsche/quadrature.hpp"

namespace nitsche {

using detail::ElementField;

Discretization Discretization::create(ProblemKind kind, const MaterialParams& params, const CartesianMesh& mesh,
                                      int degree, int components, const BoundaryPartition& partition) {
  if (degree < minimum_degree(kind)) {
    throw std::invalid_argument(std::string(to_string(kind)) + " needs spline degree >= " +
                                std::to_string(minimum_degree(kind)));
  }
  if (kind == ProblemKind::KirchhoffPlate) {
    if (components != 1) throw std::invalid_argument("plate: exactly one component");
    params.validate();
  }
  if (!partition.has_dirichlet(1)) throw std::invalid_argument("condition set 1 needs a Dirichlet side");
  Discretization d{kind,      params, mesh, TensorSplineSpace::on_mesh(mesh, degree, components), partition,
                   {},        {},     {}};
  for (int set = 1; set <= num_condition_sets(kind); ++set) {
    d.dirichlet_edges[set - 1] = dirichlet_edge_mesh(mesh, partition, set);
    d.neumann_edges[set - 1] = neumann_edge_mesh(mesh, partition, set);
  }
  d.corners = classify_corners(mesh, partition);
  return d;
}

Jet discrete_jet(const Discretization& disc, const Eigen::VectorXd& coeffs, int component, int ex, int ey,
                 const Vec2& x, int max_deriv) {
  return combine_jets(disc.space.eval_on_element(ex, ey, x, max_deriv), coeffs,
                      component * disc.space.scalar_dim());
}

SparseMatrix assemble_scalar_matrix(const Discretization& disc, const NitscheConstants& constants,
                                    EnforcementVariant variant) {
  if (static_cast<int>(constants.size()) != num_constant_slots(disc.kind)) {
    throw std::invalid_argument("constants do not match the problem kind");
  }
  return detail::scalar_matrix(disc, detail::nitsche_kernels(disc, constants, variant), disc.assembly_points());
}

Eigen::VectorXd assemble_rhs(const Discretization& disc, const ProblemData& data, const NitscheConstants& constants,
                             EnforcementVariant variant, int points) {
  const ProblemKind kind = disc.kind;
  const int sets = num_condition_sets(kind);
  if (!data.body) throw std::invalid_argument("problem data: missing body load");
  for (int s = 0; s < sets; ++s) {
    if (!disc.dirichlet_edges[s].empty() && !data.boundary.dirichlet[s]) {
      throw std::invalid_argument("problem data: missing Dirichlet data for set " + std::to_string(s + 1));
    }
    if (!disc.neumann_edges[s].empty() && !data.boundary.neumann[s]) {
      throw std::invalid_argument("problem data: missing Neumann data for set " + std::to_string(s + 1));
    }
  }
  const int m = disc.components();
  const int n = disc.space.scalar_dim();
  const int order = detail::eval_order(disc);
  if (points <= 0) points = disc.assembly_points();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(disc.space.dim());

  auto scatter = [&](const BasisEval& b, int c, auto&& value) {
    for (std::size_t i = 0; i < b.size(); ++i) rhs[c * n + b.index[i]] += value(b.jets[i]);
  };

  const QuadRule2D rule2 = gauss_rule_2d(points);
  for (int ey = 0; ey < disc.mesh.ny(); ++ey) {
    for (int ex = 0; ex < disc.mesh.nx(); ++ex) {
      for (const QuadPoint& q : map_rule(rule2, disc.mesh.cell(ex, ey))) {
        const BasisEval b = disc.space.eval_on_element(ex, ey, q.x, order);
        for (int c = 0; c < m; ++c) {
          const double f = data.body(c, q.x);
          if (f == 0.0) continue;
          scatter(b, c, [&](const Jet& v) { return q.weight * body_rhs(f, v).total(); });
        }
      }
    }
  }

  const QuadRule rule1 = gauss_rule_1d(points);
  for (int set = 1; set <= sets; ++set) {
    for (const BoundaryEdge& e : disc.dirichlet_edges[set - 1]) {
      for (const QuadPoint& q : map_rule(rule1, e)) {
        const BasisEval b = disc.space.eval_on_element(e.ix, e.iy, q.x, order);
        for (int c = 0; c < m; ++c) {
          const double g = data.boundary.dirichlet[set - 1](c, {q.x, e.normal, e.tangent});
          if (g == 0.0) continue;
          scatter(b, c, [&](const Jet& v) {
            return q.weight * dirichlet_edge_rhs(kind, disc.params, variant, v, e, set, g, constants).total();
          });
        }
      }
    }
    for (const BoundaryEdge& e : disc.neumann_edges[set - 1]) {
      for (const QuadPoint& q : map_rule(rule1, e)) {
        const BasisEval b = disc.space.eval_on_element(e.ix, e.iy, q.x, order);
        for (int c = 0; c < m; ++c) {
          const double h = data.boundary.neumann[set - 1](c, {q.x, e.normal, e.tangent});
          if (h == 0.0) continue;
          scatter(b, c, [&](const Jet& v) { return q.weight * neumann_edge_rhs(kind, v, e, set, h).total(); });
        }
      }
    }
  }

  if (disc.has_corners()) {
    for (const Corner& corner : disc.corners.corners) {
      const BasisEval b = disc.space.eval_on_element(corner.ix, corner.iy, corner.point, order);
      if (corner.cls == CornerClass::Dirichlet) {
        const double u = data.boundary.dirichlet[0](
            0, {corner.point, outward_normal(corner.outgoing), ccw_tangent(corner.outgoing)});
        scatter(b, 0, [&](const Jet& v) {
          return dirichlet_corner_rhs(disc.params, variant, v, corner, u, constants).total();
        });
      } else {
        if (!data.boundary.corner_force) throw std::invalid_argument("problem data: missing corner forces");
        const double force = data.boundary.corner_force(0, corner);
        scatter(b, 0, [&](const Jet& v) { return neumann_corner_rhs(v, force).total(); });
      }
    }
  }
  return rhs;
}

AssembledSystem assemble(const Discretization& disc, const ProblemData& data, const NitscheConstants& constants,
                         EnforcementVariant variant) {
  AssembledSystem sys;
  sys.matrix = detail::replicate(assemble_scalar_matrix(disc, constants, variant), disc.components());
  sys.rhs = assemble_rhs(disc, data, constants, variant);
  sys.kind = disc.kind;
  sys.variant = variant;
  sys.constants = constants;
  sys.nx = disc.mesh.nx();
  sys.ny = disc.mesh.ny();
  return sys;
}

Eigen::VectorXd apply_to_exact(const Discretization& disc, const ManufacturedSolution& exact,
                               const NitscheConstants& constants, EnforcementVariant variant, int points) {
  if (points <= 0) points = disc.error_points();
  const auto kernels = detail::nitsche_kernels(disc, constants, variant);
  const int n = disc.space.scalar_dim();
  Eigen::VectorXd out(disc.space.dim());
  for (int c = 0; c < disc.components(); ++c) {
    out.segment(c * n, n) = detail::pair_with_basis(disc, kernels, detail::exact_field(exact, c), points);
  }
  return out;
}

Eigen::VectorXd solve(const SparseMatrix& matrix, const Eigen::VectorXd& rhs, const SolveOptions& options) {
  if (matrix.rows() != matrix.cols() || matrix.rows() != rhs.size()) {
    throw std::invalid_argument("solve: dimension mismatch");
  }
  if (matrix.rows() <= options.direct_limit) {
    Eigen::SimplicialLLT<SparseMatrix> llt(matrix);
    if (llt.info() != Eigen::Success) {
      throw NotPositiveDefiniteError("Cholesky factorization failed: matrix is not positive definite");
    }
    Eigen::VectorXd x = llt.solve(rhs);
    if (!x.allFinite()) throw NotPositiveDefiniteError("Cholesky solve produced non-finite values");
    return x;
  }
  Eigen::ConjugateGradient<SparseMatrix, Eigen::Lower | Eigen::Upper> cg(matrix);
  cg.setTolerance(options.cg_tolerance);
  cg.setMaxIterations(static_cast<Eigen::Index>(10 * matrix.rows()));
  Eigen::VectorXd x = cg.solve(rhs);
  if (cg.info() != Eigen::Success) throw NotPositiveDefiniteError("conjugate gradient did not converge");
  return x;
}

Eigen::VectorXd solve(const AssembledSystem& system, const SolveOptions& options) {
  return solve(system.matrix, system.rhs, options);
}

ErrorReport error_norms(const Discretization& disc, const Eigen::VectorXd& coeffs, const ManufacturedSolution& exact,
                        const NitscheConstants& constants) {
  if (coeffs.size() != disc.space.dim()) throw std::invalid_argument("error_norms: coefficient size mismatch");
  if (exact.components() != disc.components()) throw std::invalid_argument("error_norms: component mismatch");
  const int order = detail::eval_order(disc);
  const QuadRule2D rule = gauss_rule_2d(disc.error_points());
  double l2 = 0.0, h1 = 0.0;
  for (int ey = 0; ey < disc.mesh.ny(); ++ey) {
    for (int ex = 0; ex < disc.mesh.nx(); ++ex) {
      for (const QuadPoint& q : map_rule(rule, disc.mesh.cell(ex, ey))) {
        const BasisEval b = disc.space.eval_on_element(ex, ey, q.x, std::min(order, 1));
        for (int c = 0; c < disc.components(); ++c) {
          const Jet e = exact.exact(c, q.x) - combine_jets(b, coeffs, c * disc.space.scalar_dim());
          l2 += q.weight * e.value * e.value;
          h1 += q.weight * (e.grad[0] * e.grad[0] + e.grad[1] * e.grad[1]);
        }
      }
    }
  }
  const auto kernels = detail::energy_kernels(disc, constants);
  double energy = 0.0;
  for (int c = 0; c < disc.components(); ++c) {
    const ElementField uh = detail::discrete_field(disc, coeffs, c);
    const ElementField err = [&, c](int ex, int ey, const Vec2& x) { return exact.exact(c, x) - uh(ex, ey, x); };
    energy += detail::form_value(disc, kernels, err, err, disc.error_points());
  }
  return {std::sqrt(l2), std::sqrt(h1), std::sqrt(std::max(energy, 0.0))};
}

SparseMatrix energy_gram_scalar(const Discretization& disc, const NitscheConstants& constants) {
  return detail::scalar_matrix(disc, detail::energy_kernels(disc, constants), disc.assembly_points());
}

double energy_norm_squared(const Discretization& disc, const Eigen::VectorXd& coeffs,
                           const NitscheConstants& constants) {
  const SparseMatrix g = energy_gram_scalar(disc, constants);
  const int n = disc.space.scalar_dim();
  double s = 0.0;
  for (int c = 0; c < disc.components(); ++c) {
    const Eigen::VectorXd x = coeffs.segment(c * n, n);
    s += x.dot(g * x);
  }
  return s;
}

Eigen::VectorXd best_approximation(const Discretization& disc, const ManufacturedSolution& exact,
                                   const NitscheConstants& constants) {
  const SparseMatrix g = energy_gram_scalar(disc, constants);
  Eigen::SimplicialLLT<SparseMatrix> llt(g);
  if (llt.info() != Eigen::Success) throw NotPositiveDefiniteError("energy Gram matrix is not positive definite");
  const auto kernels = detail::energy_kernels(disc, constants);
  const int n = disc.space.scalar_dim();
  Eigen::VectorXd out(disc.space.dim());
  for (int c = 0; c < disc.components(); ++c) {
    const Eigen::VectorXd load =
        detail::pair_with_basis(disc, kernels, detail::exact_field(exact, c), disc.error_points());
    out.segment(c * n, n) = llt.solve(load);
  }
  return out;
}

}  // namespace nitsche
