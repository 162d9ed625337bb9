#pragma once

#include <functional>

#include "nitsche/assembly.hpp"

namespace nitsche::detail {

/// Field evaluated on a given element (one-sided for discrete fields).
using ElementField = std::function<Jet(int ex, int ey, const Vec2& x)>;

/// Symmetric bilinear form split into cell, Dirichlet-edge and Dirichlet-corner parts.
/// Empty members contribute nothing.
struct BilinearKernels {
  std::function<double(const Jet& w, const Jet& v)> cell;
  std::function<double(const Jet& w, const Jet& v, const BoundaryEdge& edge, int set)> edge;
  std::function<double(const Jet& w, const Jet& v, const Corner& corner)> corner;
};

/// Matrix [form(N_j, N_i)] over the scalar basis.
SparseMatrix scalar_matrix(const Discretization& disc, const BilinearKernels& kernels, int points);
/// Vector [form(w, N_i)] over the scalar basis.
Eigen::VectorXd pair_with_basis(const Discretization& disc, const BilinearKernels& kernels, const ElementField& w,
                                int points);
/// form(w, v)
double form_value(const Discretization& disc, const BilinearKernels& kernels, const ElementField& w,
                  const ElementField& v, int points);

BilinearKernels nitsche_kernels(const Discretization& disc, const NitscheConstants& constants,
                                EnforcementVariant variant);
BilinearKernels energy_kernels(const Discretization& disc, const NitscheConstants& constants);
BilinearKernels interior_only(const Discretization& disc);

/// Max derivative order needed by kernels of this kind.
int eval_order(const Discretization& disc);

ElementField exact_field(const ManufacturedSolution& exact, int component);
ElementField discrete_field(const Discretization& disc, const Eigen::VectorXd& coeffs, int component);

/// Block-diagonal replication of a scalar matrix over the components.
SparseMatrix replicate(const SparseMatrix& scalar, int components);

}  // namespace nitsche::detail
