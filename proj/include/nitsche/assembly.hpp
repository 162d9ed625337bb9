#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "nitsche/constants.hpp"
#include "nitsche/formlib.hpp"
#include "nitsche/manufactured.hpp"
#include "nitsche/mesh.hpp"
#include "nitsche/spline.hpp"

namespace nitsche {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Everything geometric about one discrete problem: mesh, spline space,
/// boundary partition and the derived edge meshes and corners.
struct Discretization {
  ProblemKind kind;
  MaterialParams params;
  CartesianMesh mesh;
  TensorSplineSpace space;
  BoundaryPartition partition;
  std::array<EdgeMesh, 2> dirichlet_edges;  // per condition set; set 2 empty for Poisson
  std::array<EdgeMesh, 2> neumann_edges;
  CornerSet corners;

  /// Throws invalid_argument when the degree is too low for the kind or the
  /// plate is given more than one component.
  static Discretization create(ProblemKind kind, const MaterialParams& params, const CartesianMesh& mesh,
                               int degree, int components, const BoundaryPartition& partition);

  int degree() const { return space.min_degree(); }
  int components() const { return space.components(); }
  /// Gauss points per direction for assembly.
  int assembly_points() const { return degree() + 1; }
  /// Gauss points per direction for error integrals.
  int error_points() const { return degree() + 3; }
  /// Plate corner terms apply.
  bool has_corners() const { return kind == ProblemKind::KirchhoffPlate; }
};

/// Global numbering: component c, scalar basis index i -> c * scalar_dim + i.
class DofMap {
 public:
  explicit DofMap(const TensorSplineSpace& space) : scalar_dim_(space.scalar_dim()), components_(space.components()) {}

  int global(int component, int scalar_index) const { return component * scalar_dim_ + scalar_index; }
  int component_of(int global_index) const { return global_index / scalar_dim_; }
  int scalar_of(int global_index) const { return global_index % scalar_dim_; }
  int size() const { return scalar_dim_ * components_; }
  int scalar_dim() const { return scalar_dim_; }

 private:
  int scalar_dim_;
  int components_;
};

struct AssembledSystem {
  SparseMatrix matrix;
  Eigen::VectorXd rhs;
  ProblemKind kind = ProblemKind::Poisson;
  EnforcementVariant variant = EnforcementVariant::NitscheSymmetric;
  NitscheConstants constants;
  int nx = 0;
  int ny = 0;
};

/// Scalar (one-component) system matrix; the full matrix is one copy per component.
SparseMatrix assemble_scalar_matrix(const Discretization& disc, const NitscheConstants& constants,
                                    EnforcementVariant variant);
/// `points` overrides the Gauss points per direction (0: assembly_points()).
Eigen::VectorXd assemble_rhs(const Discretization& disc, const ProblemData& data, const NitscheConstants& constants,
                             EnforcementVariant variant, int points = 0);
AssembledSystem assemble(const Discretization& disc, const ProblemData& data, const NitscheConstants& constants,
                         EnforcementVariant variant);

/// a_h(u, N_i) with u the exact manufactured field, for every global basis function.
/// `points` overrides the Gauss points per direction (0: error_points()).
Eigen::VectorXd apply_to_exact(const Discretization& disc, const ManufacturedSolution& exact,
                               const NitscheConstants& constants, EnforcementVariant variant, int points = 0);

class NotPositiveDefiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  /// Above this many unknowns the conjugate-gradient path is used.
  int direct_limit = 400000;
  double cg_tolerance = 1e-12;
};

/// Symmetric positive-definite solve. Throws NotPositiveDefiniteError when the
/// Cholesky factorization breaks down.
Eigen::VectorXd solve(const AssembledSystem& system, const SolveOptions& options = {});
Eigen::VectorXd solve(const SparseMatrix& matrix, const Eigen::VectorXd& rhs, const SolveOptions& options = {});

struct ErrorReport {
  double l2 = 0.0;
  double h1_semi = 0.0;
  double energy = 0.0;
};

/// Errors of the discrete solution against the exact fields. The energy norm is
/// a(e,e) + <Be, eta Be> + 2 <eps^-1 Te, Te> with eta, eps^-1 from the constants.
ErrorReport error_norms(const Discretization& disc, const Eigen::VectorXd& coeffs, const ManufacturedSolution& exact,
                        const NitscheConstants& constants);

/// Energy inner-product Gram matrix on the scalar space.
SparseMatrix energy_gram_scalar(const Discretization& disc, const NitscheConstants& constants);
/// Squared energy norm of a discrete field.
double energy_norm_squared(const Discretization& disc, const Eigen::VectorXd& coeffs,
                           const NitscheConstants& constants);

/// Minimizer of the energy-norm distance to the exact fields over the discrete space.
Eigen::VectorXd best_approximation(const Discretization& disc, const ManufacturedSolution& exact,
                                   const NitscheConstants& constants);

/// Jet of one component of a discrete field, evaluated on element (ex, ey).
Jet discrete_jet(const Discretization& disc, const Eigen::VectorXd& coeffs, int component, int ex, int ey,
                 const Vec2& x, int max_deriv);

}  // namespace nitsche
