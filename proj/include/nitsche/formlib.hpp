#pragma once

#include <array>

#include <Eigen/Core>

#include "nitsche/constants.hpp"
#include "nitsche/jet.hpp"
#include "nitsche/mesh.hpp"

namespace nitsche {

/// Isotropic Kirchhoff-Love plate material. Ignored by the other problems.
struct MaterialParams {
  double youngs_modulus = 1.0;
  double poisson_ratio = 0.3;
  double thickness = 1.0;

  void validate() const;
  /// D = t^3 E / (12 (1 - nu^2))
  double rigidity() const;
  /// t^3 E, the plate penalty prefactor.
  double penalty_prefactor() const { return thickness * thickness * thickness * youngs_modulus; }
};

enum class EnforcementVariant { NitscheSymmetric, PenaltyOnly };

const char* to_string(EnforcementVariant variant);

/// Condition sets used by a kind: 1 for Poisson, 2 otherwise.
int num_condition_sets(ProblemKind kind);
/// Smallest spline degree admissible for a kind.
int minimum_degree(ProblemKind kind);
/// Highest derivative order any kernel of the kind touches on discrete fields.
int required_derivative(ProblemKind kind);

// Plate stress resultants, with beta = -Hess(w).
Eigen::Matrix2d bending_strain(const Jet& w);
Eigen::Matrix2d bending_stress(const MaterialParams& params, const Jet& w);
double bending_moment(const MaterialParams& params, const Jet& w, const Vec2& n);
double twisting_moment(const MaterialParams& params, const Jet& w, const Vec2& n, const Vec2& t);
/// T_z = (div B) . n + d B_nt / dt
double ersatz_force(const MaterialParams& params, const Jet& w, const Vec2& n, const Vec2& t);
/// theta_n = -grad w . n
double normal_rotation(const Jet& w, const Vec2& n);

/// Interior integrand a(w, v) at one point.
double interior_kernel(ProblemKind kind, const MaterialParams& params, const Jet& w, const Jet& v);

/// Boundary operator values per condition set, arranged so that the boundary
/// pairing is sum_set flux[set] * trace[set] (plus plate corner terms).
///   Poisson:    (grad w . n, -)
///   Biharmonic: (-grad(lap w) . n, lap w)
///   Plate:      (T_z(w), B_nn(w))
std::array<double, 2> boundary_operator(ProblemKind kind, const MaterialParams& params, const Jet& w,
                                        const Vec2& n, const Vec2& t);
/// Traces paired with boundary_operator.
///   Poisson: (v, -). Biharmonic: (v, grad v . n). Plate: (v, theta_n(v)).
std::array<double, 2> trace_operator(ProblemKind kind, const Jet& v, const Vec2& n);

/// B_nt on the outgoing side minus B_nt on the incoming side (counterclockwise).
double corner_jump(const MaterialParams& params, const Jet& w, Side incoming, Side outgoing);
double corner_jump(const MaterialParams& params, const Jet& w, const Corner& corner);

/// Penalty weight on an edge of condition set `set` (or the plate corner slot).
///   Poisson C/h, biharmonic C1/h^3 and C2/h, plate t^3E (C1/h^3, C2/h^2, C3/h).
double edge_penalty_weight(ProblemKind kind, const MaterialParams& params, int set, double h,
                           const NitscheConstants& constants);
double corner_penalty_weight(const MaterialParams& params, double h, const NitscheConstants& constants);

/// Weight of the boundary-operator term in the energy norm (the eta map).
double edge_eta_weight(ProblemKind kind, const MaterialParams& params, int set, double h,
                       const NitscheConstants& constants);
double corner_eta_weight(const MaterialParams& params, double h, const NitscheConstants& constants);

struct EdgeKernels {
  double consistency = 0.0;
  double symmetry = 0.0;
  double penalty = 0.0;

  double total() const { return consistency + symmetry + penalty; }
};

/// Bilinear boundary integrand for trial w and test v on a Dirichlet edge of set `set`.
EdgeKernels nitsche_edge_kernels(ProblemKind kind, const MaterialParams& params, EnforcementVariant variant,
                                 const Jet& w, const Jet& v, const BoundaryEdge& edge, int set,
                                 const NitscheConstants& constants);
/// Plate point terms at a Dirichlet corner.
EdgeKernels nitsche_corner_kernels(const MaterialParams& params, EnforcementVariant variant, const Jet& w,
                                   const Jet& v, const Corner& corner, const NitscheConstants& constants);

struct RhsKernels {
  double body = 0.0;
  double neumann = 0.0;
  double symmetry = 0.0;
  double penalty = 0.0;
  double corner = 0.0;

  double total() const { return body + neumann + symmetry + penalty + corner; }
};

RhsKernels body_rhs(double f, const Jet& v);
/// Dirichlet edge of set `set` with prescribed trace value g.
RhsKernels dirichlet_edge_rhs(ProblemKind kind, const MaterialParams& params, EnforcementVariant variant,
                              const Jet& v, const BoundaryEdge& edge, int set, double g,
                              const NitscheConstants& constants);
/// Neumann edge of set `set` with prescribed data:
///   Poisson h = grad u . n; biharmonic p = grad(lap u) . n (set 1), q = lap u (set 2);
///   plate T_z (set 1), B_nn (set 2).
RhsKernels neumann_edge_rhs(ProblemKind kind, const Jet& v, const BoundaryEdge& edge, int set, double data);
/// Plate Dirichlet corner with prescribed displacement.
RhsKernels dirichlet_corner_rhs(const MaterialParams& params, EnforcementVariant variant, const Jet& v,
                                const Corner& corner, double displacement, const NitscheConstants& constants);
/// Plate Neumann corner with prescribed corner force [[B_nt]].
RhsKernels neumann_corner_rhs(const Jet& v, double corner_force);

}  // namespace nitsche
