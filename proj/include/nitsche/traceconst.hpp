#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nitsche/assembly.hpp"
#include "nitsche/constants.hpp"

namespace nitsche {

/// Dense pencil B x = lambda A x over the full scalar spline space.
struct TracePencil {
  Eigen::MatrixXd boundary;  // B
  Eigen::MatrixXd interior;  // A
  int slot = 0;
  std::string meaning;
};

inline constexpr int kMaxPencilUnknowns = 5000;

/// Scaled boundary-operator energy of one constant slot against a(.,.):
///   Poisson     h |grad w . n|^2 on set-1 Dirichlet edges
///   Biharmonic  h^3 |grad(lap w) . n|^2 (slot 0), h |lap w|^2 (slot 1)
///   Plate       h^3 |T_z|^2, h^2 [[B_nt]]^2 at Dirichlet corners, h |B_nn|^2, each over t^3 E
/// Components carry identical uncoupled blocks, so the scalar pencil is used.
TracePencil assemble_trace_pencil(const Discretization& disc, int slot);
std::vector<TracePencil> assemble_trace_pencils(const Discretization& disc);

class DegeneratePencilError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PencilMethod {
  Auto,           // QZ up to kQzLimit unknowns, spectral shift above
  QZ,             // generalized Schur form, (alpha, beta) pairs
  SpectralShift,  // symmetric-definite B x = mu (A + B + delta I) x, lambda = mu / (1 - mu)
};

inline constexpr int kQzLimit = 500;

/// Largest finite eigenvalue of B x = lambda A x. Pairs with |beta| <= cutoff * max(|A|, |B|)
/// (after balancing the two norms) are infinite. Throws DegeneratePencilError when none is finite.
double largest_finite_eigenvalue(const Eigen::MatrixXd& boundary, const Eigen::MatrixXd& interior,
                                 double cutoff = 1e-10, PencilMethod method = PencilMethod::Auto);
double largest_finite_eigenvalue(const TracePencil& pencil, double cutoff = 1e-10,
                                 PencilMethod method = PencilMethod::Auto);

/// Factor turning lambda_max into C_tr: 1 (Poisson), 2 (biharmonic), 3 (plate).
double trace_multiplier(ProblemKind kind);

/// C_tr used when a pencil has lambda_max = 0 (the boundary operator vanishes on
/// the discrete space). Any positive value satisfies the trace inequality then.
inline constexpr double kTraceFloor = 1.0;

/// trace_multiplier(kind) * lambda_max, or kTraceFloor when that is zero.
double trace_constant(ProblemKind kind, double lambda_max);

struct TraceEstimate {
  int slot = 0;
  std::string op;
  double lambda_max = 0.0;
  double c_tr = 0.0;
};

std::vector<TraceEstimate> estimate_trace(const Discretization& disc, PencilMethod method = PencilMethod::Auto);

/// C_tr per slot from the pencils and C_pen = gamma^2 C_tr.
NitscheConstants constants_for(const Discretization& disc, const std::vector<double>& gamma,
                               PencilMethod method = PencilMethod::Auto);
NitscheConstants constants_from_estimates(const std::vector<TraceEstimate>& estimates,
                                          const std::vector<double>& gamma);

/// Single-constant alternative: one pencil of the alpha-weighted sum of all
/// boundary energies, C = lambda_max, and C_tr,i = alpha_i C per slot.
/// The weights must be positive; they are the user's choice.
NitscheConstants constants_weighted(const Discretization& disc, const std::vector<double>& alpha, double gamma,
                                    PencilMethod method = PencilMethod::Auto);

/// Largest sampled Rayleigh quotient v^T B v / v^T A v over random vectors
/// A-orthogonalized against the null space of A (quotients with v^T A v ~ 0 skipped).
double sampled_rayleigh_max(const TracePencil& pencil, int samples, unsigned seed);

}  // namespace nitsche
