#include "nitsche/traceconst.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

#include "integration.hpp"

namespace nitsche {

namespace {

// Boundary energy of a slot with unit constant: sum h^k |op w| |op v| / scale.
detail::BilinearKernels boundary_energy(const Discretization& disc, int slot, double weight) {
  detail::BilinearKernels k;
  const ProblemKind kind = disc.kind;
  const MaterialParams params = disc.params;
  const double scale = kind == ProblemKind::KirchhoffPlate ? params.penalty_prefactor() : 1.0;
  if (kind == ProblemKind::KirchhoffPlate && slot == kCornerSlot) {
    k.corner = [=](const Jet& w, const Jet& v, const Corner& c) {
      return weight * c.h * c.h * corner_jump(params, w, c) * corner_jump(params, v, c) / scale;
    };
    return k;
  }
  const int set = (slot == 0) ? 1 : 2;
  k.edge = [=](const Jet& w, const Jet& v, const BoundaryEdge& e, int edge_set) {
    if (edge_set != set) return 0.0;
    const double hk = (kind != ProblemKind::Poisson && set == 1) ? e.h * e.h * e.h : e.h;
    return weight * hk * boundary_operator(kind, params, w, e.normal, e.tangent)[set - 1] *
           boundary_operator(kind, params, v, e.normal, e.tangent)[set - 1] / scale;
  };
  return k;
}

void check_size(const Discretization& disc) {
  if (disc.space.scalar_dim() > kMaxPencilUnknowns) {
    throw std::invalid_argument("trace pencil: " + std::to_string(disc.space.scalar_dim()) +
                                " scalar unknowns exceed the dense limit of " + std::to_string(kMaxPencilUnknowns) +
                                "; estimate on a coarser mesh and reuse the constants");
  }
}

double qz_largest(const Eigen::MatrixXd& b, const Eigen::MatrixXd& a, double cutoff) {
  Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges(b, a, false);
  if (ges.info() != Eigen::Success) throw DegeneratePencilError("QZ iteration did not converge");
  const double scale = std::max(a.norm(), b.norm());
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double beta = ges.betas()[i];
    if (std::abs(beta) <= cutoff * scale) continue;
    best = std::max(best, ges.alphas()[i].real() / beta);
  }
  return best;
}

double shift_largest(const Eigen::MatrixXd& b, const Eigen::MatrixXd& a, double cutoff) {
  const double delta = 1e-12 * std::max(a.norm(), b.norm());
  const Eigen::MatrixXd m = a + b + delta * Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(b, m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw DegeneratePencilError("symmetric-definite eigensolve failed");
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double mu = es.eigenvalues()[i];
    if (1.0 - mu <= cutoff) continue;
    best = std::max(best, mu / (1.0 - mu));
  }
  return best;
}

}  // namespace

TracePencil assemble_trace_pencil(const Discretization& disc, int slot) {
  if (slot < 0 || slot >= num_constant_slots(disc.kind)) {
    throw std::invalid_argument("trace pencil: slot out of range");
  }
  check_size(disc);
  TracePencil p;
  p.slot = slot;
  p.meaning = slot_name(disc.kind, slot);
  p.interior = Eigen::MatrixXd(detail::scalar_matrix(disc, detail::interior_only(disc), disc.assembly_points()));
  p.boundary = Eigen::MatrixXd(detail::scalar_matrix(disc, boundary_energy(disc, slot, 1.0), disc.assembly_points()));
  return p;
}

std::vector<TracePencil> assemble_trace_pencils(const Discretization& disc) {
  std::vector<TracePencil> out;
  for (int s = 0; s < num_constant_slots(disc.kind); ++s) out.push_back(assemble_trace_pencil(disc, s));
  return out;
}

double largest_finite_eigenvalue(const Eigen::MatrixXd& boundary, const Eigen::MatrixXd& interior, double cutoff,
                                 PencilMethod method) {
  if (boundary.rows() != boundary.cols() || interior.rows() != interior.cols() ||
      boundary.rows() != interior.rows()) {
    throw std::invalid_argument("pencil matrices must be square and of equal size");
  }
  if (boundary.rows() == 0) throw DegeneratePencilError("empty pencil");
  const double na = interior.norm();
  const double nb = boundary.norm();
  if (na == 0.0) throw DegeneratePencilError("interior matrix is zero: every eigenvalue is infinite or undefined");
  if (nb == 0.0) return 0.0;
  // Balance the two norms so the infinite-eigenvalue cutoff is relative to both.
  const double s = na / nb;
  const Eigen::MatrixXd b = s * boundary;
  if (method == PencilMethod::Auto) {
    method = interior.rows() <= kQzLimit ? PencilMethod::QZ : PencilMethod::SpectralShift;
  }
  const double best = method == PencilMethod::QZ ? qz_largest(b, interior, cutoff) : shift_largest(b, interior, cutoff);
  if (!std::isfinite(best)) throw DegeneratePencilError("pencil has no finite eigenvalue");
  return std::max(best, 0.0) / s;
}

double largest_finite_eigenvalue(const TracePencil& pencil, double cutoff, PencilMethod method) {
  return largest_finite_eigenvalue(pencil.boundary, pencil.interior, cutoff, method);
}

double trace_constant(ProblemKind kind, double lambda_max) {
  const double c = trace_multiplier(kind) * lambda_max;
  return c <= 1e-12 ? kTraceFloor : c;
}

double trace_multiplier(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Poisson: return 1.0;
    case ProblemKind::Biharmonic: return 2.0;
    case ProblemKind::KirchhoffPlate: return 3.0;
  }
  return 1.0;
}

std::vector<TraceEstimate> estimate_trace(const Discretization& disc, PencilMethod method) {
  std::vector<TraceEstimate> out;
  for (const TracePencil& p : assemble_trace_pencils(disc)) {
    TraceEstimate e;
    e.slot = p.slot;
    e.op = p.meaning;
    e.lambda_max = largest_finite_eigenvalue(p, 1e-10, method);
    e.c_tr = trace_constant(disc.kind, e.lambda_max);
    out.push_back(e);
  }
  return out;
}

NitscheConstants constants_from_estimates(const std::vector<TraceEstimate>& estimates,
                                          const std::vector<double>& gamma) {
  if (gamma.size() != estimates.size()) {
    throw std::invalid_argument("expected " + std::to_string(estimates.size()) + " gamma values");
  }
  std::vector<double> c_tr;
  for (const auto& e : estimates) c_tr.push_back(e.c_tr);
  return NitscheConstants::from_trace(c_tr, gamma);
}

NitscheConstants constants_for(const Discretization& disc, const std::vector<double>& gamma, PencilMethod method) {
  if (static_cast<int>(gamma.size()) != num_constant_slots(disc.kind)) {
    throw std::invalid_argument("expected " + std::to_string(num_constant_slots(disc.kind)) + " gamma values");
  }
  for (double g : gamma) {
    if (!(g > 1.0)) throw std::invalid_argument("gamma must lie in the open interval (1, inf)");
  }
  return constants_from_estimates(estimate_trace(disc, method), gamma);
}

NitscheConstants constants_weighted(const Discretization& disc, const std::vector<double>& alpha, double gamma,
                                    PencilMethod method) {
  const int slots = num_constant_slots(disc.kind);
  if (static_cast<int>(alpha.size()) != slots) {
    throw std::invalid_argument("expected " + std::to_string(slots) + " weights");
  }
  for (double a : alpha) {
    if (!(a > 0.0)) throw std::invalid_argument("weights must be positive");
  }
  check_size(disc);
  const Eigen::MatrixXd a =
      Eigen::MatrixXd(detail::scalar_matrix(disc, detail::interior_only(disc), disc.assembly_points()));
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  for (int s = 0; s < slots; ++s) {
    b += Eigen::MatrixXd(detail::scalar_matrix(disc, boundary_energy(disc, s, 1.0 / alpha[s]), disc.assembly_points()));
  }
  double c = largest_finite_eigenvalue(b, a, 1e-10, method);
  if (c <= 1e-12) c = kTraceFloor;
  std::vector<double> c_tr, g(slots, gamma);
  for (double al : alpha) c_tr.push_back(al * c);
  return NitscheConstants::from_trace(c_tr, g);
}

double sampled_rayleigh_max(const TracePencil& pencil, int samples, unsigned seed) {
  const Eigen::MatrixXd& a = pencil.interior;
  const Eigen::MatrixXd& b = pencil.boundary;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const double tol = 1e-10 * std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 1e-300);
  std::vector<Eigen::Index> kernel;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (std::abs(es.eigenvalues()[i]) <= tol) kernel.push_back(i);
  }
  Eigen::MatrixXd z(a.rows(), static_cast<Eigen::Index>(kernel.size()));
  for (std::size_t k = 0; k < kernel.size(); ++k) z.col(k) = es.eigenvectors().col(kernel[k]);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double best = 0.0;
  Eigen::VectorXd v(a.rows());
  for (int s = 0; s < samples; ++s) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = normal(rng);
    if (z.cols() > 0) v -= z * (z.transpose() * v);
    const double den = v.dot(a * v);
    if (den <= tol * v.squaredNorm()) continue;
    best = std::max(best, v.dot(b * v) / den);
  }
  return best;
}

}  // namespace nitsche
