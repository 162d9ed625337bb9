#include "nitsche/formlib.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nitsche {

namespace {

void check_set(ProblemKind kind, int set) {
  if (set < 1 || set > num_condition_sets(kind)) {
    throw std::invalid_argument(std::string("condition set ") + std::to_string(set) + " not used by " +
                                to_string(kind));
  }
}

double positive_or_zero_ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

}  // namespace

void MaterialParams::validate() const {
  if (!(youngs_modulus > 0.0)) throw std::invalid_argument("youngs_modulus must be positive");
  if (!(thickness > 0.0)) throw std::invalid_argument("thickness must be positive");
  if (!(poisson_ratio > -1.0 && poisson_ratio < 0.5)) {
    throw std::invalid_argument("poisson_ratio must lie in (-1, 0.5)");
  }
}

double MaterialParams::rigidity() const {
  return thickness * thickness * thickness * youngs_modulus / (12.0 * (1.0 - poisson_ratio * poisson_ratio));
}

const char* to_string(EnforcementVariant variant) {
  return variant == EnforcementVariant::NitscheSymmetric ? "nitsche" : "penalty";
}

int num_condition_sets(ProblemKind kind) { return kind == ProblemKind::Poisson ? 1 : 2; }

int minimum_degree(ProblemKind kind) { return kind == ProblemKind::Poisson ? 1 : 2; }

int required_derivative(ProblemKind kind) { return kind == ProblemKind::Poisson ? 1 : 3; }

Eigen::Matrix2d bending_strain(const Jet& w) {
  Eigen::Matrix2d beta;
  beta << -w.hess[0], -w.hess[1], -w.hess[1], -w.hess[2];
  return beta;
}

Eigen::Matrix2d bending_stress(const MaterialParams& params, const Jet& w) {
  const double nu = params.poisson_ratio;
  const Eigen::Matrix2d beta = bending_strain(w);
  return params.rigidity() * (nu * beta.trace() * Eigen::Matrix2d::Identity() + (1.0 - nu) * beta);
}

double bending_moment(const MaterialParams& params, const Jet& w, const Vec2& n) {
  const double nu = params.poisson_ratio;
  return -params.rigidity() * (nu * w.laplacian() + (1.0 - nu) * w.hess_dir(n, n));
}

double twisting_moment(const MaterialParams& params, const Jet& w, const Vec2& n, const Vec2& t) {
  return -params.rigidity() * (1.0 - params.poisson_ratio) * w.hess_dir(n, t);
}

double ersatz_force(const MaterialParams& params, const Jet& w, const Vec2& n, const Vec2& t) {
  return -params.rigidity() * (w.grad_laplacian().dot(n) + (1.0 - params.poisson_ratio) * w.third_dir(n, t, t));
}

double normal_rotation(const Jet& w, const Vec2& n) { return -w.gradient().dot(n); }

double interior_kernel(ProblemKind kind, const MaterialParams& params, const Jet& w, const Jet& v) {
  switch (kind) {
    case ProblemKind::Poisson:
      return w.grad[0] * v.grad[0] + w.grad[1] * v.grad[1];
    case ProblemKind::Biharmonic:
      return w.laplacian() * v.laplacian();
    case ProblemKind::KirchhoffPlate: {
      const double nu = params.poisson_ratio;
      return params.rigidity() * (nu * w.laplacian() * v.laplacian() + (1.0 - nu) * w.hess_frobenius_dot(v));
    }
  }
  return 0.0;
}

std::array<double, 2> boundary_operator(ProblemKind kind, const MaterialParams& params, const Jet& w,
                                        const Vec2& n, const Vec2& t) {
  switch (kind) {
    case ProblemKind::Poisson:
      return {w.gradient().dot(n), 0.0};
    case ProblemKind::Biharmonic:
      return {-w.grad_laplacian().dot(n), w.laplacian()};
    case ProblemKind::KirchhoffPlate:
      return {ersatz_force(params, w, n, t), bending_moment(params, w, n)};
  }
  return {0.0, 0.0};
}

std::array<double, 2> trace_operator(ProblemKind kind, const Jet& v, const Vec2& n) {
  switch (kind) {
    case ProblemKind::Poisson:
      return {v.value, 0.0};
    case ProblemKind::Biharmonic:
      return {v.value, v.gradient().dot(n)};
    case ProblemKind::KirchhoffPlate:
      return {v.value, normal_rotation(v, n)};
  }
  return {0.0, 0.0};
}

double corner_jump(const MaterialParams& params, const Jet& w, Side incoming, Side outgoing) {
  return twisting_moment(params, w, outward_normal(outgoing), ccw_tangent(outgoing)) -
         twisting_moment(params, w, outward_normal(incoming), ccw_tangent(incoming));
}

double corner_jump(const MaterialParams& params, const Jet& w, const Corner& corner) {
  return corner_jump(params, w, corner.incoming, corner.outgoing);
}

double edge_penalty_weight(ProblemKind kind, const MaterialParams& params, int set, double h,
                           const NitscheConstants& constants) {
  check_set(kind, set);
  const double c = constants.penalty.at(edge_slot(kind, set));
  switch (kind) {
    case ProblemKind::Poisson:
      return c / h;
    case ProblemKind::Biharmonic:
      return set == 1 ? c / (h * h * h) : c / h;
    case ProblemKind::KirchhoffPlate:
      return params.penalty_prefactor() * (set == 1 ? c / (h * h * h) : c / h);
  }
  return 0.0;
}

double corner_penalty_weight(const MaterialParams& params, double h, const NitscheConstants& constants) {
  return params.penalty_prefactor() * constants.penalty.at(kCornerSlot) / (h * h);
}

double edge_eta_weight(ProblemKind kind, const MaterialParams& params, int set, double h,
                       const NitscheConstants& constants) {
  check_set(kind, set);
  const double c = constants.trace.at(edge_slot(kind, set));
  const double hk = (kind != ProblemKind::Poisson && set == 1) ? h * h * h : h;
  const double scale = kind == ProblemKind::KirchhoffPlate ? params.penalty_prefactor() : 1.0;
  return positive_or_zero_ratio(hk, c * scale);
}

double corner_eta_weight(const MaterialParams& params, double h, const NitscheConstants& constants) {
  return positive_or_zero_ratio(h * h, constants.trace.at(kCornerSlot) * params.penalty_prefactor());
}

EdgeKernels nitsche_edge_kernels(ProblemKind kind, const MaterialParams& params, EnforcementVariant variant,
                                 const Jet& w, const Jet& v, const BoundaryEdge& edge, int set,
                                 const NitscheConstants& constants) {
  const int s = set - 1;
  const double tw = trace_operator(kind, w, edge.normal)[s];
  const double tv = trace_operator(kind, v, edge.normal)[s];
  EdgeKernels k;
  k.penalty = edge_penalty_weight(kind, params, set, edge.h, constants) * tw * tv;
  if (variant == EnforcementVariant::NitscheSymmetric) {
    k.consistency = -boundary_operator(kind, params, w, edge.normal, edge.tangent)[s] * tv;
    k.symmetry = -boundary_operator(kind, params, v, edge.normal, edge.tangent)[s] * tw;
  }
  return k;
}

EdgeKernels nitsche_corner_kernels(const MaterialParams& params, EnforcementVariant variant, const Jet& w,
                                   const Jet& v, const Corner& corner, const NitscheConstants& constants) {
  EdgeKernels k;
  k.penalty = corner_penalty_weight(params, corner.h, constants) * w.value * v.value;
  if (variant == EnforcementVariant::NitscheSymmetric) {
    k.consistency = -corner_jump(params, w, corner) * v.value;
    k.symmetry = -corner_jump(params, v, corner) * w.value;
  }
  return k;
}

RhsKernels body_rhs(double f, const Jet& v) {
  RhsKernels r;
  r.body = f * v.value;
  return r;
}

RhsKernels dirichlet_edge_rhs(ProblemKind kind, const MaterialParams& params, EnforcementVariant variant,
                              const Jet& v, const BoundaryEdge& edge, int set, double g,
                              const NitscheConstants& constants) {
  const int s = set - 1;
  RhsKernels r;
  r.penalty = edge_penalty_weight(kind, params, set, edge.h, constants) * trace_operator(kind, v, edge.normal)[s] * g;
  if (variant == EnforcementVariant::NitscheSymmetric) {
    r.symmetry = -boundary_operator(kind, params, v, edge.normal, edge.tangent)[s] * g;
  }
  return r;
}

RhsKernels neumann_edge_rhs(ProblemKind kind, const Jet& v, const BoundaryEdge& edge, int set, double data) {
  check_set(kind, set);
  const double sign = (kind == ProblemKind::Biharmonic && set == 1) ? -1.0 : 1.0;
  RhsKernels r;
  r.neumann = sign * data * trace_operator(kind, v, edge.normal)[set - 1];
  return r;
}

RhsKernels dirichlet_corner_rhs(const MaterialParams& params, EnforcementVariant variant, const Jet& v,
                                const Corner& corner, double displacement, const NitscheConstants& constants) {
  RhsKernels r;
  r.penalty = corner_penalty_weight(params, corner.h, constants) * v.value * displacement;
  if (variant == EnforcementVariant::NitscheSymmetric) {
    r.symmetry = -corner_jump(params, v, corner) * displacement;
  }
  return r;
}

RhsKernels neumann_corner_rhs(const Jet& v, double corner_force) {
  RhsKernels r;
  r.corner = corner_force * v.value;
  return r;
}

// ---------------------------------------------------------------------------

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Poisson: return "poisson";
    case ProblemKind::Biharmonic: return "biharmonic";
    case ProblemKind::KirchhoffPlate: return "plate";
  }
  return "?";
}

int num_constant_slots(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Poisson: return 1;
    case ProblemKind::Biharmonic: return 2;
    case ProblemKind::KirchhoffPlate: return 3;
  }
  return 0;
}

int edge_slot(ProblemKind kind, int set) {
  if (set == 1) return 0;
  if (set == 2 && kind == ProblemKind::Biharmonic) return 1;
  if (set == 2 && kind == ProblemKind::KirchhoffPlate) return 2;
  throw std::invalid_argument("edge_slot: no condition set " + std::to_string(set) + " for " + to_string(kind));
}

std::string slot_name(ProblemKind kind, int slot) {
  switch (kind) {
    case ProblemKind::Poisson: return "grad_n";
    case ProblemKind::Biharmonic: return slot == 0 ? "grad_lap_n" : "lap";
    case ProblemKind::KirchhoffPlate: return slot == 0 ? "T_z" : (slot == 1 ? "corner" : "B_nn");
  }
  return "?";
}

NitscheConstants NitscheConstants::from_trace(std::vector<double> c_tr, std::vector<double> gamma) {
  if (c_tr.size() != gamma.size()) throw std::invalid_argument("NitscheConstants: size mismatch");
  NitscheConstants c;
  for (std::size_t i = 0; i < c_tr.size(); ++i) {
    if (!(gamma[i] > 1.0)) {
      throw std::invalid_argument("gamma must lie in the open interval (1, inf); got " + std::to_string(gamma[i]));
    }
    if (!(c_tr[i] >= 0.0)) throw std::invalid_argument("C_tr must be nonnegative");
    c.penalty.push_back(gamma[i] * gamma[i] * c_tr[i]);
  }
  c.trace = std::move(c_tr);
  c.gamma = std::move(gamma);
  return c;
}

NitscheConstants NitscheConstants::from_values(std::vector<double> c_tr, std::vector<double> c_pen) {
  if (c_tr.size() != c_pen.size()) throw std::invalid_argument("NitscheConstants: size mismatch");
  NitscheConstants c;
  for (std::size_t i = 0; i < c_tr.size(); ++i) {
    if (!(c_tr[i] >= 0.0) || !(c_pen[i] >= 0.0)) throw std::invalid_argument("constants must be nonnegative");
    c.gamma.push_back(c_tr[i] > 0.0 ? std::sqrt(c_pen[i] / c_tr[i]) : 0.0);
  }
  c.trace = std::move(c_tr);
  c.penalty = std::move(c_pen);
  return c;
}

bool NitscheConstants::coercive() const {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (!(penalty[i] > trace[i])) return false;
  }
  return true;
}

}  // namespace nitsche
