#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "nitsche/fields.hpp"
#include "nitsche/formlib.hpp"
#include "nitsche/mesh.hpp"

namespace nitsche {

struct BoundaryPoint {
  Vec2 x;
  Vec2 normal;
  Vec2 tangent;
};

using BodyFn = std::function<double(int component, const Vec2& x)>;
using BoundaryFn = std::function<double(int component, const BoundaryPoint& p)>;
using CornerFn = std::function<double(int component, const Corner& c)>;

/// Prescribed data for every condition set.
///
/// dirichlet[s] is the prescribed trace of set s+1 (g; normal derivative for the
/// biharmonic set 2; theta_n for the plate set 2). neumann[s] is the natural data
/// in the sense of neumann_edge_rhs. corner_force is the plate [[B_nt]] at Neumann corners.
struct BoundaryData {
  std::array<BoundaryFn, 2> dirichlet;
  std::array<BoundaryFn, 2> neumann;
  CornerFn corner_force;
};

struct ProblemData {
  BodyFn body;
  BoundaryData boundary;

  /// Zero load and zero boundary data.
  static ProblemData homogeneous();
};

struct SolutionChoice {
  enum class Family { Trig, Poly };

  Family family = Family::Trig;
  double a = 1.0;
  double b = 1.0;
  double amplitude = 1.0;
  int degree = 2;  // poly_k only

  /// "trig" or "poly_k" with k >= 0.
  static SolutionChoice parse(const std::string& name);
  std::string name() const;
};

struct ManufacturedSolution {
  ProblemKind kind = ProblemKind::Poisson;
  MaterialParams params;
  std::vector<ScalarField> fields;  // one per component
  ProblemData data;

  int components() const { return static_cast<int>(fields.size()); }
  Jet exact(int component, const Vec2& x) const { return fields.at(component)(x); }
};

/// Data derived from given exact fields through the strong form.
ManufacturedSolution manufactured_from_fields(ProblemKind kind, const MaterialParams& params,
                                              std::vector<ScalarField> fields);

/// Catalog solution per component.
///   trig:   amplitude * sin(a pi x + c pi/4) * sin(b pi y), component c
///   poly_k: fixed coefficients on x^i y^j, i, j <= k, varying with the component
ManufacturedSolution manufactured(ProblemKind kind, const MaterialParams& params, int components,
                                  const SolutionChoice& choice);

/// Strong-form load at a point: -lap u, lap^2 u, or D lap^2 u.
double strong_load(ProblemKind kind, const MaterialParams& params, const Jet& u);

}  // namespace nitsche
