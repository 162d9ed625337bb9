#include "nitsche/manufactured.hpp"

#include <numbers>
#include <stdexcept>

namespace nitsche {

ProblemData ProblemData::homogeneous() {
  ProblemData d;
  d.body = [](int, const Vec2&) { return 0.0; };
  for (int s = 0; s < 2; ++s) {
    d.boundary.dirichlet[s] = [](int, const BoundaryPoint&) { return 0.0; };
    d.boundary.neumann[s] = [](int, const BoundaryPoint&) { return 0.0; };
  }
  d.boundary.corner_force = [](int, const Corner&) { return 0.0; };
  return d;
}

SolutionChoice SolutionChoice::parse(const std::string& name) {
  SolutionChoice c;
  if (name == "trig") {
    c.family = Family::Trig;
    return c;
  }
  if (name.rfind("poly_", 0) == 0 && name.size() > 5) {
    const std::string digits = name.substr(5);
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      c.family = Family::Poly;
      c.degree = std::stoi(digits);
      return c;
    }
  }
  throw std::invalid_argument("unknown manufactured solution '" + name + "' (expected trig or poly_<k>)");
}

std::string SolutionChoice::name() const {
  return family == Family::Trig ? "trig" : "poly_" + std::to_string(degree);
}

double strong_load(ProblemKind kind, const MaterialParams& params, const Jet& u) {
  switch (kind) {
    case ProblemKind::Poisson: return -u.laplacian();
    case ProblemKind::Biharmonic: return u.bilaplacian();
    case ProblemKind::KirchhoffPlate: return params.rigidity() * u.bilaplacian();
  }
  return 0.0;
}

ManufacturedSolution manufactured_from_fields(ProblemKind kind, const MaterialParams& params,
                                              std::vector<ScalarField> fields) {
  if (fields.empty()) throw std::invalid_argument("manufactured: need at least one component");
  if (kind == ProblemKind::KirchhoffPlate) params.validate();
  ManufacturedSolution m;
  m.kind = kind;
  m.params = params;
  m.fields = std::move(fields);
  // Data closures share the field list by value.
  const auto f = m.fields;
  m.data.body = [=](int c, const Vec2& x) { return strong_load(kind, params, f.at(c)(x)); };
  for (int s = 0; s < 2; ++s) {
    m.data.boundary.dirichlet[s] = [=](int c, const BoundaryPoint& p) {
      return trace_operator(kind, f.at(c)(p.x), p.normal)[s];
    };
    m.data.boundary.neumann[s] = [=](int c, const BoundaryPoint& p) {
      const Jet u = f.at(c)(p.x);
      if (kind == ProblemKind::Biharmonic && s == 0) return u.grad_laplacian().dot(p.normal);
      return boundary_operator(kind, params, u, p.normal, p.tangent)[s];
    };
  }
  m.data.boundary.corner_force = [=](int c, const Corner& corner) {
    return corner_jump(params, f.at(c)(corner.point), corner);
  };
  return m;
}

ManufacturedSolution manufactured(ProblemKind kind, const MaterialParams& params, int components,
                                  const SolutionChoice& choice) {
  if (components < 1) throw std::invalid_argument("manufactured: components must be >= 1");
  if (kind == ProblemKind::KirchhoffPlate && components != 1) {
    throw std::invalid_argument("manufactured: the plate has a single deflection component");
  }
  std::vector<ScalarField> fields;
  for (int c = 0; c < components; ++c) {
    if (choice.family == SolutionChoice::Family::Trig) {
      fields.push_back(trig_field(choice.a, choice.b, choice.amplitude, c * std::numbers::pi / 4.0, 0.0));
    } else {
      if (choice.degree < 0) throw std::invalid_argument("manufactured: poly degree must be >= 0");
      const int k = choice.degree;
      Eigen::MatrixXd coeffs(k + 1, k + 1);
      for (int i = 0; i <= k; ++i) {
        for (int j = 0; j <= k; ++j) {
          const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
          coeffs(i, j) = choice.amplitude * (sign / (1.0 + i + 2.0 * j) + 0.25 * c);
        }
      }
      fields.push_back(polynomial_field(coeffs));
    }
  }
  return manufactured_from_fields(kind, params, std::move(fields));
}

}  // namespace nitsche
