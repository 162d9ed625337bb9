#include "doctest.h"
#include "nitsche/assembly.hpp"
#include "nitsche/traceconst.hpp"
#include "test_util.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace nitsche;

namespace {

MaterialParams material() {
  MaterialParams mp;
  mp.youngs_modulus = 10;
  mp.poisson_ratio = 0.3;
  mp.thickness = 0.5;
  return mp;
}

Discretization make(ProblemKind kind, int n, int p, int m = 1,
                    BoundaryPartition part = BoundaryPartition::all_dirichlet()) {
  return Discretization::create(kind, material(), build_mesh(RectDomain(1, 1), n, n), p, m, part);
}

NitscheConstants gamma2(const Discretization& d) {
  return constants_for(d, std::vector<double>(num_constant_slots(d.kind), 2.0));
}

double max_asym(const SparseMatrix& k) {
  const Eigen::MatrixXd d(k);
  return (d - d.transpose()).cwiseAbs().maxCoeff() / d.cwiseAbs().maxCoeff();
}

BoundaryPartition mixed() {
  using B = BcType;
  return BoundaryPartition({B::Dirichlet, B::Neumann, B::Neumann, B::Dirichlet},
                           {B::Dirichlet, B::Neumann, B::Neumann, B::Dirichlet});
}

}  // namespace

TEST_CASE("DofMap is a bijection") {
  const Discretization d = make(ProblemKind::Poisson, 3, 2, 2);
  const DofMap map(d.space);
  std::set<int> seen;
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < map.scalar_dim(); ++i) {
      const int g = map.global(c, i);
      CHECK(map.component_of(g) == c);
      CHECK(map.scalar_of(g) == i);
      seen.insert(g);
    }
  CHECK(static_cast<int>(seen.size()) == map.size());
  CHECK(*seen.rbegin() == map.size() - 1);
}

TEST_CASE("degree guard") {
  CHECK_THROWS_AS(make(ProblemKind::Biharmonic, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(make(ProblemKind::KirchhoffPlate, 2, 2, 2), std::invalid_argument);
}

TEST_CASE("zero data gives a zero right-hand side") {
  for (ProblemKind kind : {ProblemKind::Poisson, ProblemKind::Biharmonic, ProblemKind::KirchhoffPlate}) {
    const Discretization d = make(kind, 3, 3, 1, mixed());
    const AssembledSystem s = assemble(d, ProblemData::homogeneous(), gamma2(d), EnforcementVariant::NitscheSymmetric);
    CHECK(s.rhs.norm() == 0.0);
  }
}

TEST_CASE("Poisson 1x1 bilinear system") {
  const Discretization d = make(ProblemKind::Poisson, 1, 1);
  const AssembledSystem s = assemble(d, ProblemData::homogeneous(), gamma2(d), EnforcementVariant::NitscheSymmetric);
  CHECK(s.matrix.rows() == 4);
  CHECK(max_asym(s.matrix) < 1e-14);

  const SparseMatrix k =
      assemble_scalar_matrix(d, NitscheConstants::from_values({0.0}, {0.0}), EnforcementVariant::PenaltyOnly);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(4);
  CHECK((k * ones).norm() < 1e-14);
  CHECK(Eigen::MatrixXd(k)(0, 0) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("scalar solve") {
  SparseMatrix k(1, 1);
  k.insert(0, 0) = 2.0;
  Eigen::VectorXd f(1);
  f << 4.0;
  CHECK(solve(k, f)[0] == doctest::Approx(2.0));
  SparseMatrix neg(1, 1);
  neg.insert(0, 0) = -1.0;
  CHECK_THROWS_AS(solve(neg, f), NotPositiveDefiniteError);
}

TEST_CASE("solve residual and CG path") {
  const Discretization d = make(ProblemKind::Poisson, 8, 2);
  const auto exact = manufactured(ProblemKind::Poisson, d.params, 1, SolutionChoice::parse("trig"));
  const AssembledSystem s = assemble(d, exact.data, gamma2(d), EnforcementVariant::NitscheSymmetric);
  const Eigen::VectorXd x = solve(s);
  const Eigen::MatrixXd kd(s.matrix);
  CHECK((s.matrix * x - s.rhs).norm() <= 1e-10 * (kd.norm() * x.norm() + s.rhs.norm()));
  SolveOptions cg;
  cg.direct_limit = 0;
  const Eigen::VectorXd y = solve(s, cg);
  CHECK((y - x).norm() <= 1e-8 * x.norm());
}

TEST_CASE("under-penalized system is not positive definite") {
  const Discretization d = make(ProblemKind::Poisson, 32, 2);
  const NitscheConstants c = gamma2(d);
  const auto weak = NitscheConstants::from_values(c.trace, {0.01 * c.trace[0]});
  const AssembledSystem s = assemble(d, ProblemData::homogeneous(), weak, EnforcementVariant::NitscheSymmetric);
  CHECK_THROWS_AS(solve(s), NotPositiveDefiniteError);
}

TEST_CASE("error norms of the zero field") {
  const Discretization d = make(ProblemKind::Poisson, 4, 2);
  const auto exact = manufactured(ProblemKind::Poisson, d.params, 1, SolutionChoice::parse("trig"));
  const ErrorReport e = error_norms(d, Eigen::VectorXd::Zero(d.space.dim()), exact, gamma2(d));
  CHECK(e.l2 == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(e.h1_semi == doctest::Approx(std::sqrt(2.0) * M_PI / 2).epsilon(1e-8));
}

TEST_CASE("patch tests") {
  struct Case {
    ProblemKind kind;
    int p;
    int m;
    const char* sol;
  };
  for (const Case& k : {Case{ProblemKind::Poisson, 1, 1, "poly_1"}, Case{ProblemKind::Poisson, 2, 2, "poly_2"},
                        Case{ProblemKind::Biharmonic, 2, 1, "poly_2"}, Case{ProblemKind::Biharmonic, 3, 1, "poly_3"},
                        Case{ProblemKind::KirchhoffPlate, 2, 1, "poly_2"},
                        Case{ProblemKind::KirchhoffPlate, 3, 1, "poly_3"}}) {
    for (const auto& part : {BoundaryPartition::all_dirichlet(), mixed()}) {
      const Discretization d = make(k.kind, 4, k.p, k.m, part);
      const auto exact = manufactured(k.kind, d.params, k.m, SolutionChoice::parse(k.sol));
      const NitscheConstants c = gamma2(d);
      const Eigen::VectorXd x = solve(assemble(d, exact.data, c, EnforcementVariant::NitscheSymmetric));
      const ErrorReport e = error_norms(d, x, exact, c);
      CHECK(e.l2 < 1e-9);
      CHECK(e.h1_semi < 1e-9);
      CHECK(e.energy < 1e-8);
      const ErrorReport b = error_norms(d, best_approximation(d, exact, c), exact, c);
      CHECK(b.energy < 1e-8);
    }
  }
}

TEST_CASE("Galerkin orthogonality") {
  std::mt19937_64 rng(4);
  for (ProblemKind kind : {ProblemKind::Poisson, ProblemKind::Biharmonic, ProblemKind::KirchhoffPlate}) {
    const Discretization d = make(kind, 6, 3, 1, mixed());
    const auto exact = manufactured(kind, d.params, 1, SolutionChoice::parse("trig"));
    const NitscheConstants c = gamma2(d);
    const Eigen::VectorXd au = apply_to_exact(d, exact, c, EnforcementVariant::NitscheSymmetric, 10);
    const Eigen::VectorXd f = assemble_rhs(d, exact.data, c, EnforcementVariant::NitscheSymmetric, 10);
    const double scale = f.norm();
    for (int s = 0; s < 50; ++s) {
      const Eigen::VectorXd v = testutil::random_vector(d.space.dim(), rng);
      CHECK(std::abs(v.dot(au - f)) <= 1e-8 * scale * v.norm());
    }
  }
}

TEST_CASE("penalty-only residual equals the boundary flux integral") {
  const Discretization d = make(ProblemKind::Poisson, 6, 2);
  const auto exact = manufactured(ProblemKind::Poisson, d.params, 1, SolutionChoice::parse("trig"));
  const NitscheConstants c = gamma2(d);
  const Eigen::VectorXd r = apply_to_exact(d, exact, c, EnforcementVariant::PenaltyOnly, 10) -
                            assemble_rhs(d, exact.data, c, EnforcementVariant::PenaltyOnly, 10);
  std::mt19937_64 rng(6);
  for (int s = 0; s < 20; ++s) {
    const Eigen::VectorXd v = testutil::random_vector(d.space.dim(), rng);
    const double flux = testutil::integrate_edges(boundary_edge_mesh(d.mesh), 10, [&](const BoundaryEdge& e, const Vec2& x) {
      return exact.exact(0, x).gradient().dot(e.normal) * discrete_jet(d, v, 0, e.ix, e.iy, x, 0).value;
    });
    CHECK(std::abs(v.dot(r) - flux) <= 1e-8 * std::abs(flux));
  }
}

TEST_CASE("matrices are symmetric and positive definite at gamma = 2") {
  for (ProblemKind kind : {ProblemKind::Poisson, ProblemKind::Biharmonic, ProblemKind::KirchhoffPlate}) {
    for (int p : {2, 3}) {
      const Discretization d = make(kind, 6, p, 1, mixed());
      const AssembledSystem s = assemble(d, ProblemData::homogeneous(), gamma2(d), EnforcementVariant::NitscheSymmetric);
      CHECK(max_asym(s.matrix) <= 1e-12);
      CHECK_NOTHROW(solve(s));
    }
  }
}

TEST_CASE("energy norm axioms and best approximation minimality") {
  std::mt19937_64 rng(12);
  const Discretization d = make(ProblemKind::Biharmonic, 5, 3);
  const NitscheConstants c = gamma2(d);
  for (int s = 0; s < 10; ++s) {
    const Eigen::VectorXd u = testutil::random_vector(d.space.dim(), rng);
    const Eigen::VectorXd v = testutil::random_vector(d.space.dim(), rng);
    const double nu = std::sqrt(energy_norm_squared(d, u, c));
    const double nv = std::sqrt(energy_norm_squared(d, v, c));
    const double nuv = std::sqrt(energy_norm_squared(d, u + v, c));
    CHECK(nuv <= (nu + nv) * (1 + 1e-10));
    CHECK(std::sqrt(energy_norm_squared(d, -3.5 * u, c)) == doctest::Approx(3.5 * nu).epsilon(1e-10));
  }
  const auto exact = manufactured(ProblemKind::Biharmonic, d.params, 1, SolutionChoice::parse("trig"));
  const Eigen::VectorXd best = best_approximation(d, exact, c);
  const double eb = error_norms(d, best, exact, c).energy;
  const Eigen::VectorXd uh = solve(assemble(d, exact.data, c, EnforcementVariant::NitscheSymmetric));
  CHECK(eb <= error_norms(d, uh, exact, c).energy * (1 + 1e-10));
  for (int s = 0; s < 5; ++s) {
    const Eigen::VectorXd pert = best + 1e-3 * testutil::random_vector(d.space.dim(), rng);
    CHECK(eb <= error_norms(d, pert, exact, c).energy);
  }
}

TEST_CASE("vector Poisson components are independent") {
  const Discretization d = make(ProblemKind::Poisson, 6, 2, 2);
  const auto exact = manufactured(ProblemKind::Poisson, d.params, 2, SolutionChoice::parse("trig"));
  const NitscheConstants c = gamma2(d);
  const Eigen::VectorXd x = solve(assemble(d, exact.data, c, EnforcementVariant::NitscheSymmetric));
  const ErrorReport e = error_norms(d, x, exact, c);
  CHECK(e.l2 < 1e-2);
  const ErrorReport b = error_norms(d, best_approximation(d, exact, c), exact, c);
  CHECK(e.energy / b.energy <= 5.0);
}
