#include "doctest.h"
#include "nitsche/traceconst.hpp"
#include "test_util.hpp"

#include <cmath>
#include <random>

using namespace nitsche;

namespace {

Discretization make(ProblemKind kind, int n, int p, BoundaryPartition part = BoundaryPartition::all_dirichlet()) {
  MaterialParams mp;
  mp.youngs_modulus = 50;
  mp.poisson_ratio = 0.3;
  mp.thickness = 0.2;
  return Discretization::create(kind, mp, build_mesh(RectDomain(1, 1), n, n), p, 1, part);
}

double sym_residual(const Eigen::MatrixXd& m) { return (m - m.transpose()).cwiseAbs().maxCoeff() / m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("diagonal pencils") {
  Eigen::MatrixXd b = Eigen::Vector2d(2, 1).asDiagonal();
  Eigen::MatrixXd a = Eigen::Vector2d(1, 0).asDiagonal();
  CHECK(largest_finite_eigenvalue(b, a, 1e-10, PencilMethod::QZ) == 2.0);
  CHECK(largest_finite_eigenvalue(b, a, 1e-10, PencilMethod::SpectralShift) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(largest_finite_eigenvalue(Eigen::MatrixXd::Zero(2, 2), Eigen::MatrixXd::Identity(2, 2)) == 0.0);
  CHECK_THROWS_AS(largest_finite_eigenvalue(Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd::Zero(2, 2)),
                  DegeneratePencilError);
}

TEST_CASE("Poisson 1x1 bilinear pencil") {
  const TracePencil p = assemble_trace_pencil(make(ProblemKind::Poisson, 1, 1), 0);
  CHECK(p.interior.rows() == 4);
  CHECK(sym_residual(p.interior) < 1e-12);
  CHECK(sym_residual(p.boundary) < 1e-12);
  // Bilinear Laplacian element matrix on the unit square.
  CHECK(p.interior(0, 0) == doctest::Approx(2.0 / 3.0));
  CHECK(p.interior(0, 3) == doctest::Approx(-1.0 / 3.0));
  CHECK(p.interior.rowwise().sum().norm() < 1e-14);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ea(p.interior), eb(p.boundary);
  CHECK(ea.eigenvalues().minCoeff() > -1e-12);
  CHECK(eb.eigenvalues().minCoeff() > -1e-12);
}

TEST_CASE("pencils are symmetric and semidefinite") {
  std::mt19937_64 rng(1);
  for (ProblemKind kind : {ProblemKind::Poisson, ProblemKind::Biharmonic, ProblemKind::KirchhoffPlate}) {
    for (const TracePencil& p : assemble_trace_pencils(make(kind, 4, 3))) {
      CHECK(sym_residual(p.interior) < 1e-12);
      if (p.boundary.cwiseAbs().maxCoeff() > 0) CHECK(sym_residual(p.boundary) < 1e-12);
      for (int s = 0; s < 100; ++s) {
        const Eigen::VectorXd v = testutil::random_vector(static_cast<int>(p.interior.rows()), rng);
        CHECK(v.dot(p.interior * v) >= -1e-10 * v.squaredNorm() * p.interior.norm());
        CHECK(v.dot(p.boundary * v) >= -1e-10 * v.squaredNorm() * p.boundary.norm());
      }
    }
  }
}

TEST_CASE("harmonic fields are 0/0 directions of the laplacian pencil") {
  const Discretization d = make(ProblemKind::Biharmonic, 3, 3);
  const TracePencil p = assemble_trace_pencil(d, 1);
  const Eigen::VectorXd w = testutil::interpolate(d.space, [](const Vec2& x) { return x.x() * x.y() + 2 * x.x(); });
  CHECK(std::abs(w.dot(p.boundary * w)) < 1e-10);
  CHECK(std::abs(w.dot(p.interior * w)) < 1e-10);
}

TEST_CASE("Poisson pencil against Rayleigh sampling") {
  const TracePencil p = assemble_trace_pencil(make(ProblemKind::Poisson, 4, 2), 0);
  const double lambda = largest_finite_eigenvalue(p);
  const double sampled = sampled_rayleigh_max(p, 10000, 99);
  CHECK(sampled <= lambda * (1 + 1e-10));
  // Refine the best direction by Rayleigh-Ritz ascent to close the gap from below.
  std::mt19937_64 rng(99);
  const double refined = testutil::rayleigh_ascent(p.boundary, p.interior,
                                                   testutil::random_vector(static_cast<int>(p.interior.rows()), rng), 5000);
  CHECK(refined <= lambda * (1 + 1e-8));
  CHECK(refined >= lambda * 0.99);
}

TEST_CASE("QZ and spectral shift agree") {
  for (ProblemKind kind : {ProblemKind::Poisson, ProblemKind::Biharmonic, ProblemKind::KirchhoffPlate}) {
    for (const TracePencil& p : assemble_trace_pencils(make(kind, 5, 3))) {
      const double qz = largest_finite_eigenvalue(p, 1e-10, PencilMethod::QZ);
      const double ss = largest_finite_eigenvalue(p, 1e-10, PencilMethod::SpectralShift);
      CHECK(ss == doctest::Approx(qz).epsilon(1e-6));
    }
  }
}

TEST_CASE("scale invariance") {
  const TracePencil p = assemble_trace_pencil(make(ProblemKind::Biharmonic, 4, 3), 0);
  const double l = largest_finite_eigenvalue(p);
  const double ls = largest_finite_eigenvalue(p.boundary * 37.5, p.interior * 37.5);
  CHECK(std::abs(ls - l) <= 1e-10 * l);
}

TEST_CASE("enlarging the Dirichlet boundary never decreases lambda") {
  using B = BcType;
  const BoundaryPartition west({B::Neumann, B::Neumann, B::Neumann, B::Dirichlet},
                               {B::Neumann, B::Neumann, B::Neumann, B::Dirichlet});
  const BoundaryPartition west_south({B::Dirichlet, B::Neumann, B::Neumann, B::Dirichlet},
                                     {B::Dirichlet, B::Neumann, B::Neumann, B::Dirichlet});
  const double l1 = largest_finite_eigenvalue(assemble_trace_pencil(make(ProblemKind::Poisson, 6, 2, west), 0));
  const double l2 = largest_finite_eigenvalue(assemble_trace_pencil(make(ProblemKind::Poisson, 6, 2, west_south), 0));
  const double l4 = largest_finite_eigenvalue(assemble_trace_pencil(make(ProblemKind::Poisson, 6, 2), 0));
  CHECK(l2 >= l1 * (1 - 1e-10));
  CHECK(l4 >= l2 * (1 - 1e-10));
}

TEST_CASE("penalty from trace constants") {
  const NitscheConstants c = NitscheConstants::from_trace({1.5}, {2.0});
  CHECK(c.penalty[0] == doctest::Approx(6.0));
  CHECK(c.coercive());
  CHECK_THROWS_AS(NitscheConstants::from_trace({1.5}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(constants_for(make(ProblemKind::Poisson, 2, 2), {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(constants_for(make(ProblemKind::Poisson, 2, 2), {2.0, 2.0}), std::invalid_argument);
  CHECK_FALSE(NitscheConstants::from_values({2.0}, {1.0}).coercive());
}

TEST_CASE("constant multipliers and degenerate operators") {
  const Discretization b = make(ProblemKind::Biharmonic, 3, 3);
  const auto est = estimate_trace(b);
  REQUIRE(est.size() == 2);
  CHECK(est[0].c_tr == doctest::Approx(2 * est[0].lambda_max));
  CHECK(trace_constant(ProblemKind::KirchhoffPlate, 0.0) == kTraceFloor);
  CHECK(trace_constant(ProblemKind::Biharmonic, 0.25) == 0.5);
  const auto quad = estimate_trace(make(ProblemKind::Biharmonic, 3, 2));
  CHECK(quad[0].lambda_max > 0.0);
  const auto plate = estimate_trace(make(ProblemKind::KirchhoffPlate, 3, 3));
  REQUIRE(plate.size() == 3);
  CHECK(plate[1].op == "corner");
  CHECK(plate[2].c_tr == doctest::Approx(3 * plate[2].lambda_max));
}

TEST_CASE("Poisson p=1 constant is mesh independent") {
  const double c16 = estimate_trace(make(ProblemKind::Poisson, 16, 1))[0].c_tr;
  const double c32 = estimate_trace(make(ProblemKind::Poisson, 32, 1))[0].c_tr;
  CHECK(std::abs(c32 - c16) / c16 < 0.15);
}

TEST_CASE("post-hoc trace inequality on random fields") {
  std::mt19937_64 rng(77);
  for (ProblemKind kind : {ProblemKind::Poisson, ProblemKind::Biharmonic, ProblemKind::KirchhoffPlate}) {
    const Discretization d = make(kind, 5, 3);
    const auto pencils = assemble_trace_pencils(d);
    const NitscheConstants c = constants_for(d, std::vector<double>(pencils.size(), 2.0));
    for (int s = 0; s < 100; ++s) {
      const Eigen::VectorXd v = testutil::random_vector(d.space.scalar_dim(), rng);
      double lhs = 0.0;
      for (const auto& p : pencils) lhs += v.dot(p.boundary * v) / c.trace[p.slot];
      CHECK(lhs <= v.dot(pencils[0].interior * v) * (1 + 1e-8));
    }
  }
}

TEST_CASE("weighted single-constant mode") {
  const Discretization d = make(ProblemKind::Biharmonic, 4, 3);
  const NitscheConstants c = constants_weighted(d, {1.0, 0.5}, 2.0);
  CHECK(c.trace[1] == doctest::Approx(0.5 * c.trace[0]));
  const auto pencils = assemble_trace_pencils(d);
  std::mt19937_64 rng(8);
  for (int s = 0; s < 50; ++s) {
    const Eigen::VectorXd v = testutil::random_vector(d.space.scalar_dim(), rng);
    const double lhs = v.dot(pencils[0].boundary * v) / c.trace[0] + v.dot(pencils[1].boundary * v) / c.trace[1];
    CHECK(lhs <= v.dot(pencils[0].interior * v) * (1 + 1e-8));
  }
  CHECK_THROWS_AS(constants_weighted(d, {1.0, 0.0}, 2.0), std::invalid_argument);
}

TEST_CASE("pencil size guard") {
  CHECK_THROWS_AS(assemble_trace_pencil(make(ProblemKind::Poisson, 71, 1), 0), std::invalid_argument);
}
