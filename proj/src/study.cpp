#include "nitsche/study.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

namespace nitsche {

const char* to_string(ConstantsMode mode) {
  switch (mode) {
    case ConstantsMode::EstimateCoarsest: return "estimate-coarsest";
    case ConstantsMode::EstimateEach: return "estimate-each";
    case ConstantsMode::Explicit: return "explicit";
  }
  return "?";
}

void StudyConfig::validate() const {
  const int slots = num_constant_slots(kind);
  if (components < 1) throw std::invalid_argument("components must be >= 1");
  if (kind == ProblemKind::KirchhoffPlate && components != 1) {
    throw std::invalid_argument("the plate has exactly one component");
  }
  if (degree < minimum_degree(kind)) {
    throw std::invalid_argument(std::string(to_string(kind)) + " needs degree >= " +
                                std::to_string(minimum_degree(kind)));
  }
  if (meshes.empty()) throw std::invalid_argument("at least one mesh is required");
  for (std::size_t i = 0; i < meshes.size(); ++i) {
    if (meshes[i].first < 1 || meshes[i].second < 1) throw std::invalid_argument("mesh sizes must be >= 1");
    if (i > 0) {
      const CartesianMesh prev(domain, meshes[i - 1].first, meshes[i - 1].second);
      const CartesianMesh cur(domain, meshes[i].first, meshes[i].second);
      if (!(cur.h() < prev.h())) throw std::invalid_argument("mesh sequence must have strictly decreasing h");
    }
  }
  if (!partition.has_dirichlet(1)) throw std::invalid_argument("condition set 1 needs a Dirichlet side");
  if (variants.empty()) throw std::invalid_argument("at least one enforcement variant is required");
  if (kind == ProblemKind::KirchhoffPlate) material.validate();
  if (constants_mode == ConstantsMode::Explicit) {
    if (static_cast<int>(explicit_trace.size()) != slots || static_cast<int>(explicit_penalty.size()) != slots) {
      throw std::invalid_argument("explicit constants need " + std::to_string(slots) + " C_tr and C_pen values");
    }
    NitscheConstants::from_values(explicit_trace, explicit_penalty);
  } else {
    if (static_cast<int>(gamma.size()) != slots) {
      throw std::invalid_argument("gamma needs " + std::to_string(slots) + " values for " + to_string(kind));
    }
    for (double g : gamma) {
      if (!(g > 1.0)) {
        throw std::invalid_argument("gamma must lie in the open interval (1, inf); got " + std::to_string(g));
      }
    }
  }
}

bool ConvergenceReport::all_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const StudyRow& r) { return r.status == "ok"; });
}

double observed_rate(double e_prev, double e, double h_prev, double h) {
  if (!(e_prev > 0.0) || !(e > 0.0) || !(h_prev > 0.0) || !(h > 0.0) || h_prev == h) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return std::log(e_prev / e) / std::log(h_prev / h);
}

void compute_rates(ConvergenceReport& report) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    StudyRow& r = report.rows[i];
    r.l2_rate = r.h1_rate = r.energy_rate = nan;
    if (i == 0 || r.status != "ok" || report.rows[i - 1].status != "ok") continue;
    const StudyRow& p = report.rows[i - 1];
    r.l2_rate = observed_rate(p.error.l2, r.error.l2, p.h, r.h);
    r.h1_rate = observed_rate(p.error.h1_semi, r.error.h1_semi, p.h, r.h);
    r.energy_rate = observed_rate(p.error.energy, r.error.energy, p.h, r.h);
  }
}

Discretization study_discretization(const StudyConfig& config, int nx, int ny) {
  return Discretization::create(config.kind, config.material, CartesianMesh(config.domain, nx, ny), config.degree,
                                config.components, config.partition);
}

namespace {

template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct MeshConstants {
  std::optional<NitscheConstants> constants;
  std::string error;
};

StudyRow run_row(const StudyConfig& config, const ManufacturedSolution& exact, int nx, int ny,
                 EnforcementVariant variant, const MeshConstants& mc) {
  StudyRow row;
  row.nx = nx;
  row.ny = ny;
  try {
    const Discretization disc = study_discretization(config, nx, ny);
    row.h = disc.mesh.h();
    row.dofs = disc.space.dim();
    if (!mc.constants) {
      row.status = "error";
      row.message = mc.error;
      return row;
    }
    row.constants = *mc.constants;
    const AssembledSystem sys = assemble(disc, exact.data, row.constants, variant);
    Eigen::VectorXd x;
    try {
      x = solve(sys);
    } catch (const NotPositiveDefiniteError& e) {
      row.status = "indefinite";
      row.message = e.what();
      return row;
    }
    row.error = error_norms(disc, x, exact, row.constants);
    const Eigen::VectorXd best = best_approximation(disc, exact, row.constants);
    row.best_energy = error_norms(disc, best, exact, row.constants).energy;
    row.quasi_opt_ratio = row.best_energy > 0.0 ? row.error.energy / row.best_energy
                                                : std::numeric_limits<double>::quiet_NaN();
  } catch (const std::exception& e) {
    row.status = "error";
    row.message = e.what();
  }
  return row;
}

}  // namespace

std::vector<ConvergenceReport> run_convergence(const StudyConfig& config, int threads) {
  config.validate();
  if (config.meshes.size() < 3) throw std::invalid_argument("a convergence study needs at least 3 meshes");
  const ManufacturedSolution exact = manufactured(config.kind, config.material, config.components, config.solution);
  const std::size_t nm = config.meshes.size();

  std::vector<MeshConstants> per_mesh(nm);
  auto estimate = [&](std::size_t i) {
    try {
      const auto [nx, ny] = config.meshes[i];
      per_mesh[i].constants = constants_for(study_discretization(config, nx, ny), config.gamma);
    } catch (const std::exception& e) {
      per_mesh[i].error = e.what();
    }
  };
  switch (config.constants_mode) {
    case ConstantsMode::Explicit:
      for (auto& m : per_mesh) m.constants = NitscheConstants::from_values(config.explicit_trace, config.explicit_penalty);
      break;
    case ConstantsMode::EstimateCoarsest:
      estimate(0);
      for (std::size_t i = 1; i < nm; ++i) per_mesh[i] = per_mesh[0];
      break;
    case ConstantsMode::EstimateEach:
      parallel_for(nm, threads, estimate);
      break;
  }

  std::vector<ConvergenceReport> reports(config.variants.size());
  for (std::size_t v = 0; v < reports.size(); ++v) {
    reports[v].variant = config.variants[v];
    reports[v].mode = config.constants_mode;
    reports[v].kind = config.kind;
    reports[v].rows.resize(nm);
  }
  parallel_for(reports.size() * nm, threads, [&](std::size_t task) {
    const std::size_t v = task / nm, i = task % nm;
    const auto [nx, ny] = config.meshes[i];
    reports[v].rows[i] = run_row(config, exact, nx, ny, config.variants[v], per_mesh[i]);
  });
  for (auto& r : reports) compute_rates(r);
  return reports;
}

}  // namespace nitsche
