#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nitsche/assembly.hpp"
#include "nitsche/manufactured.hpp"
#include "nitsche/traceconst.hpp"

namespace nitsche {

enum class ConstantsMode { EstimateCoarsest, EstimateEach, Explicit };

const char* to_string(ConstantsMode mode);

struct StudyConfig {
  ProblemKind kind = ProblemKind::Poisson;
  int components = 1;
  int degree = 2;
  RectDomain domain;
  std::vector<std::pair<int, int>> meshes;
  BoundaryPartition partition;
  std::vector<double> gamma;  // per constant slot
  std::vector<EnforcementVariant> variants{EnforcementVariant::NitscheSymmetric};
  SolutionChoice solution;
  MaterialParams material;
  ConstantsMode constants_mode = ConstantsMode::EstimateCoarsest;
  std::vector<double> explicit_trace;    // ConstantsMode::Explicit
  std::vector<double> explicit_penalty;  // ConstantsMode::Explicit

  /// Cross-field checks except the mesh count; throws invalid_argument.
  void validate() const;
};

struct StudyRow {
  int nx = 0;
  int ny = 0;
  double h = 0.0;
  int dofs = 0;
  NitscheConstants constants;
  ErrorReport error;
  double best_energy = 0.0;
  double l2_rate = 0.0;  // NaN on the first row
  double h1_rate = 0.0;
  double energy_rate = 0.0;
  double quasi_opt_ratio = 0.0;
  std::string status = "ok";  // ok | indefinite | error
  std::string message;
};

struct ConvergenceReport {
  EnforcementVariant variant = EnforcementVariant::NitscheSymmetric;
  ConstantsMode mode = ConstantsMode::EstimateCoarsest;
  ProblemKind kind = ProblemKind::Poisson;
  std::vector<StudyRow> rows;

  bool all_ok() const;
};

/// rate_i = log(e_{i-1} / e_i) / log(h_{i-1} / h_i); NaN when undefined.
double observed_rate(double e_prev, double e, double h_prev, double h);
void compute_rates(ConvergenceReport& report);

/// Runs every variant over every mesh. Rows run concurrently on up to `threads`
/// workers; failed rows are marked and do not abort the study.
std::vector<ConvergenceReport> run_convergence(const StudyConfig& config, int threads = 1);

/// One discretization of the study on mesh (nx, ny).
Discretization study_discretization(const StudyConfig& config, int nx, int ny);

}  // namespace nitsche
