#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "nitsche/study.hpp"

namespace nitsche {

/// "%.15e", or "nan" / "inf".
std::string format_number(double x);

/// One row per mesh; C_tr_k and C_pen_k columns per constant slot.
void write_study_csv(std::ostream& out, const ConvergenceReport& report);

struct TraceRow {
  int nx = 0;
  int ny = 0;
  double h = 0.0;
  int slot = 0;
  std::string op;
  double lambda_max = 0.0;
  double c_tr = 0.0;
  double gamma = 0.0;
  double c_pen = 0.0;
  double rayleigh_sample_max = 0.0;
};

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows);

/// Trace estimates for every mesh of the config: one row per (mesh, slot).
/// Random Rayleigh-quotient samples (diagnostic only) use the seed.
std::vector<TraceRow> trace_table(const StudyConfig& config, unsigned seed, int samples = 200);

}  // namespace nitsche
