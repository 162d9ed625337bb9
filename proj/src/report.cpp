#include "nitsche/report.hpp"

#include <cmath>
#include <cstdio>

namespace nitsche {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", x);
  return buf;
}

void write_study_csv(std::ostream& out, const ConvergenceReport& report) {
  const int slots = num_constant_slots(report.kind);
  out << "h,nx,ny,dofs";
  for (int s = 0; s < slots; ++s) out << ",C_tr_" << slot_name(report.kind, s);
  for (int s = 0; s < slots; ++s) out << ",C_pen_" << slot_name(report.kind, s);
  out << ",l2_error,h1_semi_error,energy_error,l2_rate,h1_rate,energy_rate,quasi_opt_ratio,solve_status\n";
  const double nan = std::nan("");
  for (const StudyRow& r : report.rows) {
    const bool ok = r.status == "ok";
    out << format_number(r.h) << ',' << r.nx << ',' << r.ny << ',' << r.dofs;
    for (int s = 0; s < slots; ++s) {
      out << ',' << format_number(static_cast<int>(r.constants.size()) > s ? r.constants.trace[s] : nan);
    }
    for (int s = 0; s < slots; ++s) {
      out << ',' << format_number(static_cast<int>(r.constants.size()) > s ? r.constants.penalty[s] : nan);
    }
    out << ',' << format_number(ok ? r.error.l2 : nan) << ',' << format_number(ok ? r.error.h1_semi : nan) << ','
        << format_number(ok ? r.error.energy : nan) << ',' << format_number(r.l2_rate) << ','
        << format_number(r.h1_rate) << ',' << format_number(r.energy_rate) << ','
        << format_number(ok ? r.quasi_opt_ratio : nan) << ',' << r.status << '\n';
  }
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows) {
  out << "h,nx,ny,slot,operator,lambda_max,C_tr,gamma,C_pen,rayleigh_sample_max\n";
  for (const TraceRow& r : rows) {
    out << format_number(r.h) << ',' << r.nx << ',' << r.ny << ',' << r.slot << ',' << r.op << ','
        << format_number(r.lambda_max) << ',' << format_number(r.c_tr) << ',' << format_number(r.gamma) << ','
        << format_number(r.c_pen) << ',' << format_number(r.rayleigh_sample_max) << '\n';
  }
}

std::vector<TraceRow> trace_table(const StudyConfig& config, unsigned seed, int samples) {
  config.validate();
  std::vector<TraceRow> rows;
  for (const auto& [nx, ny] : config.meshes) {
    const Discretization disc = study_discretization(config, nx, ny);
    for (const TracePencil& p : assemble_trace_pencils(disc)) {
      TraceRow r;
      r.nx = nx;
      r.ny = ny;
      r.h = disc.mesh.h();
      r.slot = p.slot;
      r.op = p.meaning;
      r.lambda_max = largest_finite_eigenvalue(p);
      r.c_tr = trace_multiplier(disc.kind) * r.lambda_max;
      if (r.c_tr <= 1e-12) r.c_tr = kTraceFloor;
      r.gamma = config.gamma.at(p.slot);
      r.c_pen = r.gamma * r.gamma * r.c_tr;
      r.rayleigh_sample_max = sampled_rayleigh_max(p, samples, seed + static_cast<unsigned>(p.slot));
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace nitsche
