#pragma once

#include <string>
#include <vector>

namespace nitsche {

enum class ProblemKind { Poisson, Biharmonic, KirchhoffPlate };

const char* to_string(ProblemKind kind);

/// Number of Nitsche constants for a problem kind.
///
/// Poisson: one (value trace). Biharmonic: two (set 1, set 2).
/// Plate: three, in the order T_z edges, corners, B_nn edges.
int num_constant_slots(ProblemKind kind);
/// Slot used by the edges of condition set 1 or 2.
int edge_slot(ProblemKind kind, int set);
inline constexpr int kCornerSlot = 1;
/// Short operator name of a slot, used in reports.
std::string slot_name(ProblemKind kind, int slot);

/// Trace constants C_tr and penalties C_pen per slot.
struct NitscheConstants {
  std::vector<double> trace;
  std::vector<double> gamma;
  std::vector<double> penalty;

  /// C_pen = gamma^2 C_tr; each gamma must lie in (1, inf).
  static NitscheConstants from_trace(std::vector<double> c_tr, std::vector<double> gamma);
  /// User-supplied values; no coercivity guarantee.
  static NitscheConstants from_values(std::vector<double> c_tr, std::vector<double> c_pen);

  std::size_t size() const { return trace.size(); }
  /// True when C_pen > C_tr in every slot.
  bool coercive() const;
};

}  // namespace nitsche
