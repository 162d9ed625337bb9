#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace nitsche {

using Vec2 = Eigen::Vector2d;

/// Axis-aligned rectangle [0, length_x] x [0, length_y].
struct RectDomain {
  double length_x = 1.0;
  double length_y = 1.0;

  RectDomain() = default;
  RectDomain(double lx, double ly);

  double area() const { return length_x * length_y; }
};

enum class Side { South = 0, East = 1, North = 2, West = 3 };

inline constexpr std::array<Side, 4> kAllSides{Side::South, Side::East, Side::North, Side::West};

const char* to_string(Side side);

/// Outward unit normal of a domain side.
Vec2 outward_normal(Side side);
/// Unit tangent for counterclockwise traversal of the boundary.
Vec2 ccw_tangent(Side side);

struct Cell {
  int ix = 0;
  int iy = 0;
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;

  double area() const { return (x1 - x0) * (y1 - y0); }
  double diameter() const;
};

class CartesianMesh {
 public:
  CartesianMesh(RectDomain domain, int nx, int ny);

  const RectDomain& domain() const { return domain_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  std::size_t num_elements() const { return static_cast<std::size_t>(nx_) * ny_; }
  double hx() const { return domain_.length_x / nx_; }
  double hy() const { return domain_.length_y / ny_; }

  /// h_K: the cell diagonal. All cells share it on a uniform mesh.
  double element_size(int ix, int iy) const;
  /// Global mesh size h = max_K h_K.
  double h() const;

  Cell cell(int ix, int iy) const;
  int element_id(int ix, int iy) const { return iy * nx_ + ix; }

 private:
  RectDomain domain_;
  int nx_;
  int ny_;
};

CartesianMesh build_mesh(const RectDomain& domain, int nx, int ny);

enum class BcType { Dirichlet, Neumann };

/// Dirichlet/Neumann label for every (condition set, side) pair.
///
/// Condition sets are numbered 1 and 2 as in the formulation: set 1 carries
/// the value trace, set 2 the normal-derivative trace (fourth-order problems
/// only). Set 1 must have at least one Dirichlet side. Set 2 may be fully
/// Neumann, which is what a simply supported plate needs.
class BoundaryPartition {
 public:
  using SetLabels = std::array<BcType, 4>;

  BoundaryPartition();  // all Dirichlet in both sets
  BoundaryPartition(SetLabels set1, SetLabels set2);

  static BoundaryPartition all_dirichlet();

  BcType label(int set, Side side) const;
  bool is_dirichlet(int set, Side side) const { return label(set, side) == BcType::Dirichlet; }
  bool has_dirichlet(int set) const;

 private:
  std::array<SetLabels, 2> labels_;
};

struct BoundaryEdge {
  int ix = 0;
  int iy = 0;
  Side side = Side::South;
  Vec2 start;  // counterclockwise order
  Vec2 end;
  Vec2 normal;
  Vec2 tangent;
  double h = 0.0;  // h_E = h_K of the owning element

  double length() const { return (end - start).norm(); }
};

struct EdgeMesh {
  std::vector<BoundaryEdge> edges;

  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
  auto begin() const { return edges.begin(); }
  auto end() const { return edges.end(); }
};

/// Every boundary edge of the mesh, in counterclockwise order starting at the
/// south-west corner.
EdgeMesh boundary_edge_mesh(const CartesianMesh& mesh);
EdgeMesh dirichlet_edge_mesh(const CartesianMesh& mesh, const BoundaryPartition& partition, int set);
EdgeMesh neumann_edge_mesh(const CartesianMesh& mesh, const BoundaryPartition& partition, int set);

enum class CornerClass { Dirichlet, Neumann };

struct Corner {
  Vec2 point;
  Side incoming;  // side traversed just before reaching the corner
  Side outgoing;  // side traversed just after leaving it
  CornerClass cls = CornerClass::Dirichlet;
  int ix = 0;  // element containing the corner
  int iy = 0;
  double h = 0.0;  // h_C = h_K
};

struct CornerSet {
  std::array<Corner, 4> corners;  // SW, SE, NE, NW

  std::vector<Corner> of_class(CornerClass cls) const;
};

CornerSet classify_corners(const CartesianMesh& mesh, const BoundaryPartition& partition);

}  // namespace nitsche
