#include "nitsche/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nitsche {

RectDomain::RectDomain(double lx, double ly) : length_x(lx), length_y(ly) {
  if (!(lx > 0.0) || !(ly > 0.0)) {
    throw std::invalid_argument("RectDomain: side lengths must be positive");
  }
}

const char* to_string(Side side) {
  switch (side) {
    case Side::South: return "south";
    case Side::East: return "east";
    case Side::North: return "north";
    case Side::West: return "west";
  }
  return "?";
}

Vec2 outward_normal(Side side) {
  switch (side) {
    case Side::South: return {0.0, -1.0};
    case Side::East: return {1.0, 0.0};
    case Side::North: return {0.0, 1.0};
    case Side::West: return {-1.0, 0.0};
  }
  return {0.0, 0.0};
}

Vec2 ccw_tangent(Side side) {
  switch (side) {
    case Side::South: return {1.0, 0.0};
    case Side::East: return {0.0, 1.0};
    case Side::North: return {-1.0, 0.0};
    case Side::West: return {0.0, -1.0};
  }
  return {0.0, 0.0};
}

double Cell::diameter() const { return std::hypot(x1 - x0, y1 - y0); }

CartesianMesh::CartesianMesh(RectDomain domain, int nx, int ny) : domain_(domain), nx_(nx), ny_(ny) {
  if (nx < 1 || ny < 1) {
    throw std::invalid_argument("CartesianMesh: nx and ny must be >= 1 (got " + std::to_string(nx) +
                                ", " + std::to_string(ny) + ")");
  }
  if (!(domain.length_x > 0.0) || !(domain.length_y > 0.0)) {
    throw std::invalid_argument("CartesianMesh: invalid domain");
  }
}

double CartesianMesh::element_size(int ix, int iy) const { return cell(ix, iy).diameter(); }

double CartesianMesh::h() const { return std::hypot(hx(), hy()); }

Cell CartesianMesh::cell(int ix, int iy) const {
  if (ix < 0 || ix >= nx_ || iy < 0 || iy >= ny_) {
    throw std::out_of_range("CartesianMesh::cell: index out of range");
  }
  Cell c;
  c.ix = ix;
  c.iy = iy;
  // Endpoints computed from the index so that neighbouring cells share them exactly.
  c.x0 = domain_.length_x * ix / nx_;
  c.x1 = (ix + 1 == nx_) ? domain_.length_x : domain_.length_x * (ix + 1) / nx_;
  c.y0 = domain_.length_y * iy / ny_;
  c.y1 = (iy + 1 == ny_) ? domain_.length_y : domain_.length_y * (iy + 1) / ny_;
  return c;
}

CartesianMesh build_mesh(const RectDomain& domain, int nx, int ny) { return CartesianMesh(domain, nx, ny); }

namespace {

int side_index(Side s) { return static_cast<int>(s); }

void check_set(int set) {
  if (set != 1 && set != 2) {
    throw std::invalid_argument("condition set index must be 1 or 2");
  }
}

}  // namespace

BoundaryPartition::BoundaryPartition() {
  labels_[0].fill(BcType::Dirichlet);
  labels_[1].fill(BcType::Dirichlet);
}

BoundaryPartition::BoundaryPartition(SetLabels set1, SetLabels set2) : labels_{set1, set2} {
  if (!has_dirichlet(1)) {
    throw std::invalid_argument("BoundaryPartition: condition set 1 needs at least one Dirichlet side");
  }
}

BoundaryPartition BoundaryPartition::all_dirichlet() { return BoundaryPartition(); }

BcType BoundaryPartition::label(int set, Side side) const {
  check_set(set);
  return labels_[set - 1][side_index(side)];
}

bool BoundaryPartition::has_dirichlet(int set) const {
  check_set(set);
  for (auto l : labels_[set - 1]) {
    if (l == BcType::Dirichlet) return true;
  }
  return false;
}

EdgeMesh boundary_edge_mesh(const CartesianMesh& mesh) {
  EdgeMesh out;
  out.edges.reserve(2 * (mesh.nx() + mesh.ny()));
  const double lx = mesh.domain().length_x;
  const double ly = mesh.domain().length_y;

  auto push = [&](int ix, int iy, Side side, Vec2 a, Vec2 b) {
    BoundaryEdge e;
    e.ix = ix;
    e.iy = iy;
    e.side = side;
    e.start = a;
    e.end = b;
    e.normal = outward_normal(side);
    e.tangent = ccw_tangent(side);
    e.h = mesh.element_size(ix, iy);
    out.edges.push_back(e);
  };

  for (int ix = 0; ix < mesh.nx(); ++ix) {
    const Cell c = mesh.cell(ix, 0);
    push(ix, 0, Side::South, {c.x0, 0.0}, {c.x1, 0.0});
  }
  for (int iy = 0; iy < mesh.ny(); ++iy) {
    const Cell c = mesh.cell(mesh.nx() - 1, iy);
    push(mesh.nx() - 1, iy, Side::East, {lx, c.y0}, {lx, c.y1});
  }
  for (int ix = mesh.nx() - 1; ix >= 0; --ix) {
    const Cell c = mesh.cell(ix, mesh.ny() - 1);
    push(ix, mesh.ny() - 1, Side::North, {c.x1, ly}, {c.x0, ly});
  }
  for (int iy = mesh.ny() - 1; iy >= 0; --iy) {
    const Cell c = mesh.cell(0, iy);
    push(0, iy, Side::West, {0.0, c.y1}, {0.0, c.y0});
  }
  return out;
}

namespace {

EdgeMesh filter_edges(const CartesianMesh& mesh, const BoundaryPartition& partition, int set, BcType want) {
  EdgeMesh all = boundary_edge_mesh(mesh);
  EdgeMesh out;
  for (const auto& e : all) {
    if (partition.label(set, e.side) == want) out.edges.push_back(e);
  }
  return out;
}

}  // namespace

EdgeMesh dirichlet_edge_mesh(const CartesianMesh& mesh, const BoundaryPartition& partition, int set) {
  return filter_edges(mesh, partition, set, BcType::Dirichlet);
}

EdgeMesh neumann_edge_mesh(const CartesianMesh& mesh, const BoundaryPartition& partition, int set) {
  return filter_edges(mesh, partition, set, BcType::Neumann);
}

std::vector<Corner> CornerSet::of_class(CornerClass cls) const {
  std::vector<Corner> out;
  for (const auto& c : corners) {
    if (c.cls == cls) out.push_back(c);
  }
  return out;
}

CornerSet classify_corners(const CartesianMesh& mesh, const BoundaryPartition& partition) {
  const double lx = mesh.domain().length_x;
  const double ly = mesh.domain().length_y;
  const int ex = mesh.nx() - 1;
  const int ey = mesh.ny() - 1;

  auto make = [&](Vec2 p, Side in, Side out, int ix, int iy) {
    Corner c;
    c.point = p;
    c.incoming = in;
    c.outgoing = out;
    c.ix = ix;
    c.iy = iy;
    c.h = mesh.element_size(ix, iy);
    // The closure of the set-1 Dirichlet boundary contains the endpoints of each Dirichlet side.
    const bool touches_dirichlet = partition.is_dirichlet(1, in) || partition.is_dirichlet(1, out);
    c.cls = touches_dirichlet ? CornerClass::Dirichlet : CornerClass::Neumann;
    return c;
  };

  CornerSet set;
  set.corners[0] = make({0.0, 0.0}, Side::West, Side::South, 0, 0);
  set.corners[1] = make({lx, 0.0}, Side::South, Side::East, ex, 0);
  set.corners[2] = make({lx, ly}, Side::East, Side::North, ex, ey);
  set.corners[3] = make({0.0, ly}, Side::North, Side::West, 0, ey);
  return set;
}

}  // namespace nitsche
