#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace frackansa {

struct Point {
  double x = 0;
  double y = 0;
};

struct Domain {
  enum class Kind { rectangle, disk };
  Kind kind = Kind::rectangle;

  // rectangle extent
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  // disk extent
  Point center{0, 0};
  double radius = 1;

  static Domain rectangle(double xmin, double xmax, double ymin, double ymax);
  static Domain disk(Point center, double radius);

  bool contains(Point p, double tol = 0) const;   // closure membership
  double boundary_distance(Point p) const;        // signed: >0 inside
  double area() const;
  double perimeter() const;
};

enum class NodeMode { regular, jiggled, uniform_random, disk_random, disk_rings };

// Collocation nodes; interior nodes first, then boundary nodes.
struct NodeSet {
  std::vector<Point> interior;
  std::vector<Point> boundary;
  NodeMode mode = NodeMode::regular;
  double spacing = 0;       // lattice spacing, or ring increment for disk_rings
  std::uint64_t seed = 0;

  std::size_t size() const { return interior.size() + boundary.size(); }
  Point node(std::size_t k) const {
    return k < interior.size() ? interior[k] : boundary[k - interior.size()];
  }
};

struct NodeParams {
  double spacing = 0;       // regular / jiggled lattice step
  std::size_t count = 0;    // total node target for random / ring modes
  double ring_dr = 0;       // disk_rings increment
  std::uint64_t seed = 0;
};

// Deterministic given (mode, params, seed). Interior nodes are strictly
// inside, boundary nodes lie on the boundary, pairwise distances >= 1e-10.
NodeSet generate_nodes(const Domain&, NodeMode, const NodeParams&);

// Exit distance of the ray s -> p - s (cos theta, sin theta), s >= 0, from the
// closure of the domain. p must belong to the closure.
double ray_exit_distance(const Domain&, Point p, double theta);

// CSV serialization: header kind,x,y with kind in {interior, boundary}.
void write_nodes_csv(const NodeSet&, const std::string& path);

}  // namespace frackansa
