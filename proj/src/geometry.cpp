#include "frackansa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <stdexcept>

namespace frackansa {

Domain Domain::rectangle(double xmin, double xmax, double ymin, double ymax) {
  if (!(xmin < xmax) || !(ymin < ymax))
    throw std::invalid_argument("Domain::rectangle: empty extent");
  Domain d;
  d.kind = Kind::rectangle;
  d.xmin = xmin;
  d.xmax = xmax;
  d.ymin = ymin;
  d.ymax = ymax;
  return d;
}

Domain Domain::disk(Point center, double radius) {
  if (!(radius > 0)) throw std::invalid_argument("Domain::disk: radius <= 0");
  Domain d;
  d.kind = Kind::disk;
  d.center = center;
  d.radius = radius;
  return d;
}

bool Domain::contains(Point p, double tol) const {
  return boundary_distance(p) >= -tol;
}

double Domain::boundary_distance(Point p) const {
  if (kind == Kind::rectangle) {
    return std::min(std::min(p.x - xmin, xmax - p.x),
                    std::min(p.y - ymin, ymax - p.y));
  }
  return radius - std::hypot(p.x - center.x, p.y - center.y);
}

double Domain::area() const {
  if (kind == Kind::rectangle) return (xmax - xmin) * (ymax - ymin);
  return M_PI * radius * radius;
}

double Domain::perimeter() const {
  if (kind == Kind::rectangle) return 2.0 * ((xmax - xmin) + (ymax - ymin));
  return 2.0 * M_PI * radius;
}

double ray_exit_distance(const Domain& dom, Point p, double theta) {
  double ux = -std::cos(theta), uy = -std::sin(theta);
  double s;
  if (dom.kind == Domain::Kind::rectangle) {
    auto slab = [](double pos, double lo, double hi, double u) {
      if (u > 0) return (hi - pos) / u;
      if (u < 0) return (lo - pos) / u;
      return std::numeric_limits<double>::infinity();
    };
    s = std::min(slab(p.x, dom.xmin, dom.xmax, ux),
                 slab(p.y, dom.ymin, dom.ymax, uy));
  } else {
    double qx = p.x - dom.center.x, qy = p.y - dom.center.y;
    double qu = qx * ux + qy * uy;
    double c0 = qx * qx + qy * qy - dom.radius * dom.radius;
    double disc = qu * qu - c0;
    if (disc < 0) disc = 0;  // p on the boundary up to roundoff
    s = -qu + std::sqrt(disc);
  }
  return std::max(s, 0.0);
}

namespace {

// uniform in [0,1) straight from the generator; the stdlib distribution
// wrapper is not pinned across implementations and reruns must be byte-equal
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Point perimeter_point(const Domain& dom, double s) {
  if (dom.kind == Domain::Kind::disk) {
    double phi = s / dom.radius;
    return {dom.center.x + dom.radius * std::cos(phi),
            dom.center.y + dom.radius * std::sin(phi)};
  }
  double lx = dom.xmax - dom.xmin, ly = dom.ymax - dom.ymin;
  s = std::fmod(s, 2.0 * (lx + ly));
  if (s < lx) return {dom.xmin + s, dom.ymin};
  s -= lx;
  if (s < ly) return {dom.xmax, dom.ymin + s};
  s -= ly;
  if (s < lx) return {dom.xmax - s, dom.ymax};
  s -= lx;
  return {dom.xmin, dom.ymax - s};
}

std::vector<Point> equispaced_boundary(const Domain& dom, std::size_t n) {
  std::vector<Point> pts;
  pts.reserve(n);
  double per = dom.perimeter();
  for (std::size_t k = 0; k < n; ++k)
    pts.push_back(perimeter_point(dom, per * static_cast<double>(k) / n));
  return pts;
}

bool clears(const std::vector<Point>& pts, Point p, double min_sep) {
  for (const Point& q : pts)
    if (std::hypot(p.x - q.x, p.y - q.y) < min_sep) return false;
  return true;
}

Point sample_interior(const Domain& dom, std::mt19937_64& rng) {
  if (dom.kind == Domain::Kind::rectangle) {
    return {dom.xmin + (dom.xmax - dom.xmin) * uniform01(rng),
            dom.ymin + (dom.ymax - dom.ymin) * uniform01(rng)};
  }
  double r = dom.radius * std::sqrt(uniform01(rng));
  double phi = 2.0 * M_PI * uniform01(rng);
  return {dom.center.x + r * std::cos(phi), dom.center.y + r * std::sin(phi)};
}

constexpr double kMinSep = 1e-10;

void fill_random_interior(const Domain& dom, std::size_t m, NodeSet& out,
                          std::mt19937_64& rng) {
  std::size_t attempts = 0, budget = 100 * std::max<std::size_t>(m, 1);
  while (out.interior.size() < m) {
    if (++attempts > budget)
      throw std::runtime_error(
          "generate_nodes: could not place the requested interior count");
    Point p = sample_interior(dom, rng);
    if (dom.boundary_distance(p) <= 1e-9) continue;
    if (!clears(out.interior, p, kMinSep) || !clears(out.boundary, p, kMinSep))
      continue;
    out.interior.push_back(p);
  }
}

// split a total target into interior/boundary so the boundary spacing matches
// the equivalent regular spacing sqrt(area / M)
std::size_t boundary_count_for(const Domain& dom, std::size_t total) {
  std::size_t n = 0;
  for (int it = 0; it < 32; ++it) {
    std::size_t m = total > n ? total - n : 1;
    double h = std::sqrt(dom.area() / static_cast<double>(m));
    std::size_t next = std::max<std::size_t>(
        4, static_cast<std::size_t>(std::lround(dom.perimeter() / h)));
    next = std::min(next, total - 1);
    if (next == n) break;
    n = next;
  }
  return n;
}

NodeSet lattice_nodes(const Domain& dom, const NodeParams& params,
                      bool jiggle) {
  if (dom.kind != Domain::Kind::rectangle)
    throw std::invalid_argument("generate_nodes: lattice modes need a rectangle");
  if (!(params.spacing > 0))
    throw std::invalid_argument("generate_nodes: spacing must be positive");
  NodeSet out;
  out.spacing = params.spacing;
  out.seed = params.seed;
  std::mt19937_64 rng(params.seed);
  double dx = params.spacing;
  auto steps = [&](double lo, double hi) {
    return static_cast<long>(std::lround((hi - lo) / dx));
  };
  long nx = steps(dom.xmin, dom.xmax), ny = steps(dom.ymin, dom.ymax);
  if (nx < 1 || ny < 1)
    throw std::invalid_argument("generate_nodes: spacing exceeds the extent");
  for (long j = 0; j <= ny; ++j) {
    for (long i = 0; i <= nx; ++i) {
      Point p{dom.xmin + i * dx, dom.ymin + j * dx};
      bool edge = (i == 0 || i == nx || j == 0 || j == ny);
      if (edge) {
        out.boundary.push_back(p);
      } else {
        if (jiggle) {
          p.x += dx * 0.25 * (2.0 * uniform01(rng) - 1.0);
          p.y += dx * 0.25 * (2.0 * uniform01(rng) - 1.0);
        }
        out.interior.push_back(p);
      }
    }
  }
  return out;
}

NodeSet ring_nodes(const Domain& dom, const NodeParams& params) {
  if (dom.kind != Domain::Kind::disk)
    throw std::invalid_argument("generate_nodes: disk_rings needs a disk");
  if (!(params.ring_dr > 0) || params.ring_dr > dom.radius)
    throw std::invalid_argument("generate_nodes: bad ring increment");
  if (params.count < 8)
    throw std::invalid_argument("generate_nodes: ring mode needs count >= 8");
  long rings = std::lround(dom.radius / params.ring_dr);
  if (rings < 1) rings = 1;

  // one node at the center, then counts proportional to ring radius; the
  // rounding residual lands on the outermost (= boundary) ring
  std::size_t budget = params.count - 1;
  double wsum = 0.5 * rings * (rings + 1);
  std::vector<std::size_t> per_ring(rings);
  std::size_t used = 0;
  for (long m = 1; m <= rings; ++m) {
    per_ring[m - 1] = static_cast<std::size_t>(
        std::floor(static_cast<double>(budget) * m / wsum));
    used += per_ring[m - 1];
  }
  per_ring[rings - 1] += budget - used;

  NodeSet out;
  out.spacing = params.ring_dr;
  out.seed = params.seed;
  std::mt19937_64 rng(params.seed);
  out.interior.push_back(dom.center);
  for (long m = 1; m <= rings; ++m) {
    double r = (m == rings) ? dom.radius : m * params.ring_dr;
    std::size_t cnt = per_ring[m - 1];
    double offset = (m == rings) ? 0.0 : 2.0 * M_PI * uniform01(rng);
    for (std::size_t k = 0; k < cnt; ++k) {
      double phi = offset + 2.0 * M_PI * static_cast<double>(k) / cnt;
      Point p{dom.center.x + r * std::cos(phi),
              dom.center.y + r * std::sin(phi)};
      if (m == rings)
        out.boundary.push_back(p);
      else
        out.interior.push_back(p);
    }
  }
  return out;
}

}  // namespace

NodeSet generate_nodes(const Domain& dom, NodeMode mode,
                       const NodeParams& params) {
  switch (mode) {
    case NodeMode::regular: {
      NodeSet out = lattice_nodes(dom, params, false);
      out.mode = mode;
      return out;
    }
    case NodeMode::jiggled: {
      NodeSet out = lattice_nodes(dom, params, true);
      out.mode = mode;
      return out;
    }
    case NodeMode::uniform_random:
    case NodeMode::disk_random: {
      if (mode == NodeMode::disk_random && dom.kind != Domain::Kind::disk)
        throw std::invalid_argument("generate_nodes: disk_random needs a disk");
      if (params.count < 8)
        throw std::invalid_argument(
            "generate_nodes: random modes need count >= 8");
      NodeSet out;
      out.mode = mode;
      out.seed = params.seed;
      std::size_t nb = boundary_count_for(dom, params.count);
      out.boundary = equispaced_boundary(dom, nb);
      out.spacing = dom.perimeter() / static_cast<double>(nb);
      std::mt19937_64 rng(params.seed);
      fill_random_interior(dom, params.count - nb, out, rng);
      return out;
    }
    case NodeMode::disk_rings: {
      NodeSet out = ring_nodes(dom, params);
      out.mode = mode;
      return out;
    }
  }
  throw std::invalid_argument("generate_nodes: unknown mode");
}

void write_nodes_csv(const NodeSet& nodes, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_nodes_csv: cannot open " + path);
  f << "kind,x,y\n";
  f.precision(17);
  for (const Point& p : nodes.interior)
    f << "interior," << p.x << "," << p.y << "\n";
  for (const Point& p : nodes.boundary)
    f << "boundary," << p.x << "," << p.y << "\n";
  if (!f) throw std::runtime_error("write_nodes_csv: write failed: " + path);
}

}  // namespace frackansa
