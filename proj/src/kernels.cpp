#include "frackansa/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "frackansa/special.hpp"

namespace frackansa {

Direction direction_from_angle(double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  // snap cardinal directions so axis-aligned angles reduce bit for bit
  if (std::abs(c) < 1e-15) c = 0.0;
  if (std::abs(s) < 1e-15) s = 0.0;
  if (std::abs(c) > 1.0 - 1e-15) {
    c = std::copysign(1.0, c);
    s = 0.0;
  } else if (std::abs(s) > 1.0 - 1e-15) {
    s = std::copysign(1.0, s);
    c = 0.0;
  }
  return {c, s};
}

double mq(Point p, Point c, double shape) {
  double dx = p.x - c.x, dy = p.y - c.y;
  return std::sqrt(dx * dx + dy * dy + shape * shape);
}

double mq_dx(Point p, Point c, double shape) {
  double dx = p.x - c.x, dy = p.y - c.y;
  return dx / std::sqrt(dx * dx + dy * dy + shape * shape);
}

double mq_dy(Point p, Point c, double shape) {
  double dx = p.x - c.x, dy = p.y - c.y;
  return dy / std::sqrt(dx * dx + dy * dy + shape * shape);
}

double mq_d2(Point p, Point c, double shape, Direction dir) {
  double dx = p.x - c.x, dy = p.y - c.y;
  double a0 = dx * dir.c + dy * dir.s;
  double perp2 = std::max(dx * dx + dy * dy - a0 * a0, 0.0);
  double t = a0 * a0 + perp2 + shape * shape;
  return (perp2 + shape * shape) / (t * std::sqrt(t));
}

namespace {

// exit distance along the ray p - s (dir.c, dir.s) using the snapped
// direction, so cardinal angles give exactly the axis distances
double exit_distance(const Domain& dom, Point p, Direction dir) {
  double ux = -dir.c, uy = -dir.s;
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
    double disc = qu * qu - (qx * qx + qy * qy - dom.radius * dom.radius);
    s = -qu + std::sqrt(std::max(disc, 0.0));
  }
  return std::max(s, 0.0);
}

double entry_core(const RbfBasis& basis, const Domain& frac_domain,
                  const QuadratureRule& rule, Point p_i, std::size_t j,
                  double beta, Direction dir) {
  if (!(beta > 1.0) || !(beta <= 2.0))
    throw std::invalid_argument("fractional entry: order must be in (1, 2]");
  const Point c = basis.centers.at(j);
  if (beta == 2.0) return mq_d2(p_i, c, basis.shape_c, dir);
  if (std::abs(rule.a - (1.0 - beta)) > 1e-12 || rule.b != 0.0)
    throw std::invalid_argument("fractional entry: rule does not match beta");

  double d = exit_distance(frac_domain, p_i, dir);
  if (d <= 0.0) return 0.0;

  double dx = p_i.x - c.x, dy = p_i.y - c.y;
  double a0 = dx * dir.c + dy * dir.s;
  double perp2 = std::max(dx * dx + dy * dy - a0 * a0, 0.0);
  double num = perp2 + basis.shape_c * basis.shape_c;
  double sum = 0;
  for (int k = 0; k < rule.n; ++k) {
    double zeta = d * (1.0 - rule.nodes[k]) * 0.5;
    double A = a0 - zeta;
    double t = A * A + num;
    sum += rule.weights[k] * num / (t * std::sqrt(t));
  }
  return std::pow(d * 0.5, 2.0 - beta) / gamma_fn(2.0 - beta) * sum;
}

}  // namespace

double frac_axis_entry(const RbfBasis& basis, const Domain& frac_domain,
                       const QuadratureRule& rule, Point p_i, std::size_t j,
                       double beta, Axis axis) {
  Direction dir = axis == Axis::x ? Direction{1, 0} : Direction{0, 1};
  return entry_core(basis, frac_domain, rule, p_i, j, beta, dir);
}

double frac_directional_entry(const RbfBasis& basis, const Domain& frac_domain,
                              const QuadratureRule& rule, Point p_i,
                              std::size_t j, double beta, double theta) {
  return entry_core(basis, frac_domain, rule, p_i, j, beta,
                    direction_from_angle(theta));
}

double frac_mixed_entry(const RbfBasis& basis, const Domain& frac_domain,
                        const FracRuleCache& cache, Point p_i, std::size_t j,
                        const MixingMeasure& measure,
                        const AngularRule& angular) {
  double total = 0;
  if (measure.discrete) {
    std::size_t n = measure.thetas.size();
    if (n == 0 || measure.weights.size() != n || measure.betas.size() != n)
      throw std::invalid_argument("frac_mixed_entry: inconsistent atoms");
    for (std::size_t q = 0; q < n; ++q) {
      double b = measure.betas[q];
      Direction dir = direction_from_angle(measure.thetas[q]);
      double e = (b == 2.0)
                     ? mq_d2(p_i, basis.centers.at(j), basis.shape_c, dir)
                     : entry_core(basis, frac_domain, cache.rule_for(b), p_i,
                                  j, b, dir);
      total += measure.weights[q] * e;
    }
  } else {
    if (!measure.weight_fn || !measure.order_fn)
      throw std::invalid_argument("frac_mixed_entry: missing density");
    for (int l = 0; l < angular.count; ++l) {
      double th = angular.angles[l];
      double m = measure.weight_fn(th);
      if (m == 0.0) continue;
      double b = measure.order_fn(th);
      Direction dir = direction_from_angle(th);
      double e = (b == 2.0)
                     ? mq_d2(p_i, basis.centers.at(j), basis.shape_c, dir)
                     : entry_core(basis, frac_domain, cache.rule_for(b), p_i,
                                  j, b, dir);
      total += angular.weights[l] * m * e;
    }
  }
  return total;
}

}  // namespace frackansa
