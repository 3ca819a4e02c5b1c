#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "frackansa/geometry.hpp"
#include "frackansa/quadrature.hpp"

namespace frackansa {

// Hardy multiquadric basis phi_j(p) = sqrt(|p - c_j|^2 + shape_c^2).
struct RbfBasis {
  std::vector<Point> centers;
  double shape_c = 0;
};

// Unit direction with cardinal components snapped exactly to 0 / +-1 so that
// axis-aligned angles reproduce axis kernels bit for bit.
struct Direction {
  double c = 1;
  double s = 0;
};
Direction direction_from_angle(double theta);

double mq(Point p, Point c, double shape);
double mq_dx(Point p, Point c, double shape);
double mq_dy(Point p, Point c, double shape);
// Second derivative along a direction: d^2/ds^2 phi(p + s*dir).
double mq_d2(Point p, Point c, double shape, Direction dir);

enum class Axis { x, y };

// Caputo-type fractional derivative entries of order beta in (1,2]:
// the operator applied to basis function j, collocated at node p_i. The
// integral runs from the boundary of `frac_domain` along the ray opposite to
// the direction. `rule` must be the (n, 1-beta, 0) Gauss-Jacobi rule; beta = 2
// falls back to the exact second derivative.
double frac_axis_entry(const RbfBasis&, const Domain& frac_domain,
                       const QuadratureRule& rule, Point p_i, std::size_t j,
                       double beta, Axis axis);

double frac_directional_entry(const RbfBasis&, const Domain& frac_domain,
                              const QuadratureRule& rule, Point p_i,
                              std::size_t j, double beta, double theta);

// Mixing measure across directions: discrete atoms or a continuous density
// integrated with the midpoint angular rule.
struct MixingMeasure {
  bool discrete = true;
  // discrete atoms
  std::vector<double> thetas;
  std::vector<double> weights;
  std::vector<double> betas;
  // continuous density and order profile
  std::function<double(double)> weight_fn;
  std::function<double(double)> order_fn;
};

double frac_mixed_entry(const RbfBasis&, const Domain& frac_domain,
                        const FracRuleCache&, Point p_i, std::size_t j,
                        const MixingMeasure&, const AngularRule&);

}  // namespace frackansa
