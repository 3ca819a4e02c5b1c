#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <variant>

#include "frackansa/kernels.hpp"

namespace frackansa {

using Field = std::function<double(double, double)>;

// -V . grad(u) + Kx Dx^bx u + Ky Dy^by u
struct AxisOperator {
  double beta_x = 2;
  double beta_y = 2;
  Field vel_x;  // null = 0
  Field vel_y;
  Field k_x;  // null = 0 (term dropped)
  Field k_y;
  // route axis entries through the directional kernel at theta = 0 / pi/2
  bool use_directional_kernel = false;
};

// -V . grad(u) + k(x,y) * (measure-weighted directional derivatives)
struct MeasureOperator {
  Field vel_x;
  Field vel_y;
  Field k;
  MixingMeasure measure;
  int angular_count = 32;  // midpoint rule size for continuous measures
};

struct BoundarySpec {
  enum class Kind { dirichlet, neumann_x };
  Kind kind = Kind::dirichlet;
  Field g;             // spatial profile; null = 0
  double omega = 0;    // boundary data g(x,y) * E_alpha(-omega t^alpha)
};

struct ProblemSpec {
  Domain domain;
  // Reference domain for the fractional ray exits (defaults to `domain`).
  std::optional<Domain> frac_domain;
  std::variant<AxisOperator, MeasureOperator> op;
  BoundarySpec boundary;
  Field forcing;  // null = 0
  double alpha = 1;
};

struct CollocationSystem {
  Eigen::MatrixXd phi_full;    // (M+N)^2 interpolation matrix, interior rows first
  Eigen::MatrixXd b_interior;  // M x (M+N) right-hand-side operator rows
  Eigen::MatrixXd phi_b;       // N x (M+N) boundary rows
  Eigen::VectorXd forcing;     // M source values
  Eigen::VectorXd g_boundary;  // N boundary spatial profile values
  double omega = 0;
  double cond_phi = 0;  // 1-norm condition estimate of phi_full
  Eigen::Index n_interior = 0;
  Eigen::Index n_boundary = 0;
};

// Builds the collocation matrices; inner_points is the Gauss-Jacobi size of
// the fractional entries. Throws if phi_full's condition estimate exceeds 1e14.
CollocationSystem assemble(const ProblemSpec&, const NodeSet&, const RbfBasis&,
                           int inner_points = 20);

struct Propagator {
  Eigen::VectorXcd eigs;  // spectrum of -M
  Eigen::MatrixXcd S;     // eigenvectors
  Eigen::PartialPivLU<Eigen::MatrixXcd> S_lu;
  Eigen::PartialPivLU<Eigen::MatrixXd> phi_lu;
  Eigen::VectorXd lambda_inf;  // steady contribution of the source, else zero
  Eigen::VectorXd g_boundary;
  double omega = 0;
  double cond_S = 0;
  Eigen::Index n_interior = 0;
  Eigen::Index n_boundary = 0;
};

// Differentiates the boundary constraint and eliminates the singular pencil;
// throws when the spectrum is defective (cond(S) > 1e12, or the eigenpair
// residual exceeds 1e-8 relative) or, with a source, when M is singular.
Propagator index_reduce(const CollocationSystem&);

// Exact-in-time propagation of the expansion coefficients. u0_values holds
// nodal initial data (interior then boundary) consistent with the boundary
// profile at t = 0 within 1e-8.
Eigen::VectorXd propagate(const Propagator&, double alpha,
                          const Eigen::VectorXd& u0_values, double t);

Eigen::VectorXd evaluate(const RbfBasis&, const Eigen::VectorXd& lambda,
                         const std::vector<Point>& where);

}  // namespace frackansa
