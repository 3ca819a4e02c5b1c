#include "frackansa/solver.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "frackansa/parallel.hpp"
#include "frackansa/special.hpp"

namespace frackansa {

namespace {

double sample(const Field& f, Point p) { return f ? f(p.x, p.y) : 0.0; }

std::string cond_message(const char* what, double cond, double limit) {
  std::ostringstream os;
  os << what << " condition estimate " << cond << " exceeds " << limit;
  return os.str();
}

}  // namespace

CollocationSystem assemble(const ProblemSpec& problem, const NodeSet& nodes,
                           const RbfBasis& basis, int inner_points) {
  const auto m = static_cast<Eigen::Index>(nodes.interior.size());
  const auto n = static_cast<Eigen::Index>(nodes.boundary.size());
  const Eigen::Index total = m + n;
  if (total == 0) throw std::invalid_argument("assemble: empty node set");
  if (basis.centers.size() != static_cast<std::size_t>(total))
    throw std::invalid_argument("assemble: basis centers do not match the node set");
  for (Eigen::Index k = 0; k < total; ++k) {
    const Point a = nodes.node(static_cast<std::size_t>(k));
    const Point b = basis.centers[static_cast<std::size_t>(k)];
    if (a.x != b.x || a.y != b.y)
      throw std::invalid_argument("assemble: basis centers do not match the node set");
  }
  if (!(basis.shape_c > 0))
    throw std::invalid_argument("assemble: shape parameter must be positive");
  if (!(problem.alpha > 0 && problem.alpha <= 1))
    throw std::invalid_argument("assemble: time order alpha must lie in (0, 1]");
  if (!(problem.boundary.omega >= 0))
    throw std::invalid_argument("assemble: boundary decay rate omega must be >= 0");

  const Domain& fdom = problem.frac_domain ? *problem.frac_domain : problem.domain;
  const auto* axis_op = std::get_if<AxisOperator>(&problem.op);
  const auto* meas_op = std::get_if<MeasureOperator>(&problem.op);

  FracRuleCache cache(inner_points);
  const QuadratureRule* rule_x = nullptr;
  const QuadratureRule* rule_y = nullptr;
  if (axis_op) {
    if (axis_op->k_x && !(axis_op->beta_x > 1 && axis_op->beta_x <= 2))
      throw std::invalid_argument("assemble: beta_x must lie in (1, 2]");
    if (axis_op->k_y && !(axis_op->beta_y > 1 && axis_op->beta_y <= 2))
      throw std::invalid_argument("assemble: beta_y must lie in (1, 2]");
    if (axis_op->k_x && axis_op->beta_x < 2) rule_x = &cache.rule_for(axis_op->beta_x);
    if (axis_op->k_y && axis_op->beta_y < 2) rule_y = &cache.rule_for(axis_op->beta_y);
  }
  AngularRule angular;
  if (meas_op && meas_op->k) angular = angular_rule(meas_op->angular_count);

  CollocationSystem sys;
  sys.n_interior = m;
  sys.n_boundary = n;
  sys.omega = problem.boundary.omega;
  sys.phi_full.resize(total, total);
  sys.b_interior.resize(m, total);
  sys.phi_b.resize(n, total);
  sys.forcing.resize(m);
  sys.g_boundary.resize(n);

  const double shape = basis.shape_c;
  const auto& centers = basis.centers;
  const bool neumann = problem.boundary.kind == BoundarySpec::Kind::neumann_x;

  parallel_rows(static_cast<std::size_t>(total), [&](std::size_t r) {
    const Point p = nodes.node(r);
    const auto row = static_cast<Eigen::Index>(r);
    for (Eigen::Index j = 0; j < total; ++j)
      sys.phi_full(row, j) = mq(p, centers[static_cast<std::size_t>(j)], shape);

    if (row < m) {
      sys.forcing(row) = sample(problem.forcing, p);
      if (axis_op) {
        const double vx = axis_op->vel_x ? axis_op->vel_x(p.x, p.y) : 0.0;
        const double vy = axis_op->vel_y ? axis_op->vel_y(p.x, p.y) : 0.0;
        const double kx = axis_op->k_x ? axis_op->k_x(p.x, p.y) : 0.0;
        const double ky = axis_op->k_y ? axis_op->k_y(p.x, p.y) : 0.0;
        for (Eigen::Index j = 0; j < total; ++j) {
          const auto jj = static_cast<std::size_t>(j);
          const Point c = centers[jj];
          double v = 0;
          if (axis_op->vel_x) v -= vx * mq_dx(p, c, shape);
          if (axis_op->vel_y) v -= vy * mq_dy(p, c, shape);
          if (axis_op->k_x) {
            double ex;
            if (axis_op->beta_x == 2.0)
              ex = mq_d2(p, c, shape, Direction{1, 0});
            else if (axis_op->use_directional_kernel)
              ex = frac_directional_entry(basis, fdom, *rule_x, p, jj,
                                          axis_op->beta_x, 0.0);
            else
              ex = frac_axis_entry(basis, fdom, *rule_x, p, jj, axis_op->beta_x,
                                   Axis::x);
            v += kx * ex;
          }
          if (axis_op->k_y) {
            double ey;
            if (axis_op->beta_y == 2.0)
              ey = mq_d2(p, c, shape, Direction{0, 1});
            else if (axis_op->use_directional_kernel)
              ey = frac_directional_entry(basis, fdom, *rule_y, p, jj,
                                          axis_op->beta_y,
                                          std::acos(-1.0) / 2);
            else
              ey = frac_axis_entry(basis, fdom, *rule_y, p, jj, axis_op->beta_y,
                                   Axis::y);
            v += ky * ey;
          }
          sys.b_interior(row, j) = v;
        }
      } else {
        const double vx = meas_op->vel_x ? meas_op->vel_x(p.x, p.y) : 0.0;
        const double vy = meas_op->vel_y ? meas_op->vel_y(p.x, p.y) : 0.0;
        const double kk = meas_op->k ? meas_op->k(p.x, p.y) : 0.0;
        for (Eigen::Index j = 0; j < total; ++j) {
          const auto jj = static_cast<std::size_t>(j);
          const Point c = centers[jj];
          double v = 0;
          if (meas_op->vel_x) v -= vx * mq_dx(p, c, shape);
          if (meas_op->vel_y) v -= vy * mq_dy(p, c, shape);
          if (meas_op->k)
            v += kk * frac_mixed_entry(basis, fdom, cache, p, jj,
                                       meas_op->measure, angular);
          sys.b_interior(row, j) = v;
        }
      }
    } else {
      sys.g_boundary(row - m) = sample(problem.boundary.g, p);
      if (neumann) {
        for (Eigen::Index j = 0; j < total; ++j)
          sys.phi_b(row - m, j) = mq_dx(p, centers[static_cast<std::size_t>(j)], shape);
      } else {
        sys.phi_b.row(row - m) = sys.phi_full.row(row);
      }
    }
  });

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.phi_full);
  const double rc = lu.rcond();
  sys.cond_phi = rc > 0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
  if (!(sys.cond_phi <= 1e14))
    throw std::runtime_error(
        cond_message("assemble: interpolation matrix", sys.cond_phi, 1e14) +
        " (shape parameter too flat or clashing nodes)");
  return sys;
}

Propagator index_reduce(const CollocationSystem& sys) {
  const Eigen::Index m = sys.n_interior;
  const Eigen::Index n = sys.n_boundary;
  const Eigen::Index total = m + n;
  if (sys.phi_full.rows() != total || sys.phi_full.cols() != total ||
      sys.b_interior.rows() != m || sys.b_interior.cols() != total ||
      sys.phi_b.rows() != n || sys.phi_b.cols() != total)
    throw std::invalid_argument("index_reduce: inconsistent system shapes");

  Propagator prop;
  prop.n_interior = m;
  prop.n_boundary = n;
  prop.omega = sys.omega;
  prop.g_boundary = sys.g_boundary;
  prop.phi_lu.compute(sys.phi_full);

  // Differentiating the boundary constraint Phi_b lambda = g E_a(-w t^a)
  // turns the zero mass rows into Phi_b D^a lambda = -w Phi_b lambda, so the
  // full interpolation matrix becomes the (nonsingular) mass matrix and
  //   D^a lambda = -M lambda + F,  M = Phi^-1 [-B_interior; w Phi_b].
  Eigen::MatrixXd rhs(total, total);
  rhs.topRows(m) = -sys.b_interior;
  if (n > 0) rhs.bottomRows(n) = sys.omega * sys.phi_b;
  const Eigen::MatrixXd m_mat = prop.phi_lu.solve(rhs);
  const Eigen::MatrixXd neg_m = -m_mat;

  Eigen::EigenSolver<Eigen::MatrixXd> es(neg_m, true);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("index_reduce: eigendecomposition did not converge");
  prop.eigs = es.eigenvalues();
  prop.S = es.eigenvectors();
  prop.S_lu.compute(prop.S);
  const double rc = prop.S_lu.rcond();
  prop.cond_S = rc > 0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
  if (!(prop.cond_S <= 1e12))
    throw std::runtime_error(
        cond_message("index_reduce: modal matrix", prop.cond_S, 1e12) +
        " (defective or near-defective spectrum)");

  const Eigen::MatrixXcd s_inv =
      prop.S_lu.solve(Eigen::MatrixXcd::Identity(total, total));
  const Eigen::MatrixXcd recon = prop.S * prop.eigs.asDiagonal() * s_inv;
  const double scale = m_mat.cwiseAbs().maxCoeff();
  const double resid =
      (recon - neg_m.cast<std::complex<double>>()).cwiseAbs().maxCoeff();
  // the achievable reconstruction accuracy degrades with the modal
  // conditioning, so the floor widens for legitimately ill-conditioned but
  // still admissible spectra
  const double tol = std::max(
      1e-8, 32.0 * std::numeric_limits<double>::epsilon() * prop.cond_S);
  if (resid > tol * scale) {
    std::ostringstream os;
    os << "index_reduce: eigenpair residual " << resid << " exceeds " << tol
       << " * " << scale;
    throw std::runtime_error(os.str());
  }

  prop.lambda_inf = Eigen::VectorXd::Zero(total);
  if (sys.forcing.size() > 0 && sys.forcing.lpNorm<Eigen::Infinity>() > 0) {
    // steady shift: M lambda_inf = Phi^-1 [F; 0], i.e. rhs * lambda_inf = [F; 0]
    Eigen::PartialPivLU<Eigen::MatrixXd> rhs_lu(rhs);
    const double rrc = rhs_lu.rcond();
    if (!(rrc > 1e-14))
      throw std::runtime_error(
          "index_reduce: reduced matrix is singular but a source is present");
    Eigen::VectorXd f_full = Eigen::VectorXd::Zero(total);
    f_full.head(m) = sys.forcing;
    prop.lambda_inf = rhs_lu.solve(f_full);
  }
  return prop;
}

Eigen::VectorXd propagate(const Propagator& prop, double alpha,
                          const Eigen::VectorXd& u0_values, double t) {
  const Eigen::Index total = prop.n_interior + prop.n_boundary;
  if (!(alpha > 0 && alpha <= 1))
    throw std::invalid_argument("propagate: alpha must lie in (0, 1]");
  if (!(t >= 0)) throw std::invalid_argument("propagate: time must be >= 0");
  if (u0_values.size() != total)
    throw std::invalid_argument("propagate: initial data has the wrong length");
  if (prop.n_boundary > 0) {
    const double gap = (u0_values.tail(prop.n_boundary) - prop.g_boundary)
                           .lpNorm<Eigen::Infinity>();
    const double gscale = 1.0 + prop.g_boundary.lpNorm<Eigen::Infinity>();
    if (gap > 1e-8 * gscale)
      throw std::invalid_argument(
          "propagate: initial data is inconsistent with the boundary profile "
          "at t = 0");
  }

  const Eigen::VectorXd lam0 = prop.phi_lu.solve(u0_values);
  // E_alpha(mu * 0) is the identity: skip the eigenbasis round trip, whose
  // cond(S)-sized roundoff would pollute the exactly-known initial state
  if (t == 0) return lam0;
  Eigen::VectorXcd w =
      prop.S_lu.solve((lam0 - prop.lambda_inf).cast<std::complex<double>>().eval());
  const double talpha = std::pow(t, alpha);
  for (Eigen::Index i = 0; i < total; ++i)
    w(i) *= mittag_leffler(alpha, prop.eigs(i) * talpha);
  const Eigen::VectorXcd bar = prop.S * w;

  Eigen::VectorXd lam = bar.real() + prop.lambda_inf;
  const double imag = bar.imag().lpNorm<Eigen::Infinity>();
  const double scale = std::max(lam.lpNorm<Eigen::Infinity>(), 1e-30);
  if (imag > 1e-8 * scale) {
    std::ostringstream os;
    os << "propagate: imaginary residue " << imag << " exceeds 1e-8 * " << scale;
    throw std::runtime_error(os.str());
  }
  return lam;
}

Eigen::VectorXd evaluate(const RbfBasis& basis, const Eigen::VectorXd& lambda,
                         const std::vector<Point>& where) {
  if (lambda.size() != static_cast<Eigen::Index>(basis.centers.size()))
    throw std::invalid_argument("evaluate: coefficient length mismatch");
  Eigen::VectorXd out(static_cast<Eigen::Index>(where.size()));
  for (std::size_t k = 0; k < where.size(); ++k) {
    double acc = 0;
    for (std::size_t j = 0; j < basis.centers.size(); ++j)
      acc += lambda(static_cast<Eigen::Index>(j)) *
             mq(where[k], basis.centers[j], basis.shape_c);
    out(static_cast<Eigen::Index>(k)) = acc;
  }
  return out;
}

}  // namespace frackansa
