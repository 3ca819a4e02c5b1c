#include "frackansa/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "frackansa/special.hpp"

namespace frackansa {

// Golub-Welsch: nodes are the eigenvalues of the symmetrized Jacobi matrix of
// the monic recurrence, weights are mu0 times the squared first components of
// the normalized eigenvectors.
QuadratureRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
  if (!(a > -1.0) || !(b > -1.0))
    throw std::invalid_argument("gauss_jacobi: need a > -1 and b > -1");

  Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
  diag[0] = (b - a) / (a + b + 2.0);
  for (int k = 1; k < n; ++k) {
    double s = 2.0 * k + a + b;
    diag[k] = (b * b - a * a) / (s * (s + 2.0));
    double beta;
    if (k == 1) {
      beta = 4.0 * (a + 1.0) * (b + 1.0) /
             ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + a + b) /
             (s * s * (s + 1.0) * (s - 1.0));
    }
    sub[k - 1] = std::sqrt(beta);
  }

  double mu0 = std::pow(2.0, a + b + 1.0) * gamma_fn(a + 1.0) *
               gamma_fn(b + 1.0) / gamma_fn(a + b + 2.0);

  QuadratureRule rule;
  rule.n = n;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = diag[0];
    rule.weights[0] = mu0;
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(n - 1));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_jacobi: tridiagonal eigensolve failed");
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()[i];  // ascending per Eigen's contract
    double q = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * q * q;
  }
  return rule;
}

AngularRule angular_rule(int count) {
  if (count < 1) throw std::invalid_argument("angular_rule: count must be >= 1");
  AngularRule rule;
  rule.count = count;
  rule.angles.resize(count);
  rule.weights.resize(count);
  double h = 2.0 * M_PI / count;
  for (int l = 0; l < count; ++l) {
    rule.angles[l] = (l + 0.5) * h;
    rule.weights[l] = h;
  }
  return rule;
}

FracRuleCache::FracRuleCache(int inner_points) : n_(inner_points) {
  if (inner_points < 1)
    throw std::invalid_argument("FracRuleCache: inner_points must be >= 1");
}

const QuadratureRule& FracRuleCache::rule_for(double beta) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(beta);
  if (it == cache_.end()) {
    auto rule = std::make_shared<const QuadratureRule>(
        gauss_jacobi(n_, 1.0 - beta, 0.0));
    it = cache_.emplace(beta, std::move(rule)).first;
  }
  return *it->second;
}

}  // namespace frackansa
