#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace frackansa {

// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on (-1,1).
struct QuadratureRule {
  int n = 0;
  double a = 0;
  double b = 0;
  std::vector<double> nodes;    // ascending, strictly inside (-1,1)
  std::vector<double> weights;  // positive; sum = 2^(a+b+1) B(a+1,b+1)
};

// Golub-Welsch construction. Requires n >= 1 and a, b > -1.
QuadratureRule gauss_jacobi(int n, double a, double b);

// Composite midpoint rule on [0, 2pi): angles (l + 1/2) * 2pi/count.
struct AngularRule {
  int count = 0;
  std::vector<double> angles;
  std::vector<double> weights;  // 2pi/count each
};

AngularRule angular_rule(int count);

// Shared cache of the inner Gauss-Jacobi rules keyed by fractional order.
// frac entries of order beta use the (n, 1-beta, 0) rule.
class FracRuleCache {
 public:
  explicit FracRuleCache(int inner_points);
  int inner_points() const { return n_; }
  const QuadratureRule& rule_for(double beta) const;

 private:
  int n_;
  mutable std::mutex mu_;
  mutable std::map<double, std::shared_ptr<const QuadratureRule>> cache_;
};

}  // namespace frackansa
