#pragma once

#include <complex>

namespace frackansa {

// Gamma function on the real line. Arguments at the poles (0, -1, -2, ...)
// throw std::invalid_argument; x < 0.5 goes through the reflection formula.
double gamma_fn(double x);

// 1/Gamma(x); exact zero at the poles.
double rgamma(double x);

// sin(pi*x) / cos(pi*x) with the integer part reduced exactly.
double sinpi(double x);
double cospi(double x);

struct MlEvaluation {
  double alpha;
  std::complex<double> z;
  std::complex<double> value;
  double est_abs_error;
};

// One-parameter Mittag-Leffler function E_alpha(z), alpha in (0,2], |z| <= 1e12.
// Accuracy is certified against series oracles up to |z| = 1e6; beyond that the
// asymptotic branch only gains digits, which long-time propagation relies on.
// Absolute error <= 1e-12 wherever the value itself is O(1) (the whole
// decaying/oscillatory region); in the exponential-growth sector the bound
// degrades gracefully to a near-machine relative one, which est_abs_error
// reports per evaluation from the branch actually taken.
MlEvaluation mittag_leffler_eval(double alpha, std::complex<double> z);
std::complex<double> mittag_leffler(double alpha, std::complex<double> z);

// Real argument convenience overload; the result is exactly real.
double mittag_leffler(double alpha, double x);

}  // namespace frackansa
