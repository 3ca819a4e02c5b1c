#include "frackansa/special.hpp"

#include <quadmath.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace frackansa {

namespace {
constexpr double kPi = std::numbers::pi;
}

double sinpi(double x) {
  double r = std::remainder(x, 2.0);  // r in [-1, 1], x - r an even integer
  double a = std::fabs(r);
  double s = (a <= 0.5) ? std::sin(kPi * a) : std::sin(kPi * (1.0 - a));
  return r < 0 ? -s : s;
}

double cospi(double x) {
  double a = std::fabs(std::remainder(x, 2.0));  // [0, 1]
  if (a <= 0.25) return std::cos(kPi * a);
  if (a < 0.75) return std::sin(kPi * (0.5 - a));
  return -std::cos(kPi * (1.0 - a));
}

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("gamma_fn: non-finite argument");
  if (x >= 0.5) return std::tgamma(x);
  if (x == std::floor(x)) throw std::invalid_argument("gamma_fn: pole at a non-positive integer");
  return kPi / (sinpi(x) * std::tgamma(1.0 - x));
}

double rgamma(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rgamma: non-finite argument");
  if (x >= 0.5) {
    if (x > 170.0) return std::exp(-std::lgamma(x));
    return 1.0 / std::tgamma(x);
  }
  if (x == std::floor(x)) return 0.0;
  return sinpi(x) * std::tgamma(1.0 - x) / kPi;
}

namespace {

struct Eval {
  std::complex<double> value;
  double err;
};

// Plain series in 80-bit arithmetic; certified for |z| <= 0.95 or
// |z|^(1/alpha) <= 6 where the partial sums stay below ~exp(6).
Eval series_long_double(double alpha, std::complex<double> z) {
  using C = std::complex<long double>;
  const C zl(static_cast<long double>(z.real()), static_cast<long double>(z.imag()));
  C p(1.0L, 0.0L);
  C sum(0.0L, 0.0L);
  long double maxmag = 0.0L;
  const long double tol = 1e-35L;
  int below = 0;
  int n = 0;
  for (; n <= 100000; ++n) {
    long double scale = expl(-lgammal(static_cast<long double>(alpha) * n + 1.0L));
    C term = p * scale;
    sum += term;
    long double mag = hypotl(term.real(), term.imag());
    if (mag > maxmag) maxmag = mag;
    long double ref = hypotl(sum.real(), sum.imag());
    if (ref < 1.0L) ref = 1.0L;
    if (mag < tol * ref) {
      if (++below >= 4) break;
    } else {
      below = 0;
    }
    p *= zl;
  }
  if (n > 100000) throw std::runtime_error("mittag_leffler: series did not converge");
  double err = static_cast<double>((n + 8.0L) * 1.1e-19L * maxmag) + 1e-30;
  return {std::complex<double>(static_cast<double>(sum.real()), static_cast<double>(sum.imag())),
          err};
}

// Quad-precision series; covers the cancellation band |z|^(1/alpha) <= 40
// where partial sums peak near exp(40) ~ 2.4e17, far under 1/eps_quad.
Eval series_quad(double alpha, std::complex<double> z) {
  __float128 zr = z.real(), zi = z.imag();
  __float128 pr = 1, pim = 0;
  __float128 sr = 0, sim = 0;
  __float128 maxmag = 0;
  const __float128 tol = 1e-36Q;
  int below = 0;
  int n = 0;
  for (; n <= 400000; ++n) {
    __float128 scale = expq(-lgammaq(static_cast<__float128>(alpha) * n + 1));
    __float128 tr = pr * scale, tim = pim * scale;
    sr += tr;
    sim += tim;
    __float128 mag = sqrtq(tr * tr + tim * tim);
    if (mag > maxmag) maxmag = mag;
    __float128 ref = sqrtq(sr * sr + sim * sim);
    if (ref < 1) ref = 1;
    if (mag < tol * ref) {
      if (++below >= 4) break;
    } else {
      below = 0;
    }
    __float128 t = pr * zr - pim * zi;
    pim = pr * zi + pim * zr;
    pr = t;
  }
  if (n > 400000) throw std::runtime_error("mittag_leffler: series did not converge");
  double err = static_cast<double>((n + 8.0Q) * 2e-34Q * maxmag) + 1e-30;
  return {std::complex<double>(static_cast<double>(sr), static_cast<double>(sim)), err};
}

// Large argument: algebraic expansion -sum z^-k / Gamma(1 - alpha k) plus the
// exponential branch exp(z^(1/alpha))/alpha inside the sector |arg z| <= alpha pi.
// The first omitted branch is O(exp(-|z|^(1/alpha))); callers only land here
// with |z|^(1/alpha) > 40.
Eval asymptotic(double alpha, std::complex<double> z) {
  const double az = std::abs(z);
  const double logaz = std::log(az);
  const std::complex<double> zinv = 1.0 / z;
  std::complex<double> p(1.0, 0.0);  // z^-k
  std::complex<double> sum(0.0, 0.0);
  // truncation tracks the sin-free envelope Gamma(alpha k)/|z|^k, which is
  // unimodal with its minimum ~exp(-|z|^(1/alpha)) near alpha k = |z|^(1/alpha)
  double prev_env = std::numeric_limits<double>::infinity();
  double err = 0;
  for (int k = 1; k <= 2000; ++k) {
    p *= zinv;
    double ak = alpha * k;
    double lg = std::lgamma(ak);
    double logmag = lg - k * logaz;
    double env = std::exp(logmag);
    if (env >= prev_env) {  // optimal truncation
      err += prev_env;
      break;
    }
    prev_env = env;
    double sfac = sinpi(ak) / kPi;  // 1/Gamma(1-ak) = Gamma(ak) sinpi(ak)/pi
    std::complex<double> term;
    if (lg < 700.0) {
      term = p * (std::exp(lg) * sfac);
    } else {
      double pm = std::abs(p);
      term = (pm > 0 ? p / pm : std::complex<double>(0, 0)) * (env * sfac);
    }
    sum -= term;
    double ref = std::abs(sum);
    if (ref < 1.0) ref = 1.0;
    if (env < 1e-17 * ref) {
      err += env;
      break;
    }
  }
  double x1a = std::pow(az, 1.0 / alpha);
  if (std::fabs(std::arg(z)) <= alpha * kPi) {
    std::complex<double> w = std::pow(z, 1.0 / alpha);
    sum += std::exp(w) / alpha;
  }
  err += 2.0 * std::exp(-x1a) + 2e-15 * std::abs(sum) + 1e-17;
  return {sum, err};
}

Eval ml_core(double alpha, std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) return {{1.0, 0.0}, 0.0};
  if (alpha == 1.0) {
    std::complex<double> v = std::exp(z);
    return {v, 4e-16 * std::abs(v) + 1e-300};
  }
  if (alpha > 1.0) {
    std::complex<double> w = std::sqrt(z);
    Eval e1 = ml_core(alpha / 2.0, w);
    Eval e2 = ml_core(alpha / 2.0, -w);
    std::complex<double> v = 0.5 * (e1.value + e2.value);
    return {v, 0.5 * (e1.err + e2.err) + 2e-16 * std::abs(v)};
  }
  const double az = std::abs(z);
  const double x = std::pow(az, 1.0 / alpha);  // cancellation exponent
  if (az <= 0.95 || x <= 6.0) return series_long_double(alpha, z);
  if (x <= 40.0) return series_quad(alpha, z);
  return asymptotic(alpha, z);
}

}  // namespace

MlEvaluation mittag_leffler_eval(double alpha, std::complex<double> z) {
  if (!(alpha > 0.0) || alpha > 2.0 || !std::isfinite(alpha))
    throw std::invalid_argument("mittag_leffler: order must lie in (0, 2]");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > 1e12)
    throw std::invalid_argument("mittag_leffler: |z| must be finite and <= 1e12");
  Eval e = ml_core(alpha, z);
  return {alpha, z, e.value, e.err};
}

std::complex<double> mittag_leffler(double alpha, std::complex<double> z) {
  return mittag_leffler_eval(alpha, z).value;
}

double mittag_leffler(double alpha, double x) {
  return mittag_leffler_eval(alpha, std::complex<double>(x, 0.0)).value.real();
}

}  // namespace frackansa
