#include "spectral_bounds/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spectral_bounds/error.hpp"
#include "spectral_bounds/quadrature.hpp"

namespace spectral_bounds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kOrder = 16;

int oscillatory_panels(double x, double nu) { return 4 + static_cast<int>((x + nu) / 2.0); }

// integral_0^inf g(t) e^{-x sinh t} dt with g of at most exponential growth e^{growth t};
// truncated where the exponent drops below -45.
template <class G>
double sinh_tail(G&& g, double x, double decay, double growth) {
  // Smallest T with x sinh T + (decay - growth) T >= 45.
  double T = 1.0;
  const double net = decay - growth;
  while (x * std::sinh(T) + net * T < 45.0 && T < 200.0) T *= 1.5;
  const int panels = 24 + static_cast<int>(2.0 * T);
  return integrate_composite(g, 0.0, T, panels, kOrder);
}

template <class F>
double bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double bessel_j(double nu, double x) {
  if (!(x >= 0.0)) throw DomainError("bessel_j: x must be >= 0");
  if (!(nu >= 0.0)) throw DomainError("bessel_j: order must be >= 0");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (x <= 2.0) {
    // Ascending series; terms shrink geometrically for x <= 2, no cancellation.
    const double half = 0.5 * x;
    double term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
    double sum = term;
    for (int k = 1; k < 60; ++k) {
      term *= -half * half / (k * (k + nu));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  // J_nu(x) = (1/pi) int_0^pi cos(nu t - x sin t) dt
  //         - (sin(nu pi)/pi) int_0^inf exp(-x sinh t - nu t) dt
  const double main = integrate_composite([&](double t) { return std::cos(nu * t - x * std::sin(t)); }, 0.0,
                                          kPi, oscillatory_panels(x, nu), kOrder) /
                      kPi;
  const double s = std::sin(nu * kPi);
  if (std::abs(s) < 1e-300 || nu == std::floor(nu)) return main;
  const double tail =
      sinh_tail([&](double t) { return std::exp(-x * std::sinh(t) - nu * t); }, x, nu, 0.0);
  return main - s / kPi * tail;
}

double bessel_y(int n, double x) {
  if (n != 0 && n != 1) throw DomainError("bessel_y: only orders 0 and 1 are implemented");
  if (!(x > 0.0)) throw DomainError("bessel_y: x must be > 0");
  // Y_n(x) = (1/pi) int_0^pi sin(x sin t - n t) dt
  //        - (1/pi) int_0^inf (e^{n t} + (-1)^n e^{-n t}) e^{-x sinh t} dt
  const double main = integrate_composite([&](double t) { return std::sin(x * std::sin(t) - n * t); }, 0.0,
                                          kPi, oscillatory_panels(x, n), kOrder) /
                      kPi;
  double tail = 0.0;
  if (n == 0) {
    tail = sinh_tail([&](double t) { return 2.0 * std::exp(-x * std::sinh(t)); }, x, 0.0, 0.0);
  } else {
    tail = sinh_tail([&](double t) { return 2.0 * std::sinh(t) * std::exp(-x * std::sinh(t)); }, x, 0.0, 1.0);
  }
  return main - tail / kPi;
}

double first_zero(double nu, double scan_step) {
  if (!(nu >= 0.0 && nu <= 10.0)) throw DomainError("first_zero: order must be in [0, 10]");
  if (!(scan_step > 0.0)) throw DomainError("first_zero: scan step must be positive");
  // J_nu > 0 on (0, j_{nu,1}) and j_{nu,1} > nu.
  double lo = std::max(nu, 0.5 * scan_step);
  double flo = bessel_j(nu, lo);
  for (int it = 0; it < 100000; ++it) {
    const double hi = lo + scan_step;
    const double fhi = bessel_j(nu, hi);
    if ((fhi > 0.0) != (flo > 0.0) || fhi == 0.0) {
      return bisect([nu](double x) { return bessel_j(nu, x); }, lo, hi);
    }
    lo = hi;
    flo = fhi;
  }
  throw SolverError("first_zero: no sign change found");
}

BallConstants ball_constants(int dimension) {
  if (dimension < 1 || dimension > 10) throw DomainError("ball_constants: dimension must be in [1, 10]");
  BallConstants c;
  c.dimension = dimension;
  const double d = dimension;
  if (dimension == 1) {
    // Interval (-1, 1): lambda_n = (n pi / 2)^2.
    c.lambda1_B1 = kPi * kPi / 4.0;
  } else {
    const double j = first_zero(0.5 * d - 1.0);
    c.lambda1_B1 = j * j;
  }
  const double j2 = first_zero(0.5 * d);
  c.lambda2_B1 = j2 * j2;
  c.volume_B1 = std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
  c.torsion_B1 = c.volume_B1 / (d * (d + 2.0));
  return c;
}

double pw_root(double p) {
  if (!(p >= 0.0 && p < 1.0)) throw DomainError("pw_root: p must lie in [0, 1)");
  if (p == 0.0) return first_zero(0.0);
  auto f = [p](double k) { return bessel_j(0, k) * bessel_y(1, p * k) - bessel_y(0, k) * bessel_j(1, p * k); };
  const double step = 0.05 / (1.0 - p);
  double lo = 1e-3;
  double flo = f(lo);
  for (int it = 0; it < 1000000; ++it) {
    const double hi = lo + step;
    const double fhi = f(hi);
    if ((fhi > 0.0) != (flo > 0.0) || fhi == 0.0) return bisect(f, lo, hi);
    lo = hi;
    flo = fhi;
  }
  throw SolverError("pw_root: no sign change found");
}

}  // namespace spectral_bounds
