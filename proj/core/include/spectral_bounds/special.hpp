#pragma once

namespace spectral_bounds {

/// Bessel function of the first kind J_nu(x), nu >= 0, x >= 0.
double bessel_j(double nu, double x);

/// Bessel function of the second kind Y_n(x) for n in {0, 1}, x > 0.
double bessel_y(int n, double x);

/// First positive zero j_{nu,1} for nu in [0, 10]: scan J_nu on a grid of
/// width `scan_step` until it changes sign, then bisect to machine precision.
double first_zero(double nu, double scan_step = 0.1);

/// Unit-ball spectral and torsion constants in dimension d.
struct BallConstants {
  int dimension = 0;
  double lambda1_B1 = 0.0;  // j_{d/2-1,1}^2
  double lambda2_B1 = 0.0;  // j_{d/2,1}^2
  double volume_B1 = 0.0;   // pi^{d/2} / Gamma(d/2 + 1)
  double torsion_B1 = 0.0;  // |B_1| / (d (d + 2))
};

BallConstants ball_constants(int dimension);

/// First positive root k of J0(k) Y1(p k) = Y0(k) J1(p k) for the radius
/// ratio p in [0, 1). Equals j_{0,1} at p = 0 and grows like pi / (2 (1 - p)).
double pw_root(double p);

}  // namespace spectral_bounds
