#pragma once

#include <Eigen/Core>

namespace spectral_bounds {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Eigen::VectorXd x;
  double objective = 0.0;
};

/// Dense two-phase tableau simplex with Bland's rule:
///   maximize c^T x  subject to  A x <= b,  x >= 0.
/// Intended for small problems (hundreds of constraints).
LpResult maximize_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c);

}  // namespace spectral_bounds
