#include "spectral_bounds/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace spectral_bounds {

namespace {

constexpr double kPivotTolerance = 1e-11;
constexpr int kMaxPivots = 100000;

enum class Outcome { optimal, unbounded };

void pivot(Eigen::MatrixXd& t, int row, int col) {
  t.row(row) /= t(row, col);
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    if (i == row) continue;
    const double factor = t(i, col);
    if (factor != 0.0) t.row(i) -= factor * t.row(row);
  }
}

// Last row holds reduced costs of a maximization; optimal when none is negative.
Outcome run(Eigen::MatrixXd& t, std::vector<int>& basis, int usable_columns) {
  const int m = static_cast<int>(t.rows()) - 1;
  const int rhs = static_cast<int>(t.cols()) - 1;
  for (int iteration = 0; iteration < kMaxPivots; ++iteration) {
    int enter = -1;
    for (int j = 0; j < usable_columns; ++j) {
      if (t(m, j) < -kPivotTolerance) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return Outcome::optimal;

    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (t(i, enter) <= kPivotTolerance) continue;
      const double ratio = t(i, rhs) / t(i, enter);
      if (ratio < best - 1e-14 || (ratio <= best + 1e-14 && leave >= 0 && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) return Outcome::unbounded;
    pivot(t, leave, enter);
    basis[leave] = enter;
  }
  return Outcome::optimal;
}

void price_out(Eigen::MatrixXd& t, const std::vector<int>& basis) {
  const Eigen::Index m = t.rows() - 1;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double coefficient = t(m, basis[i]);
    if (coefficient != 0.0) t.row(m) -= coefficient * t.row(i);
  }
}

}  // namespace

LpResult maximize_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());

  std::vector<int> artificial_rows;
  for (int i = 0; i < m; ++i) {
    if (b(i) < 0.0) artificial_rows.push_back(i);
  }
  const int k = static_cast<int>(artificial_rows.size());
  const int columns = n + m + k;
  const int rhs = columns;

  // Columns: x (n), slacks (m), artificials (k), rhs.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, columns + 1);
  std::vector<int> basis(m);
  int next_artificial = n + m;
  for (int i = 0; i < m; ++i) {
    const double sign = b(i) < 0.0 ? -1.0 : 1.0;
    t.row(i).head(n) = sign * A.row(i);
    t(i, n + i) = sign;
    t(i, rhs) = sign * b(i);
    if (sign < 0.0) {
      t(i, next_artificial) = 1.0;
      basis[i] = next_artificial++;
    } else {
      basis[i] = n + i;
    }
  }

  if (k > 0) {
    // Phase 1: maximize -(sum of artificials).
    for (int j = n + m; j < columns; ++j) t(m, j) = 1.0;
    price_out(t, basis);
    run(t, basis, columns);
    double infeasibility = 0.0;
    for (int i = 0; i < m; ++i) {
      if (basis[i] >= n + m) infeasibility += t(i, rhs);
    }
    const double scale = 1.0 + b.cwiseAbs().maxCoeff();
    if (infeasibility > 1e-9 * scale) return LpResult{LpStatus::infeasible, {}, 0.0};
    // Drive degenerate artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (basis[i] < n + m) continue;
      for (int j = 0; j < n + m; ++j) {
        if (std::abs(t(i, j)) > kPivotTolerance) {
          pivot(t, i, j);
          basis[i] = j;
          break;
        }
      }
    }
  }

  t.row(m).setZero();
  t.row(m).head(n) = -c.transpose();
  price_out(t, basis);
  if (run(t, basis, n + m) == Outcome::unbounded) return LpResult{LpStatus::unbounded, {}, 0.0};

  LpResult result;
  result.status = LpStatus::optimal;
  result.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) result.x(basis[i]) = t(i, rhs);
  }
  result.objective = c.dot(result.x);
  return result;
}

}  // namespace spectral_bounds
