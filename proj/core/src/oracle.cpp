#include "spectral_bounds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

#include "spectral_bounds/error.hpp"

namespace spectral_bounds {

namespace {

// Lattice points closer than this fraction of h to the boundary (along an
// axis) are treated as boundary points.
constexpr double kMinArm = 1e-4;
constexpr int kMaxBlockIterations = 3000;
constexpr double kRitzTolerance = 1e-13;
constexpr std::uint32_t kStartSeed = 20240611u;

using SparseMatrix = Eigen::SparseMatrix<double>;

// Index range of lattice coordinates covering the bounding box.
struct Lattice {
  int dimension = 0;
  std::vector<long> lower;
  std::vector<long> extent;
  double h = 0.0;

  long size() const {
    long n = 1;
    for (long e : extent) n *= e;
    return n;
  }
  long flat(const std::vector<long>& idx) const {
    long f = 0;
    for (int k = dimension - 1; k >= 0; --k) f = f * extent[k] + (idx[k] - lower[k]);
    return f;
  }
  std::vector<long> unflat(long f) const {
    std::vector<long> idx(dimension);
    for (int k = 0; k < dimension; ++k) {
      idx[k] = lower[k] + f % extent[k];
      f /= extent[k];
    }
    return idx;
  }
  Point point(const std::vector<long>& idx) const {
    Point x(dimension);
    for (int k = 0; k < dimension; ++k) x(k) = h * static_cast<double>(idx[k]);
    return x;
  }
};

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& block) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(block);
  return qr.householderQ() * Eigen::MatrixXd::Identity(block.rows(), block.cols());
}

template <class Factorization>
EigenSolveResult block_iteration(const GridOperator& op, const Factorization& solver, int count) {
  const Eigen::Index n = op.matrix.rows();
  const int block = static_cast<int>(std::min<Eigen::Index>(n, count + 3));

  std::mt19937 rng(kStartSeed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd Q(n, block);
  for (Eigen::Index j = 0; j < Q.cols(); ++j) {
    for (Eigen::Index i = 0; i < n; ++i) Q(i, j) = normal(rng);
  }
  Q = orthonormalize(Q);

  std::vector<double> previous(count, 0.0);
  int stable = 0;
  EigenSolveResult result;
  for (int it = 1; it <= kMaxBlockIterations; ++it) {
    Eigen::MatrixXd Z = solver.solve(Q);
    if (solver.info() != Eigen::Success) throw SolverError("sparse solve failed in eigen iteration");
    Q = orthonormalize(Z);
    const Eigen::MatrixXd AQ = op.matrix * Q;
    const Eigen::MatrixXd H = Q.transpose() * AQ;

    std::vector<std::pair<double, Eigen::VectorXd>> ritz;
    if (op.symmetric) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (H + H.transpose()));
      for (int k = 0; k < block; ++k) ritz.emplace_back(eig.eigenvalues()(k), eig.eigenvectors().col(k));
    } else {
      Eigen::EigenSolver<Eigen::MatrixXd> eig(H);
      for (int k = 0; k < block; ++k) {
        ritz.emplace_back(eig.eigenvalues()(k).real(), eig.eigenvectors().col(k).real());
      }
    }
    std::sort(ritz.begin(), ritz.end(), [](const auto& l, const auto& r) { return l.first < r.first; });

    double change = 0.0;
    for (int k = 0; k < count; ++k) {
      change = std::max(change, std::abs(ritz[k].first - previous[k]) / std::abs(ritz[k].first));
      previous[k] = ritz[k].first;
    }
    stable = change < kRitzTolerance ? stable + 1 : 0;
    if (stable >= 2) {
      result.values = previous;
      result.ground_state = Q * ritz[0].second;
      result.ground_state.normalize();
      result.iterations = it;
      return result;
    }
  }
  throw SolverError("eigen iteration did not converge within " + std::to_string(kMaxBlockIterations) +
                    " block iterations (last relative Ritz change above " + std::to_string(kRitzTolerance) +
                    ")");
}

template <class Fn>
auto with_factorization(const GridOperator& op, Fn&& fn) {
  if (op.symmetric) {
    Eigen::SimplicialLDLT<SparseMatrix> ldlt(op.matrix);
    if (ldlt.info() != Eigen::Success) throw SolverError("LDLT factorization of the grid Laplacian failed");
    return fn(ldlt);
  }
  Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(op.matrix);
  lu.factorize(op.matrix);
  if (lu.info() != Eigen::Success) throw SolverError("LU factorization of the grid Laplacian failed");
  return fn(lu);
}

double min_half_width(const ShapeSpec& shape) {
  switch (shape.kind()) {
    case ShapeKind::parallelepiped:
    case ShapeKind::ellipsoid:
      return *std::min_element(shape.half_axes().begin(), shape.half_axes().end());
    case ShapeKind::ball: return shape.radius();
    case ShapeKind::stadium:
    case ShapeKind::swiss_cross: return shape.a();
    case ShapeKind::polytope: return inradius_polytope(shape.halfspaces()).radius;
  }
  return 1.0;
}

}  // namespace

GridOperator assemble_dirichlet_laplacian(const ShapeSpec& shape, double spacing) {
  if (!(spacing > 0.0)) throw InputError("grid spacing must be positive");
  const int d = shape.dimension();
  if (d < 1 || d > 3) throw InputError("finite-difference oracle supports d = 1, 2, 3");

  const auto [low, high] = bounding_box(shape);
  Lattice lattice;
  lattice.dimension = d;
  lattice.h = spacing;
  for (int k = 0; k < d; ++k) {
    const long lo = static_cast<long>(std::ceil(low(k) / spacing)) - 1;
    const long hi = static_cast<long>(std::floor(high(k) / spacing)) + 1;
    lattice.lower.push_back(lo);
    lattice.extent.push_back(hi - lo + 1);
  }
  if (lattice.size() > 60'000'000L) throw InputError("grid too fine for the oracle");

  // Pass 1: pick unknowns.
  std::vector<int> index(static_cast<std::size_t>(lattice.size()), -1);
  GridOperator op;
  op.spacing = spacing;
  op.dimension = d;
  for (long f = 0; f < lattice.size(); ++f) {
    const auto idx = lattice.unflat(f);
    const Point x = lattice.point(idx);
    if (!contains(shape, x)) continue;
    bool too_close = false;
    for (int axis = 0; axis < d && !too_close; ++axis) {
      for (int dir : {1, -1}) {
        const auto t = boundary_crossing(shape, x, axis, dir, spacing);
        if (t && *t < kMinArm * spacing) {
          too_close = true;
          break;
        }
      }
    }
    if (too_close) continue;
    index[static_cast<std::size_t>(f)] = static_cast<int>(op.nodes.size());
    op.nodes.push_back(x);
  }
  const int n = static_cast<int>(op.nodes.size());
  if (n < 100) throw InputError("grid spacing too coarse: fewer than 100 interior nodes");

  // Pass 2: Shortley-Weller rows.
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n) * (2 * d + 1));
  for (int row = 0; row < n; ++row) {
    const Point& x = op.nodes[row];
    std::vector<long> idx(d);
    for (int k = 0; k < d; ++k) idx[k] = std::lround(x(k) / spacing);
    double diagonal = 0.0;
    for (int axis = 0; axis < d; ++axis) {
      double arm[2];
      int neighbor[2];
      for (int s = 0; s < 2; ++s) {
        const int dir = s == 0 ? 1 : -1;
        auto nidx = idx;
        nidx[axis] += dir;
        neighbor[s] = index[static_cast<std::size_t>(lattice.flat(nidx))];
        arm[s] = spacing;
        if (neighbor[s] < 0) {
          const auto t = boundary_crossing(shape, x, axis, dir, spacing);
          if (t && std::abs(*t - spacing) > 1e-10 * spacing) {
            arm[s] = std::max(*t, kMinArm * spacing);
            op.symmetric = false;
          }
        }
      }
      const double sum = arm[0] + arm[1];
      diagonal += 2.0 / (arm[0] * arm[1]);
      for (int s = 0; s < 2; ++s) {
        if (neighbor[s] >= 0) triplets.emplace_back(row, neighbor[s], -2.0 / (arm[s] * sum));
      }
    }
    triplets.emplace_back(row, row, diagonal);
  }
  op.matrix.resize(n, n);
  op.matrix.setFromTriplets(triplets.begin(), triplets.end());
  op.matrix.makeCompressed();
  return op;
}

EigenSolveResult solve_lowest_eigenpairs(const GridOperator& op, int count) {
  if (count < 1) throw InputError("eigenvalue count must be positive");
  if (count + 3 > op.matrix.rows()) throw InputError("grid has too few nodes for the requested eigenvalues");
  return with_factorization(op, [&](const auto& solver) { return block_iteration(op, solver, count); });
}

std::vector<double> fd_eigs(const ShapeSpec& shape, double spacing, int count) {
  const GridOperator op = assemble_dirichlet_laplacian(shape, spacing);
  return solve_lowest_eigenpairs(op, count).values;
}

double richardson(double coarse, double fine, int order) {
  if (order != 1 && order != 2) throw InputError("richardson order must be 1 or 2");
  const double factor = order == 1 ? 2.0 : 4.0;
  return (factor * fine - coarse) / (factor - 1.0);
}

double fd_torsion(const ShapeSpec& shape, double spacing) {
  const GridOperator op = assemble_dirichlet_laplacian(shape, spacing);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(op.matrix.rows());
  const Eigen::VectorXd u = with_factorization(op, [&](const auto& solver) -> Eigen::VectorXd {
    Eigen::VectorXd solution = solver.solve(ones);
    if (solver.info() != Eigen::Success) throw SolverError("torsion solve failed");
    return solution;
  });
  return u.sum() * std::pow(spacing, op.dimension);
}

double default_spacing(const ShapeSpec& shape, int nodes) {
  if (nodes < 4) throw InputError("oracle needs at least 4 intervals across the narrowest width");
  const double half_width = min_half_width(shape);
  double h = 2.0 * half_width / nodes;
  if (shape.kind() == ShapeKind::parallelepiped || shape.kind() == ShapeKind::swiss_cross) {
    // Shrink h (never grow it) until every half-width is a whole number of cells, if a small tweak does it.
    std::vector<double> widths = shape.kind() == ShapeKind::parallelepiped
                                     ? shape.half_axes()
                                     : std::vector<double>{shape.a(), shape.b()};
    for (int refine = 0; refine < 64; ++refine) {
      const double candidate = half_width / std::ceil(half_width / h - 1e-9 + refine);
      bool aligned = true;
      for (double w : widths) {
        const double cells = w / candidate;
        if (std::abs(cells - std::round(cells)) > 1e-9 * cells) aligned = false;
      }
      if (aligned) return candidate;
    }
  }
  return h;
}

SpectralEstimate estimate_spectrum(const ShapeSpec& shape, const OracleOptions& options) {
  const double h = default_spacing(shape, options.nodes);
  SpectralEstimate est;
  const auto coarse = fd_eigs(shape, h, 2);
  if (!options.extrapolate) {
    est.lambda1 = coarse[0];
    est.lambda2 = coarse[1];
    est.spacing = h;
    if (options.torsion) est.torsion = fd_torsion(shape, h);
    return est;
  }
  const auto fine = fd_eigs(shape, 0.5 * h, 2);
  est.lambda1 = richardson(coarse[0], fine[0], 2);
  est.lambda2 = richardson(coarse[1], fine[1], 2);
  est.spacing = 0.5 * h;
  est.extrapolated = true;
  est.error_estimate = std::max(std::abs(est.lambda1 - fine[0]) / est.lambda1,
                                std::abs(est.lambda2 - fine[1]) / est.lambda2);
  if (options.torsion) {
    const double p_coarse = fd_torsion(shape, h);
    const double p_fine = fd_torsion(shape, 0.5 * h);
    est.torsion = richardson(p_coarse, p_fine, 2);
    est.error_estimate = std::max(est.error_estimate, std::abs(*est.torsion - p_fine) / *est.torsion);
  }
  return est;
}

}  // namespace spectral_bounds
