#pragma once

#include <functional>
#include <vector>

namespace spectral_bounds {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
const QuadratureRule& gauss_legendre(int n);

/// `panels` equal panels on [a, b], each carrying an `order`-point Gauss-Legendre rule.
QuadratureRule composite_gauss_legendre(double a, double b, int panels, int order);

/// Composite Gauss-Legendre integral without materializing the node list.
template <class F>
double integrate_composite(F&& f, double a, double b, int panels, int order) {
  const QuadratureRule& rule = gauss_legendre(order);
  const double width = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    double panel = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      panel += rule.weights[k] * f(mid + 0.5 * width * rule.nodes[k]);
    }
    sum += 0.5 * width * panel;
  }
  return sum;
}

/// Adaptive Gauss-Kronrod integration to the requested relative tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double relative_tolerance);

}  // namespace spectral_bounds
