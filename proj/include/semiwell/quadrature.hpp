// Gauss-Legendre rules and the product rule used for exact sphere integrals.
#pragma once

#include <vector>

namespace semiwell {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree
/// <= 2n - 1. Nodes ascending.
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Product rule on S^2 in (u = cos theta, phi): Gauss-Legendre in u and a
/// uniform azimuthal grid. Integrates against the normalized area measure
/// (total mass 1).
struct SphereGrid {
  QuadratureRule u;
  int azimuthal = 0;

  /// Exact for polynomials in (X, Y, Z) of total degree <= degree.
  static SphereGrid exact_for_degree(int degree);
};

}  // namespace semiwell
