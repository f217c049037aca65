#include "semiwell/flat_model.hpp"

#include <cmath>

namespace semiwell {

namespace {

// Annihilation operator a_j on the Fock basis: a_j e_nu = sqrt(nu_j) e_{nu - 1_j}.
CMatrix annihilation(const FockBasis& basis, int j) {
  CMatrix a = CMatrix::Zero(basis.size(), basis.size());
  const auto uj = static_cast<std::size_t>(j);
  for (Eigen::Index col = 0; col < basis.size(); ++col) {
    MultiIndex nu = basis[col];
    if (nu[uj] == 0) continue;
    const double amp = std::sqrt(static_cast<double>(nu[uj]));
    --nu[uj];
    a(basis.index_of(nu), col) = amp;
  }
  return a;
}

}  // namespace

HermitianMatrix weyl_quadratic(const QuadraticForm& q, int cutoff) {
  const int n = q.n();
  // Two extra degrees make every product of two ladder operators exact on
  // the requested block.
  const FockBasis wide(n, cutoff + 2);
  const Eigen::Index keep = wide.count_up_to_degree(cutoff);
  const double r2 = 1.0 / std::sqrt(2.0);
  const Complex i_unit(0.0, 1.0);

  std::vector<CMatrix> coords;
  coords.reserve(static_cast<std::size_t>(2 * n));
  std::vector<CMatrix> ladders;
  for (int j = 0; j < n; ++j) ladders.push_back(annihilation(wide, j));
  for (int j = 0; j < n; ++j) coords.push_back((ladders[j] + ladders[j].adjoint()) * r2);
  for (int j = 0; j < n; ++j) coords.push_back((ladders[j].adjoint() - ladders[j]) * (i_unit * r2));

  CMatrix op = CMatrix::Zero(wide.size(), wide.size());
  for (int i = 0; i < 2 * n; ++i) {
    for (int k = 0; k < 2 * n; ++k) {
      const double m = q.matrix()(i, k);
      if (m == 0.0) continue;
      op += (0.5 * m) * (coords[i] * coords[k] + coords[k] * coords[i]);
    }
  }
  return HermitianMatrix(CMatrix(op.topLeftCorner(keep, keep)));
}

WeylComparison weyl_compare(const QuadraticForm& q, int cutoff, double tol) {
  if (cutoff < 2) throw std::invalid_argument("weyl_compare needs cutoff >= 2");
  const int n = q.n();
  const FockBasis basis(n, cutoff);

  // Calibration on the harmonic form sum |z_j|^2 (M = identity): fit
  // T = s^2 W + c_h on the first two diagonal entries.
  const QuadraticForm harmonic = QuadraticForm::identity(n);
  const HermitianMatrix t_h = toeplitz_flat(FlatSymbol::from_quadratic(harmonic), basis);
  const HermitianMatrix w_h = weyl_quadratic(harmonic, cutoff);
  const double s2 = (t_h(1, 1).real() - t_h(0, 0).real()) / (w_h(1, 1).real() - w_h(0, 0).real());
  const double c_h = t_h(0, 0).real() - s2 * w_h(0, 0).real();

  WeylComparison out;
  out.scaling = std::sqrt(s2);
  out.shift = c_h * q.trace() / harmonic.trace();

  RMatrix sigma = RMatrix::Zero(2 * n, 2 * n);
  sigma.topLeftCorner(n, n) = RMatrix::Identity(n, n) * out.scaling;
  sigma.bottomRightCorner(n, n) = -RMatrix::Identity(n, n) * out.scaling;
  const QuadraticForm pulled(n, sigma.transpose() * q.matrix() * sigma);

  const HermitianMatrix t = toeplitz_flat(FlatSymbol::from_quadratic(q), basis);
  const HermitianMatrix w = weyl_quadratic(pulled, cutoff);
  const Eigen::Index interior = basis.count_up_to_degree(cutoff - 2);
  for (Eigen::Index col = 0; col < interior; ++col) {
    for (Eigen::Index row = 0; row < interior; ++row) {
      const Complex expected = w(row, col) + (row == col ? out.shift : 0.0);
      const double d = std::abs(t(row, col) - expected);
      if (d > out.deviation) {
        out.deviation = d;
        out.worst_row = row;
        out.worst_col = col;
      }
    }
  }
  out.passed = out.deviation <= tol;
  return out;
}

}  // namespace semiwell
