#include "semiwell/flat_model.hpp"

#include <cmath>
#include <sstream>

namespace semiwell {

namespace {

// (nu+a)! / sqrt(mu! nu!) for a single coordinate, with mu = nu + a - b >= 0.
// Written as sqrt((nu+a)!/mu!) * sqrt((nu+a)!/nu!), both short products.
double monomial_coefficient(int nu, int a, int mu) {
  const int top = nu + a;
  double ratio_mu = 1.0;
  for (int k = mu + 1; k <= top; ++k) ratio_mu *= k;
  double ratio_nu = 1.0;
  for (int k = nu + 1; k <= top; ++k) ratio_nu *= k;
  return std::sqrt(ratio_mu) * std::sqrt(ratio_nu);
}

void require_real(const FlatSymbol& h) {
  const double defect = h.reality_defect();
  if (defect > 1e-12) {
    std::ostringstream os;
    os << "flat symbol is not real-valued: Hermitian-symmetry defect " << defect;
    throw NonRealSymbolError(os.str());
  }
}

// Visits every nonzero (row, col, base coefficient) of T(z^a zbar^b).
template <typename Visit>
void for_each_entry(const MultiIndex& a, const MultiIndex& b, const FockBasis& basis, Visit&& visit) {
  const int n = basis.n();
  MultiIndex mu(static_cast<std::size_t>(n));
  for (Eigen::Index col = 0; col < basis.size(); ++col) {
    const MultiIndex& nu = basis[col];
    bool inside = true;
    for (int j = 0; j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      mu[uj] = nu[uj] + a[uj] - b[uj];
      if (mu[uj] < 0) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    const Eigen::Index row = basis.index_of(mu);
    if (row < 0) continue;
    visit(row, col, nu, mu);
  }
}

}  // namespace

HermitianMatrix toeplitz_flat(const FlatSymbol& h, const FockBasis& basis) {
  if (h.n() != basis.n()) throw std::invalid_argument("symbol and basis dimensions differ");
  require_real(h);
  CMatrix t = CMatrix::Zero(basis.size(), basis.size());
  for (const auto& [key, c] : h.terms()) {
    const auto& [a, b] = key;
    for_each_entry(a, b, basis, [&](Eigen::Index row, Eigen::Index col, const MultiIndex& nu,
                                    const MultiIndex& mu) {
      double w = 1.0;
      for (std::size_t j = 0; j < nu.size(); ++j) w *= monomial_coefficient(nu[j], a[j], mu[j]);
      t(row, col) += c * w;
    });
  }
  return HermitianMatrix(std::move(t));
}

HermitianMatrix toeplitz_flat_scaled(const FlatSymbol& h, const FockBasis& basis, int big_n) {
  if (big_n < 1) throw std::invalid_argument("N must be positive");
  if (h.n() != basis.n()) throw std::invalid_argument("symbol and basis dimensions differ");
  require_real(h);
  const int n = basis.n();
  const double nn = static_cast<double>(big_n);
  CMatrix t = CMatrix::Zero(basis.size(), basis.size());
  for (const auto& [key, c] : h.terms()) {
    const auto& [a, b] = key;
    for_each_entry(a, b, basis, [&](Eigen::Index row, Eigen::Index col, const MultiIndex& nu,
                                    const MultiIndex& mu) {
      // int zbar^mu z^{nu+a} zbar^b e^{-N|z|^2} = pi^n (nu+a)! N^{-(|nu+a|+n)}
      // ||z^nu e^{-N|z|^2/2}||^2 = pi^n nu! N^{-(|nu|+n)}
      double w = 1.0;
      for (std::size_t j = 0; j < nu.size(); ++j) w *= monomial_coefficient(nu[j], a[j], mu[j]);
      const int twice_exponent = (total_degree(mu) + n) + (total_degree(nu) + n) -
                                 2 * (total_degree(nu) + total_degree(a) + n);
      t(row, col) += c * w * std::pow(nn, 0.5 * twice_exponent);
    });
  }
  return HermitianMatrix(std::move(t));
}

}  // namespace semiwell
