#include "semiwell/quadrature.hpp"
#include "semiwell/sphere_model.hpp"

#include <cmath>
#include <numbers>

#include "spin_table.hpp"

namespace semiwell {

std::vector<double> spin_amplitudes(int big_n, double u) {
  if (big_n < 0) throw std::invalid_argument("N must be nonnegative");
  std::vector<double> f;
  detail::SpinTable(big_n).amplitudes(u, f);
  return f;
}

HermitianMatrix toeplitz_sphere(const SphereSymbol& h, int big_n) {
  if (big_n < 1) throw std::invalid_argument("N must be >= 1");
  const int d = h.degree();
  const int dim = big_n + 1;
  // psi_k conj * h * psi_l is a polynomial of degree <= N + d in u after the
  // azimuthal integral, with azimuthal frequencies |m| <= N + d.
  const QuadratureRule rule = gauss_legendre(big_n + d + 2);
  const int azimuthal = 2 * big_n + 2 * d + 2;

  std::vector<double> cos_phi(static_cast<std::size_t>(azimuthal));
  std::vector<double> sin_phi(static_cast<std::size_t>(azimuthal));
  for (int a = 0; a < azimuthal; ++a) {
    const double phi = 2.0 * std::numbers::pi * a / azimuthal;
    cos_phi[static_cast<std::size_t>(a)] = std::cos(phi);
    sin_phi[static_cast<std::size_t>(a)] = std::sin(phi);
  }

  const detail::SpinTable table(big_n);
  std::vector<double> f;
  CMatrix t = CMatrix::Zero(dim, dim);
  std::vector<Complex> fourier(static_cast<std::size_t>(2 * d + 1));
  for (std::size_t iu = 0; iu < rule.nodes.size(); ++iu) {
    const double u = rule.nodes[iu];
    const double st = std::sqrt(std::max(0.0, 1.0 - u * u));

    // hat h_m(u) = (1/2pi) int h e^{-i m phi} dphi for |m| <= d.
    std::fill(fourier.begin(), fourier.end(), Complex{});
    for (int a = 0; a < azimuthal; ++a) {
      const auto ua = static_cast<std::size_t>(a);
      const double value = h.evaluate({st * cos_phi[ua], st * sin_phi[ua], u});
      for (int m = -d; m <= d; ++m) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(m) * a / azimuthal;
        fourier[static_cast<std::size_t>(m + d)] += value * std::polar(1.0, angle);
      }
    }
    for (auto& c : fourier) c /= static_cast<double>(azimuthal);

    table.amplitudes(u, f);
    const double w = 0.5 * rule.weights[iu];
    for (int k = 0; k < dim; ++k) {
      for (int l = std::max(0, k - d); l <= std::min(big_n, k + d); ++l) {
        t(k, l) += w * f[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(l)] *
                   fourier[static_cast<std::size_t>(k - l + d)];
      }
    }
  }
  return HermitianMatrix(std::move(t));
}

}  // namespace semiwell
