#include "semiwell/flat_model.hpp"
#include "semiwell/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace semiwell {

namespace {

constexpr double kPi = std::numbers::pi;

double log_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

// Hermite functions psi_0..psi_{m_max} at x (orthonormal in L^2(R)).
std::vector<double> hermite_functions(int m_max, double x) {
  std::vector<double> psi(static_cast<std::size_t>(m_max + 1));
  psi[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  if (m_max >= 1) psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int m = 1; m < m_max; ++m) {
    const auto um = static_cast<std::size_t>(m);
    psi[um + 1] = std::sqrt(2.0 / (m + 1)) * x * psi[um] - std::sqrt(static_cast<double>(m) / (m + 1)) * psi[um - 1];
  }
  return psi;
}

// Overlaps <e_k, B psi_m> on a square grid [-extent, extent]^2 with step hz,
// transform integral on [-x_extent, x_extent] with step hx (trapezoid; the
// integrands are Gaussian so the rule converges spectrally).
CMatrix transform_overlaps(int m_max, double hz, double hx) {
  const double extent = 8.0;
  const double x_extent = 14.0;
  const int nz = static_cast<int>(std::lround(2.0 * extent / hz));
  const int nx = static_cast<int>(std::lround(2.0 * x_extent / hx));
  const double norm = std::pow(kPi, -0.75);  // makes B unitary for this measure

  std::vector<double> xs(static_cast<std::size_t>(nx + 1));
  std::vector<std::vector<double>> psi(static_cast<std::size_t>(nx + 1));
  for (int ix = 0; ix <= nx; ++ix) {
    xs[static_cast<std::size_t>(ix)] = -x_extent + ix * hx;
    psi[static_cast<std::size_t>(ix)] = hermite_functions(m_max, xs[static_cast<std::size_t>(ix)]);
  }

  const int dim = m_max + 1;
  CMatrix overlaps = CMatrix::Zero(dim, dim);
  std::vector<Complex> transformed(static_cast<std::size_t>(dim));
  for (int iu = 0; iu <= nz; ++iu) {
    for (int iv = 0; iv <= nz; ++iv) {
      const Complex z(-extent + iu * hz, -extent + iv * hz);
      std::fill(transformed.begin(), transformed.end(), Complex{});
      for (int ix = 0; ix <= nx; ++ix) {
        const double x = xs[static_cast<std::size_t>(ix)];
        const Complex kernel = std::exp(-(0.5 * z * z + 0.5 * x * x - std::sqrt(2.0) * z * x));
        const auto& p = psi[static_cast<std::size_t>(ix)];
        for (int m = 0; m < dim; ++m) transformed[static_cast<std::size_t>(m)] += kernel * p[static_cast<std::size_t>(m)];
      }
      const double gauss = std::exp(-0.5 * std::norm(z));
      for (int k = 0; k < dim; ++k) {
        const Complex ek = std::conj(fock_basis_function({k}, {z}));
        for (int m = 0; m < dim; ++m) {
          overlaps(k, m) += ek * transformed[static_cast<std::size_t>(m)] * (norm * gauss * hx);
        }
      }
    }
  }
  return overlaps * (hz * hz);
}

}  // namespace

Complex bargmann_kernel(const std::vector<Complex>& x, const std::vector<Complex>& y, int big_n) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("kernel points must share dimension n >= 1");
  if (big_n < 1) throw std::invalid_argument("N must be positive");
  const double nn = big_n;
  Complex exponent{};
  for (std::size_t j = 0; j < x.size(); ++j) {
    exponent += -0.5 * nn * std::norm(x[j]) - 0.5 * nn * std::norm(y[j]) + nn * x[j] * std::conj(y[j]);
  }
  return std::pow(nn / kPi, static_cast<double>(x.size())) * std::exp(exponent);
}

Complex fock_basis_function(const MultiIndex& nu, const std::vector<Complex>& z) {
  if (nu.size() != z.size()) throw std::invalid_argument("multi-index and point dimensions differ");
  Complex value = 1.0;
  double log_norm = 0.0;
  double r2 = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    value *= std::pow(z[j], nu[j]);
    log_norm += std::log(kPi) + log_factorial(nu[j]);
    r2 += std::norm(z[j]);
  }
  return value * std::exp(-0.5 * r2 - 0.5 * log_norm);
}

BargmannTransformReport bargmann_transform_check(int m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be nonnegative");
  const CMatrix fine = transform_overlaps(m_max, 0.1, 0.05);
  const CMatrix coarse = transform_overlaps(m_max, 0.2, 0.1);

  BargmannTransformReport report;
  report.grid_change = (fine - coarse).cwiseAbs().maxCoeff();
  if (report.grid_change > 1e-6) {
    std::ostringstream os;
    os << "Bargmann transform quadrature did not converge: overlaps moved by " << report.grid_change
       << " between grid steps (hz, hx) = (0.2, 0.1) and (0.1, 0.05) on [-8, 8]^2 x [-14, 14]";
    throw std::runtime_error(os.str());
  }
  for (int k = 0; k <= m_max; ++k) {
    for (int m = 0; m <= m_max; ++m) {
      const double a = std::abs(fine(k, m));
      if (k == m) {
        report.diagonal_deviation = std::max(report.diagonal_deviation, std::abs(a - 1.0));
      } else {
        report.off_diagonal_max = std::max(report.off_diagonal_max, a);
      }
    }
  }
  return report;
}

double reproducing_check(int nu_max, double disk_radius) {
  const QuadratureRule radial = gauss_legendre(160, 0.0, disk_radius);
  const int angles = 128;
  const std::vector<Complex> samples = {{0.0, 0.0}, {0.5, 0.3}, {-1.0, 1.0}, {0.0, 1.5}, {2.0, 0.0}};

  double worst = 0.0;
  for (const Complex& z : samples) {
    for (int nu = 0; nu <= nu_max; ++nu) {
      Complex integral{};
      for (std::size_t ir = 0; ir < radial.nodes.size(); ++ir) {
        const double r = radial.nodes[ir];
        Complex ring{};
        for (int ia = 0; ia < angles; ++ia) {
          const double theta = 2.0 * kPi * ia / angles;
          const Complex w = std::polar(r, theta);
          ring += bargmann_kernel({z}, {w}, 1) * fock_basis_function({nu}, {w});
        }
        integral += ring * (2.0 * kPi / angles) * r * radial.weights[ir];
      }
      worst = std::max(worst, std::abs(integral - fock_basis_function({nu}, {z})));
    }
  }
  return worst;
}

}  // namespace semiwell
