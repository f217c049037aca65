#include "semiwell/flat_model.hpp"
#include "semiwell/quadrature.hpp"
#include "semiwell/sphere_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace semiwell {

Well well_hessian(const SphereSymbol& h, const SpherePoint& p) {
  if (!(p.norm() > 0.0)) throw std::invalid_argument("well point must be nonzero");
  const SpherePoint point = p.normalized();
  const SphereSymbol local = rotate_symbol(h, rotation_north_to(point));

  // 2-jet in the chart X = 2x, Y = 2y, Z = 1 - 2(x^2 + y^2).
  double value = 0.0;
  double gx = 0.0;
  double gy = 0.0;
  double axx = 0.0;
  double axy = 0.0;
  double ayy = 0.0;
  for (const auto& [e, c] : local.terms()) {
    const int i = e[0];
    const int j = e[1];
    const int k = e[2];
    if (i == 0 && j == 0) {
      value += c;
      axx -= 2.0 * k * c;
      ayy -= 2.0 * k * c;
    } else if (i == 1 && j == 0) {
      gx += 2.0 * c;
    } else if (i == 0 && j == 1) {
      gy += 2.0 * c;
    } else if (i == 2 && j == 0) {
      axx += 4.0 * c;
    } else if (i == 1 && j == 1) {
      axy += 4.0 * c;
    } else if (i == 0 && j == 2) {
      ayy += 4.0 * c;
    }
  }

  // The chart stretches lengths by 2 at the pole.
  const double sphere_gradient = 0.5 * std::hypot(gx, gy);
  if (std::abs(value) > 1e-10 || sphere_gradient > 1e-8) {
    std::ostringstream os;
    os << "not a well: h = " << value << ", |grad h| = " << sphere_gradient << " at ("
       << point.x() << ", " << point.y() << ", " << point.z() << ")";
    throw WellError(WellError::Kind::NotAWell, os.str());
  }

  RMatrix m(2, 2);
  m << axx, 0.5 * axy, 0.5 * axy, ayy;
  QuadraticForm hessian(1, m);
  if (!hessian.is_positive_definite()) {
    std::ostringstream os;
    os << "degenerate well: Hessian smallest eigenvalue " << hessian.min_eigenvalue() << " at ("
       << point.x() << ", " << point.y() << ", " << point.z() << ")";
    throw WellError(WellError::Kind::Degenerate, os.str());
  }
  const double mu = mu_toeplitz(hessian);
  return Well{point, std::move(hessian), mu};
}

double grid_minimum(const SphereSymbol& h) {
  const QuadratureRule rule = gauss_legendre(96);
  const int azimuthal = 192;
  double lowest = std::min(h.evaluate(north_pole()), h.evaluate(south_pole()));
  for (double u : rule.nodes) {
    const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
    for (int a = 0; a < azimuthal; ++a) {
      const double phi = 2.0 * std::numbers::pi * a / azimuthal;
      lowest = std::min(lowest, h.evaluate({st * std::cos(phi), st * std::sin(phi), u}));
    }
  }
  return lowest;
}

WellSet find_wells(const SphereSymbol& h, const std::vector<SpherePoint>& candidates) {
  const double lowest = grid_minimum(h);
  if (lowest < -1e-10) {
    std::ostringstream os;
    os << "symbol takes negative values (grid minimum " << lowest << "); min(h) = 0 is required";
    throw std::invalid_argument(os.str());
  }

  WellSet out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    try {
      out.wells.push_back(well_hessian(h, candidates[i]));
    } catch (const std::invalid_argument& e) {
      std::ostringstream os;
      os << "candidate " << i << ": " << e.what();
      throw CandidateError(i, os.str());
    }
  }
  std::stable_sort(out.wells.begin(), out.wells.end(),
                   [](const Well& a, const Well& b) { return a.mu < b.mu; });
  for (std::size_t i = 0; i + 1 < out.wells.size(); ++i) {
    if (out.wells[i + 1].mu - out.wells[i].mu <= kResonanceTol) out.resonant = true;
  }
  for (std::size_t i = 0; i < out.wells.size(); ++i) {
    if (out.wells[i].mu - out.wells.front().mu <= kResonanceTol) out.minimal.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace semiwell
