#include "semiwell/quadrature.hpp"
#include "semiwell/sphere_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spin_table.hpp"

namespace semiwell {

namespace {

int level_of(const QuantumState& state) {
  if (state.size() < 1) throw std::invalid_argument("empty spin state");
  if (!(state.norm() > 0.0)) throw std::invalid_argument("zero state has no Husimi density");
  return static_cast<int>(state.size()) - 1;
}

double density_at(const QuantumState& state, const detail::SpinTable& table, const SpherePoint& p,
                  std::vector<double>& f) {
  const double u = std::clamp(p.z() / p.norm(), -1.0, 1.0);
  const double phi = std::atan2(p.y(), p.x());
  table.amplitudes(u, f);
  // Horner in e^{i phi}.
  const Complex step = std::polar(1.0, phi);
  Complex amp{};
  for (int k = table.level(); k >= 0; --k) amp = amp * step + state(k) * f[static_cast<std::size_t>(k)];
  return std::norm(amp);
}

// Integral of the density over the cap {p : p . e3 >= cos_radius} in polar
// coordinates about e3; exact because the density is a polynomial of degree
// N in the ambient coordinates.
double polar_integral(const QuantumState& state, int big_n, const SpherePoint& e3, double cos_radius) {
  SpherePoint e1 = std::abs(e3.x()) < 0.9 ? SpherePoint(1.0, 0.0, 0.0) : SpherePoint(0.0, 1.0, 0.0);
  e1 = (e1 - e1.dot(e3) * e3).normalized();
  const SpherePoint e2 = e3.cross(e1);

  const QuadratureRule rule = gauss_legendre(big_n / 2 + 2, cos_radius, 1.0);
  const detail::SpinTable table(big_n);
  std::vector<double> f;
  const int azimuthal = 2 * big_n + 2;
  double total = 0.0;
  for (std::size_t iu = 0; iu < rule.nodes.size(); ++iu) {
    const double u = rule.nodes[iu];
    const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
    double ring = 0.0;
    for (int a = 0; a < azimuthal; ++a) {
      const double phi = 2.0 * std::numbers::pi * a / azimuthal;
      const SpherePoint p = u * e3 + st * (std::cos(phi) * e1 + std::sin(phi) * e2);
      ring += density_at(state, table, p, f);
    }
    total += 0.5 * rule.weights[iu] * ring / azimuthal;
  }
  return total;
}

}  // namespace

std::vector<double> husimi(const QuantumState& state, const std::vector<SpherePoint>& points) {
  const int big_n = level_of(state);
  const QuantumState unit = state / state.norm();
  const detail::SpinTable table(big_n);
  std::vector<double> f;
  std::vector<double> out;
  out.reserve(points.size());
  for (const SpherePoint& p : points) {
    if (!(p.norm() > 0.0)) throw std::invalid_argument("sphere point must be nonzero");
    out.push_back(density_at(unit, table, p, f));
  }
  return out;
}

double husimi_total(const QuantumState& state) {
  const int big_n = level_of(state);
  return polar_integral(state / state.norm(), big_n, north_pole(), -1.0);
}

double cap_mass(const QuantumState& state, const SpherePoint& center, double radius) {
  if (!(radius > 0.0 && radius < std::numbers::pi)) {
    std::ostringstream os;
    os << "cap radius " << radius << " outside (0, pi)";
    throw std::invalid_argument(os.str());
  }
  if (!(center.norm() > 0.0)) throw std::invalid_argument("cap center must be nonzero");
  const int big_n = level_of(state);
  return polar_integral(state / state.norm(), big_n, center.normalized(), std::cos(radius));
}

}  // namespace semiwell
