#include "semiwell/sphere_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace semiwell {

SpherePoint north_pole() { return {0.0, 0.0, 1.0}; }
SpherePoint south_pole() { return {0.0, 0.0, -1.0}; }

SphereSymbol& SphereSymbol::add_term(int i, int j, int k, double c) {
  if (i < 0 || j < 0 || k < 0) throw std::invalid_argument("negative exponent in sphere symbol");
  if (c == 0.0) return *this;
  const Exponents e{i, j, k};
  const double sum = (terms_[e] += c);
  if (sum == 0.0) terms_.erase(e);
  return *this;
}

SphereSymbol SphereSymbol::constant(double c) {
  SphereSymbol out;
  out.add_term(0, 0, 0, c);
  return out;
}

SphereSymbol SphereSymbol::coordinate(int axis) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0, 1 or 2");
  SphereSymbol out;
  out.add_term(axis == 0, axis == 1, axis == 2, 1.0);
  return out;
}

int SphereSymbol::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

double SphereSymbol::evaluate(const SpherePoint& p) const {
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    total += c * std::pow(p.x(), e[0]) * std::pow(p.y(), e[1]) * std::pow(p.z(), e[2]);
  }
  return total;
}

SphereSymbol SphereSymbol::operator+(const SphereSymbol& other) const {
  SphereSymbol out(*this);
  for (const auto& [e, c] : other.terms_) out.add_term(e[0], e[1], e[2], c);
  return out;
}

SphereSymbol SphereSymbol::operator-(const SphereSymbol& other) const { return *this + other * -1.0; }

SphereSymbol SphereSymbol::operator*(const SphereSymbol& other) const {
  SphereSymbol out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      out.add_term(e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], c1 * c2);
    }
  }
  return out;
}

SphereSymbol SphereSymbol::operator*(double s) const {
  SphereSymbol out;
  for (const auto& [e, c] : terms_) out.add_term(e[0], e[1], e[2], c * s);
  return out;
}

bool SphereSymbol::same_coefficients(const SphereSymbol& other, double tol) const {
  auto covered = [tol](const SphereSymbol& a, const SphereSymbol& b) {
    for (const auto& [e, c] : a.terms_) {
      auto it = b.terms_.find(e);
      const double cb = it == b.terms_.end() ? 0.0 : it->second;
      if (std::abs(c - cb) > tol) return false;
    }
    return true;
  };
  return covered(*this, other) && covered(other, *this);
}

SphereSymbol symmetric_double_well() {
  const SphereSymbol z = SphereSymbol::coordinate(2);
  return SphereSymbol::constant(1.0) - z * z;
}

SphereSymbol asymmetric_double_well() {
  const SphereSymbol x = SphereSymbol::coordinate(0);
  const SphereSymbol y = SphereSymbol::coordinate(1);
  const SphereSymbol z = SphereSymbol::coordinate(2);
  return x * x + y * y * 4.0 + (SphereSymbol::constant(1.0) - z) * (x * x + y * y);
}

void require_rotation(const Rotation& r) {
  const double orth = (r.transpose() * r - Rotation::Identity()).cwiseAbs().maxCoeff();
  const double det = r.determinant();
  if (orth > 1e-12 || std::abs(det - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "matrix is not a rotation: |R^T R - I| = " << orth << ", det = " << det;
    throw NotRotationError(os.str());
  }
}

SphereSymbol rotate_symbol(const SphereSymbol& h, const Rotation& r) {
  require_rotation(r);
  std::array<SphereSymbol, 3> images;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) images[a].add_term(b == 0, b == 1, b == 2, r(a, b));
  }
  // powers[a][p] = images[a]^p
  const int d = h.degree();
  std::array<std::vector<SphereSymbol>, 3> powers;
  for (int a = 0; a < 3; ++a) {
    powers[a].push_back(SphereSymbol::constant(1.0));
    for (int p = 1; p <= d; ++p) powers[a].push_back(powers[a].back() * images[a]);
  }
  SphereSymbol out;
  for (const auto& [e, c] : h.terms()) {
    out = out + powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]] * c;
  }
  return out;
}

Rotation rotation_north_to(const SpherePoint& p) {
  const double norm = p.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("cannot rotate to the zero vector");
  const SpherePoint target = p / norm;
  const Eigen::Vector3d axis = north_pole().cross(target);
  const double s = axis.norm();
  const double c = target.z();
  if (s < 1e-15) {
    if (c > 0.0) return Rotation::Identity();
    return Eigen::Vector3d(1.0, -1.0, -1.0).asDiagonal();
  }
  const Eigen::Vector3d k = axis / s;
  Rotation kx;
  kx << 0.0, -k.z(), k.y(), k.z(), 0.0, -k.x(), -k.y(), k.x(), 0.0;
  return Rotation::Identity() + s * kx + (1.0 - c) * kx * kx;
}

}  // namespace semiwell
