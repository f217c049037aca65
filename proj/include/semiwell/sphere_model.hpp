// Spin Toeplitz quantization on CP^1 = S^2.
//
// The quantum space at level N has the orthonormal basis
//
//     psi_k = sqrt((N+1) C(N,k)) cos(theta/2)^{N-k} sin(theta/2)^k e^{i k phi},
//
// k = 0..N, with respect to the normalized area measure dOmega / 4pi. In the
// affine chart z = tan(theta/2) e^{i phi} (north pole Z = +1 at z = 0) this is
// sqrt(C(N,k)) z^k (1+|z|^2)^{-N/2} up to the common constant.
#pragma once

#include "semiwell/numerics.hpp"

#include <Eigen/Dense>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiwell {

using SpherePoint = Eigen::Vector3d;
using Rotation = Eigen::Matrix3d;

SpherePoint north_pole();
SpherePoint south_pole();

/// Real polynomial in the ambient coordinates (X, Y, Z), restricted to S^2.
class SphereSymbol {
 public:
  using Exponents = std::array<int, 3>;

  SphereSymbol() = default;

  SphereSymbol& add_term(int i, int j, int k, double c);

  static SphereSymbol constant(double c);
  static SphereSymbol coordinate(int axis);  // 0 -> X, 1 -> Y, 2 -> Z

  const std::map<Exponents, double>& terms() const { return terms_; }
  int degree() const;
  double evaluate(const SpherePoint& p) const;

  SphereSymbol operator+(const SphereSymbol& other) const;
  SphereSymbol operator-(const SphereSymbol& other) const;
  SphereSymbol operator*(const SphereSymbol& other) const;
  SphereSymbol operator*(double s) const;

  /// Exact equality of coefficient maps after dropping zeros.
  bool same_coefficients(const SphereSymbol& other, double tol = 0.0) const;

 private:
  std::map<Exponents, double> terms_;
};

/// 1 - Z^2: two symmetric wells at the poles.
SphereSymbol symmetric_double_well();
/// X^2 + 4Y^2 + (1 - Z)(X^2 + Y^2): wells at both poles with mu = 9 (north)
/// and mu = (sqrt 12 + sqrt 24)^2 / 4 (south).
SphereSymbol asymmetric_double_well();

class NotRotationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_rotation(const Rotation& r);

/// h'(X, Y, Z) = h(R (X, Y, Z)), by exact polynomial substitution.
SphereSymbol rotate_symbol(const SphereSymbol& h, const Rotation& r);

/// A rotation taking the north pole to p (Rodrigues about north x p; the
/// half turn about the X axis when p is the south pole).
Rotation rotation_north_to(const SpherePoint& p);

/// Spin basis amplitudes f_k(u), k = 0..N, so that psi_k = f_k(u) e^{i k phi}.
std::vector<double> spin_amplitudes(int big_n, double u);

/// Matrix of T_N(h) (size N+1), by the product rule exact for the integrand.
HermitianMatrix toeplitz_sphere(const SphereSymbol& h, int big_n);

/// Coherent-state (Husimi) density of a spin state at sphere points, with
/// respect to the normalized area measure (integrates to 1 for unit states).
std::vector<double> husimi(const QuantumState& state, const std::vector<SpherePoint>& points);

/// Sphere integral of the Husimi density, by the exact product rule.
double husimi_total(const QuantumState& state);

/// Husimi mass inside the geodesic cap of radius r around `center`, r in
/// (0, pi]. Exact: the integral runs in polar coordinates about the center.
double cap_mass(const QuantumState& state, const SpherePoint& center, double radius);

struct Well {
  SpherePoint point;
  QuadraticForm hessian;  // n = 1, chart coordinates (x, y)
  double mu = 0.0;
};

class WellError : public std::invalid_argument {
 public:
  enum class Kind { NotAWell, Degenerate };
  WellError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Rotates p to the north pole and reads the 2-jet of h in the chart
/// X = 2x, Y = 2y, Z = 1 - 2(x^2 + y^2).
Well well_hessian(const SphereSymbol& h, const SpherePoint& p);

struct WellSet {
  std::vector<Well> wells;        // sorted by mu ascending
  bool resonant = false;          // some pair of mu values tie within 1e-9
  std::vector<int> minimal;       // indices (into wells) attaining min mu
};

class CandidateError : public std::invalid_argument {
 public:
  CandidateError(std::size_t index, const std::string& what)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

inline constexpr double kResonanceTol = 1e-9;

/// Minimum of h on a dense product grid (used for the h >= 0 check).
double grid_minimum(const SphereSymbol& h);

/// Validates user-declared wells. Throws std::invalid_argument when h is
/// negative somewhere on the grid, CandidateError for a failing candidate.
WellSet find_wells(const SphereSymbol& h, const std::vector<SpherePoint>& candidates);

}  // namespace semiwell
