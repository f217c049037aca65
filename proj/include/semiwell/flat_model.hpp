// Bargmann-space model over C^n.
//
// Convention: weight e^{-N|z|^2}, Lebesgue measure dx dy on C^n = R^{2n},
// symbols written as functions of (x, y) or of (z, zbar). The orthonormal
// basis of the N = 1 space is
//
//     e_nu(z) = z^nu e^{-|z|^2/2} / sqrt(pi^n nu!),
//
// and the Toeplitz operator of z^a zbar^b has matrix entries
//
//     <e_mu, T(z^a zbar^b) e_nu> = (nu+a)! / sqrt(mu! nu!)   if mu = nu + a - b,
//
// zero otherwise (factorials taken componentwise). In this convention
// T_1(|z|^2) = diag(k + 1), and the bottom of T_1(alpha x^2 + beta y^2) is
// (sqrt(alpha) + sqrt(beta))^2 / 4.
#pragma once

#include "semiwell/numerics.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace semiwell {

using MultiIndex = std::vector<int>;

/// Real polynomial on C^n stored as coefficients of z^a zbar^b. Realness is
/// the Hermitian symmetry c(a, b) = conj(c(b, a)).
class FlatSymbol {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;

  explicit FlatSymbol(int n);

  /// Adds c z^a zbar^b (accumulates onto an existing coefficient).
  FlatSymbol& add_term(const MultiIndex& a, const MultiIndex& b, Complex c);

  /// Adds c (z^a zbar^b + z^b zbar^a) for real c, the usual way to write a
  /// real symbol term by term.
  FlatSymbol& add_real_pair(const MultiIndex& a, const MultiIndex& b, double c);

  static FlatSymbol from_quadratic(const QuadraticForm& q);

  /// |z_1|^2 + ... + |z_n|^2.
  static FlatSymbol harmonic(int n);

  int n() const { return n_; }
  int degree() const;
  const std::map<Key, Complex>& terms() const { return terms_; }

  /// Largest |c(a, b) - conj(c(b, a))|.
  double reality_defect() const;
  bool is_real(double tol = 1e-12) const { return reality_defect() <= tol; }

  Complex evaluate(const std::vector<Complex>& z) const;

  FlatSymbol operator+(const FlatSymbol& other) const;
  FlatSymbol operator*(double s) const;

 private:
  int n_;
  std::map<Key, Complex> terms_;
};

class NonRealSymbolError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multi-indices nu in N^n with |nu| <= cutoff, ordered by total degree and
/// then lexicographically descending within a degree. Index 0 is nu = 0.
class FockBasis {
 public:
  FockBasis(int n, int cutoff);

  int n() const { return n_; }
  int cutoff() const { return cutoff_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(indices_.size()); }
  const MultiIndex& operator[](Eigen::Index i) const { return indices_[static_cast<std::size_t>(i)]; }

  /// -1 when nu lies outside the truncation.
  Eigen::Index index_of(const MultiIndex& nu) const;

  /// Number of basis elements with total degree <= d.
  Eigen::Index count_up_to_degree(int d) const;

 private:
  int n_;
  int cutoff_;
  std::vector<MultiIndex> indices_;
  std::map<MultiIndex, Eigen::Index> lookup_;
};

int total_degree(const MultiIndex& nu);

/// Bargmann projector kernel (N/pi)^n exp(-N|x|^2/2 - N|y|^2/2 + N x . conj(y)).
Complex bargmann_kernel(const std::vector<Complex>& x, const std::vector<Complex>& y, int big_n);

/// Normalized basis function e_nu of the N = 1 space evaluated at z.
Complex fock_basis_function(const MultiIndex& nu, const std::vector<Complex>& z);

/// Matrix of T_1(h) on the truncated basis.
HermitianMatrix toeplitz_flat(const FlatSymbol& h, const FockBasis& basis);

/// Matrix of T_N(h) on the N-scaled orthonormal basis of the space with
/// weight e^{-N|z|^2}, assembled from Gaussian moments with explicit powers
/// of N. For homogeneous h of degree d this equals N^{-d/2} toeplitz_flat.
HermitianMatrix toeplitz_flat_scaled(const FlatSymbol& h, const FockBasis& basis, int big_n);

/// Infinite-dimensional bottom eigenvalue of T_1(q): half the sum of the
/// symplectic eigenvalues plus tr(M)/4.
double mu_toeplitz(const QuadraticForm& q);

/// The value under the other symplectic-form normalization, (sqrt(alpha)+sqrt(beta))^2/2 differs from
/// mu_toeplitz by exactly this factor for n = 1 diagonal forms.
inline constexpr double kSymplecticFormConventionFactor = 2.0;

/// First `count` eigenvalues (with multiplicity) of T_1(q):
/// sum_j (k_j + 1/2) lambda_j + tr(M)/4 over k in N^n.
std::vector<double> model_spectrum(const QuadraticForm& q, int count);

/// Weyl quantization (hbar = 1) of q on the Hermite product basis with total
/// index <= cutoff; x_j acts as position X_j and y_j as momentum P_j, with
/// X = (a + a^dag)/sqrt 2 and P = i(a^dag - a)/sqrt 2.
HermitianMatrix weyl_quadratic(const QuadraticForm& q, int cutoff);

struct WeylComparison {
  double scaling = 0.0;  // s in q o Sigma_s
  double shift = 0.0;    // c in T_1(q) = Op_W(q o Sigma_s) + c
  double deviation = 0.0;
  Eigen::Index worst_row = 0;
  Eigen::Index worst_col = 0;
  bool passed = false;
};

/// Compares T_1(q) with Op_W(q o Sigma_s) + c on the interior block
/// (total index <= cutoff - 2) under e_m <-> Hermite_m. (s, c) are calibrated
/// on the harmonic form; Sigma_s maps (x, y) to (s x, -s y), the reflection
/// coming from z = x + iy <-> (X - iP)/sqrt 2.
WeylComparison weyl_compare(const QuadraticForm& q, int cutoff, double tol = 1e-8);

struct BargmannTransformReport {
  double diagonal_deviation = 0.0;  // max_m | |<e_m, B psi_m>| - 1 |
  double off_diagonal_max = 0.0;    // max_{k != m} |<e_k, B psi_m>|
  double grid_change = 0.0;         // difference between fine and coarse grids
};

/// Evaluates the integral Bargmann transform (normalized to be unitary) of
/// Hermite functions psi_0..psi_{m_max} on a grid and projects onto e_k.
BargmannTransformReport bargmann_transform_check(int m_max);

/// max over |z| <= z_radius sample points and nu <= nu_max of
/// |int_{|w| <= disk_radius} Pi_1(z, w) e_nu(w) dw - e_nu(z)| for n = 1.
double reproducing_check(int nu_max, double disk_radius = 8.0);

/// Coefficient mass of a state on the two highest degrees of the truncation.
double tail_mass(const QuantumState& state, const FockBasis& basis);

/// Smallest cutoff (searched upward from 8 in steps of 4, up to max_cutoff)
/// whose ground state of T_1(h) has tail mass < 1e-12.
int default_cutoff(const FlatSymbol& h, int max_cutoff);

class DegenerateLevelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PerturbationResult {
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  QuantumState u0;
  QuantumState u1;
  double tail = 0.0;
  std::vector<std::string> warnings;

  /// lambda(N) = N^{-1} (lambda0 + N^{-1} lambda2).
  double predicted_eigenvalue(double big_n) const { return (lambda0 + lambda2 / big_n) / big_n; }
};

/// Eigenvalue recursion for h = q + r3 + r4 on the truncated flat space, in
/// the scaling where T_N(h) ~ N^{-1}(T(q) + N^{-1/2} T(r3) + N^{-1} T(r4)).
/// Throws DegenerateLevelError when the bottom of T(q) is not simple.
PerturbationResult perturbation_expansion(const FlatSymbol& q, const FlatSymbol& r3,
                                          const FlatSymbol& r4, const FockBasis& basis);

struct DegenerateBranch {
  QuantumState vector;
  double b = 0.0;
};

/// First-order splitting of a degenerate level of T(q) by T(r3): the basis of
/// the eigenspace diagonalizing the compression of T(r3), and its diagonal.
/// `level_indices` are positions in the ascending spectrum of T(q) and must
/// cover the whole eigenspace.
std::vector<DegenerateBranch> degenerate_first_order(const FlatSymbol& q, const FlatSymbol& r3,
                                                     const FockBasis& basis,
                                                     const std::vector<int>& level_indices);

}  // namespace semiwell
