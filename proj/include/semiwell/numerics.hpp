// Dense Hermitian linear algebra shared by the flat and sphere models.
//
// Everything here is deterministic: a given input matrix always produces the
// same eigenvalues and eigenvectors bit for bit, because the reduction runs
// single-threaded in a fixed order.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiwell {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Coefficient vector of a state over an orthonormal basis of the quantum
/// space (Fock basis for the flat model, spin basis for the sphere).
using QuantumState = CVector;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kResidualTol = 1e-9;
inline constexpr double kDegeneracyTol = 1e-8;

class NotHermitianError : public std::invalid_argument {
 public:
  NotHermitianError(double max_asymmetry, Eigen::Index row, Eigen::Index col);
  double max_asymmetry() const { return max_asymmetry_; }

 private:
  double max_asymmetry_;
};

/// Largest |A(i,j) - conj(A(j,i))| together with its location.
struct Asymmetry {
  double value = 0.0;
  Eigen::Index row = 0;
  Eigen::Index col = 0;
};
Asymmetry max_asymmetry(const CMatrix& a);

/// Square complex matrix that is Hermitian up to kHermitianTol (relative to
/// the largest entry when that exceeds one). The stored matrix is the exact
/// Hermitian part of the input.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(CMatrix entries);
  explicit HermitianMatrix(const RMatrix& entries);

  static HermitianMatrix zero(Eigen::Index dim);
  static HermitianMatrix diagonal(const std::vector<double>& diag);

  Eigen::Index dim() const { return m_.rows(); }
  const CMatrix& entries() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  /// Frobenius norm, used as the scale for residual contracts.
  double norm() const { return m_.norm(); }

  HermitianMatrix operator+(const HermitianMatrix& other) const;
  HermitianMatrix operator*(double s) const;

 private:
  CMatrix m_;
};

struct EigenDecomposition {
  std::vector<double> values;      // ascending
  std::optional<CMatrix> vectors;  // column j belongs to values[j]
};

EigenDecomposition eig_hermitian(const HermitianMatrix& a, bool want_vectors);

/// Standard symplectic matrix [[0, -I], [I, 0]] of size 2n.
RMatrix symplectic_j(int n);

/// Real symmetric 2n x 2n matrix M of the form q(w) = w^T M w, with w ordered
/// (x_1..x_n, y_1..y_n) for z_j = x_j + i y_j.
class QuadraticForm {
 public:
  QuadraticForm(int n, RMatrix m);

  /// q = alpha x^2 + beta y^2 on C.
  static QuadraticForm diag1(double alpha, double beta);
  static QuadraticForm identity(int n);

  int n() const { return n_; }
  const RMatrix& matrix() const { return m_; }
  double trace() const { return m_.trace(); }
  double operator()(const RVector& w) const { return w.dot(m_ * w); }

  double min_eigenvalue() const;
  bool is_positive_definite() const { return min_eigenvalue() > 0.0; }

 private:
  int n_;
  RMatrix m_;
};

class NotPositiveDefiniteError : public std::invalid_argument {
 public:
  explicit NotPositiveDefiniteError(double smallest_eigenvalue);
  double smallest_eigenvalue() const { return smallest_; }

 private:
  double smallest_;
};

/// Symplectic (Williamson) eigenvalues lambda_1 <= ... <= lambda_n of a
/// positive definite form: +-i lambda_j are the eigenvalues of J M. Computed
/// from the skew-symmetric K = M^{1/2} J M^{1/2}, whose square -K^2 = K^T K
/// is symmetric with each lambda_j^2 appearing twice.
std::vector<double> symplectic_spectrum(const QuadraticForm& form);

class DegenerateEigenvalueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (A - lambda)^{-1} restricted to the orthogonal complement of the kernel
/// vector of a simple eigenvalue lambda.
class ReducedResolvent {
 public:
  ReducedResolvent(const HermitianMatrix& a, double lambda, const QuantumState& kernel_vector);

  /// Solves (A - lambda) v = w with v orthogonal to the kernel vector.
  /// Throws std::invalid_argument when w is not orthogonal to it.
  QuantumState apply(const QuantumState& w) const;

  const QuantumState& kernel_vector() const { return kernel_; }
  double lambda() const { return lambda_; }

 private:
  double lambda_;
  QuantumState kernel_;
  CMatrix vectors_;            // eigenvectors other than the kernel direction
  std::vector<double> inv_gaps_;
};

ReducedResolvent reduced_resolvent(const HermitianMatrix& a, double lambda,
                                   const QuantumState& kernel_vector);

}  // namespace semiwell
