#include "semiwell/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace semiwell {

namespace {

std::string pd_message(double smallest) {
  std::ostringstream os;
  os << "quadratic form is not positive definite: smallest eigenvalue " << smallest;
  return os.str();
}

}  // namespace

NotPositiveDefiniteError::NotPositiveDefiniteError(double smallest_eigenvalue)
    : std::invalid_argument(pd_message(smallest_eigenvalue)), smallest_(smallest_eigenvalue) {}

QuadraticForm::QuadraticForm(int n, RMatrix m) : n_(n), m_(std::move(m)) {
  if (n < 1) throw std::invalid_argument("quadratic form needs n >= 1");
  if (m_.rows() != 2 * n || m_.cols() != 2 * n) {
    throw std::invalid_argument("quadratic form matrix must be 2n x 2n");
  }
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() > kHermitianTol * scale) {
    throw std::invalid_argument("quadratic form matrix is not symmetric");
  }
  m_ = (m_ + m_.transpose()) * 0.5;
}

QuadraticForm QuadraticForm::diag1(double alpha, double beta) {
  RMatrix m = RMatrix::Zero(2, 2);
  m(0, 0) = alpha;
  m(1, 1) = beta;
  return QuadraticForm(1, m);
}

QuadraticForm QuadraticForm::identity(int n) { return QuadraticForm(n, RMatrix::Identity(2 * n, 2 * n)); }

double QuadraticForm::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(m_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

RMatrix symplectic_j(int n) {
  RMatrix j = RMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -RMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = RMatrix::Identity(n, n);
  return j;
}

std::vector<double> symplectic_spectrum(const QuadraticForm& form) {
  Eigen::SelfAdjointEigenSolver<RMatrix> msolver(form.matrix());
  const RVector& mvals = msolver.eigenvalues();
  if (!(mvals(0) > 0.0)) throw NotPositiveDefiniteError(mvals(0));

  const RMatrix sqrt_m =
      msolver.eigenvectors() * mvals.cwiseSqrt().asDiagonal() * msolver.eigenvectors().transpose();
  const RMatrix k = sqrt_m * symplectic_j(form.n()) * sqrt_m;
  const RMatrix ktk = k.transpose() * k;

  Eigen::SelfAdjointEigenSolver<RMatrix> ksolver((ktk + ktk.transpose()) * 0.5,
                                                 Eigen::EigenvaluesOnly);
  const RVector& sq = ksolver.eigenvalues();
  // Eigenvalues of K^T K come in equal pairs; keep one of each.
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(form.n()));
  for (int j = 0; j < form.n(); ++j) {
    const double pair_mean = 0.5 * (sq(2 * j) + sq(2 * j + 1));
    out.push_back(std::sqrt(std::max(0.0, pair_mean)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace semiwell
