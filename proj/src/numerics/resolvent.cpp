#include "semiwell/numerics.hpp"

#include <cmath>
#include <sstream>

namespace semiwell {

ReducedResolvent::ReducedResolvent(const HermitianMatrix& a, double lambda,
                                   const QuantumState& kernel_vector)
    : lambda_(lambda) {
  if (kernel_vector.size() != a.dim()) {
    throw std::invalid_argument("kernel vector length does not match matrix dimension");
  }
  const double knorm = kernel_vector.norm();
  if (!(knorm > 0.0)) throw std::invalid_argument("kernel vector is zero");
  kernel_ = kernel_vector / knorm;

  const double scale = std::max(1.0, a.norm());
  const double residual = (a.entries() * kernel_ - lambda * kernel_).norm();
  if (residual > kResidualTol * scale) {
    std::ostringstream os;
    os << "kernel vector is not an eigenvector for lambda = " << lambda << " (residual "
       << residual << ")";
    throw std::invalid_argument(os.str());
  }

  const EigenDecomposition eig = eig_hermitian(a, true);
  const CMatrix& v = *eig.vectors;
  // Drop the eigenvector with the largest overlap with the kernel direction.
  Eigen::Index kernel_col = 0;
  double best_overlap = -1.0;
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    const double overlap = std::abs(v.col(j).dot(kernel_));
    if (overlap > best_overlap) {
      best_overlap = overlap;
      kernel_col = j;
    }
  }
  vectors_.resize(a.dim(), a.dim() - 1);
  Eigen::Index c = 0;
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    if (j == kernel_col) continue;
    const double gap = eig.values[static_cast<std::size_t>(j)] - lambda;
    if (std::abs(gap) < kDegeneracyTol) {
      std::ostringstream os;
      os << "lambda = " << lambda << " is not simple: another eigenvalue at "
         << eig.values[static_cast<std::size_t>(j)];
      throw DegenerateEigenvalueError(os.str());
    }
    vectors_.col(c++) = v.col(j);
    inv_gaps_.push_back(1.0 / gap);
  }
}

QuantumState ReducedResolvent::apply(const QuantumState& w) const {
  if (w.size() != kernel_.size()) throw std::invalid_argument("state length mismatch");
  const double overlap = std::abs(kernel_.dot(w));
  if (overlap > 1e-10 * std::max(1.0, w.norm())) {
    throw std::invalid_argument("right-hand side is not orthogonal to the kernel vector");
  }
  CVector coeffs = vectors_.adjoint() * w;
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) coeffs(j) *= inv_gaps_[static_cast<std::size_t>(j)];
  return vectors_ * coeffs;
}

ReducedResolvent reduced_resolvent(const HermitianMatrix& a, double lambda,
                                   const QuantumState& kernel_vector) {
  return ReducedResolvent(a, lambda, kernel_vector);
}

}  // namespace semiwell
