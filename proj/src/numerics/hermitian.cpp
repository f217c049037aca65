#include "semiwell/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace semiwell {

namespace {

std::string asymmetry_message(double value, Eigen::Index row, Eigen::Index col) {
  std::ostringstream os;
  os << "matrix is not Hermitian: max |A(i,j) - conj(A(j,i))| = " << value << " at (" << row
     << ", " << col << ")";
  return os.str();
}

}  // namespace

NotHermitianError::NotHermitianError(double max_asymmetry, Eigen::Index row, Eigen::Index col)
    : std::invalid_argument(asymmetry_message(max_asymmetry, row, col)),
      max_asymmetry_(max_asymmetry) {}

Asymmetry max_asymmetry(const CMatrix& a) {
  Asymmetry out;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      const double d = std::abs(a(i, j) - std::conj(a(j, i)));
      if (d > out.value) out = {d, i, j};
    }
  }
  return out;
}

HermitianMatrix::HermitianMatrix(CMatrix entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) {
    throw std::invalid_argument("Hermitian matrix must be square with dim >= 1");
  }
  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  const Asymmetry asym = max_asymmetry(entries);
  if (asym.value > kHermitianTol * scale) throw NotHermitianError(asym.value, asym.row, asym.col);
  m_ = (entries + entries.adjoint()) * 0.5;
}

HermitianMatrix::HermitianMatrix(const RMatrix& entries)
    : HermitianMatrix(CMatrix(entries.cast<Complex>())) {}

HermitianMatrix HermitianMatrix::zero(Eigen::Index dim) {
  return HermitianMatrix(CMatrix(CMatrix::Zero(dim, dim)));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& diag) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(diag.size()),
                            static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag[i];
  }
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("dimension mismatch in matrix sum");
  return HermitianMatrix(CMatrix(m_ + other.m_));
}

HermitianMatrix HermitianMatrix::operator*(double s) const { return HermitianMatrix(CMatrix(m_ * s)); }

EigenDecomposition eig_hermitian(const HermitianMatrix& a, bool want_vectors) {
  // Eigen's tridiagonal QR is single threaded and runs in a fixed order.
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(
      a.entries(), want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigensolver did not converge");
  }
  EigenDecomposition out;
  const RVector& vals = solver.eigenvalues();
  out.values.assign(vals.data(), vals.data() + vals.size());
  if (want_vectors) out.vectors = solver.eigenvectors();
  return out;
}

}  // namespace semiwell
