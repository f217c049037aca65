#include "semiwell/asymptotics.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <sstream>

namespace semiwell {

FitResult fit_bottom(const std::vector<SweepRecord>& records, int offset) {
  if (records.size() < 4) throw std::invalid_argument("fit_bottom needs at least 4 records");
  const auto rows = static_cast<Eigen::Index>(records.size());
  RMatrix design(rows, 3);
  RVector rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const SweepRecord& rec = records[static_cast<std::size_t>(i)];
    if (rec.eigenvalues.empty()) throw std::invalid_argument("record without eigenvalues");
    const double m = static_cast<double>(rec.big_n + offset);
    if (!(m > 0.0)) throw std::invalid_argument("fit variable must be positive");
    design(i, 0) = 1.0;
    design(i, 1) = 1.0 / std::sqrt(m);
    design(i, 2) = 1.0 / m;
    rhs(i) = m * rec.eigenvalues.front();
  }

  Eigen::JacobiSVD<RMatrix> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& sv = svd.singularValues();
  FitResult out;
  out.offset = offset;
  out.condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  if (!(out.condition < 1e12)) {
    std::ostringstream os;
    os << "fit design matrix is ill-conditioned (condition number " << out.condition << ")";
    throw std::invalid_argument(os.str());
  }
  const RVector coeffs = svd.solve(rhs);
  out.a0 = coeffs(0);
  out.a_half = coeffs(1);
  out.a1 = coeffs(2);
  out.residual = (design * coeffs - rhs).norm();
  return out;
}

FitComparison compare_fits(const std::vector<SweepRecord>& records) {
  FitComparison out;
  out.in_n = fit_bottom(records, 0);
  out.in_n_plus_2 = fit_bottom(records, 2);
  out.n_plus_2_better = out.in_n_plus_2.residual < out.in_n.residual;
  return out;
}

}  // namespace semiwell
