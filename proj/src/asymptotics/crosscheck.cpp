#include "semiwell/asymptotics.hpp"

#include <cmath>
#include <sstream>

namespace semiwell {

CrosscheckReport perturbation_crosscheck(const FlatSymbol& q, const FlatSymbol& r3,
                                         const FlatSymbol& r4, const std::vector<int>& n_list,
                                         int cutoff) {
  if (n_list.empty()) throw std::invalid_argument("empty N list");
  const FockBasis basis(q.n(), cutoff);
  CrosscheckReport report;
  report.expansion = perturbation_expansion(q, r3, r4, basis);
  report.warnings = report.expansion.warnings;

  const CMatrix tq = toeplitz_flat(q, basis).entries();
  const CMatrix t3 = toeplitz_flat(r3, basis).entries();
  const CMatrix t4 = toeplitz_flat(r4, basis).entries();
  const PerturbationResult& pe = report.expansion;

  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const int big_n = n_list[i];
    if (big_n < 1) throw std::invalid_argument("N values must be positive");
    if (i > 0 && big_n <= n_list[i - 1]) throw std::invalid_argument("N list must be strictly ascending");
    const double n = big_n;
    const HermitianMatrix scaled(CMatrix(tq + t3 / std::sqrt(n) + t4 / n));
    const double bottom = eig_hermitian(scaled, false).values.front();
    CrosscheckRow row;
    row.big_n = big_n;
    row.scaled_bottom = bottom;
    row.predicted = pe.lambda0 + pe.lambda2 / n;
    row.residual = std::abs(bottom - row.predicted);
    row.lambda2_estimate = n * (bottom - pe.lambda0);
    report.rows.push_back(row);
  }

  bool ok = true;
  std::ostringstream reasons;
  for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
    const CrosscheckRow& a = report.rows[i];
    const CrosscheckRow& b = report.rows[i + 1];
    if (b.residual <= report.round_off_floor) {
      report.log_ratios.push_back(INFINITY);
      continue;
    }
    const double ratio = std::log(a.residual / b.residual) / std::log(static_cast<double>(b.big_n) / a.big_n);
    report.log_ratios.push_back(ratio);
    if (!(ratio >= report.required_order)) {
      ok = false;
      reasons << "residual order " << ratio << " < " << report.required_order << " between N = "
              << a.big_n << " and " << b.big_n << "; ";
    }
  }
  report.verdict = ok ? Verdict::Pass : Verdict::Fail;
  report.reason = ok ? "residual decays at least like N^{-3/2}" : reasons.str();
  return report;
}

}  // namespace semiwell
