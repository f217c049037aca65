#pragma once

#include <cmath>
#include <vector>

namespace semiwell::detail {

// Precomputed 0.5 * log((N+1) C(N,k)) for fast spin amplitude evaluation.
class SpinTable {
 public:
  explicit SpinTable(int big_n) : big_n_(big_n), half_log_norm_(static_cast<std::size_t>(big_n + 1)) {
    const double log_prefactor = std::log(big_n + 1.0) + std::lgamma(big_n + 1.0);
    for (int k = 0; k <= big_n; ++k) {
      half_log_norm_[static_cast<std::size_t>(k)] =
          0.5 * (log_prefactor - std::lgamma(k + 1.0) - std::lgamma(big_n - k + 1.0));
    }
  }

  int level() const { return big_n_; }

  // f_k(u) = sqrt((N+1) C(N,k)) ((1+u)/2)^{(N-k)/2} ((1-u)/2)^{k/2}
  void amplitudes(double u, std::vector<double>& f) const {
    f.resize(static_cast<std::size_t>(big_n_ + 1));
    const double cos2 = 0.5 * (1.0 + u);
    const double sin2 = 0.5 * (1.0 - u);
    const double half_log_cos2 = cos2 > 0.0 ? 0.5 * std::log(cos2) : 0.0;
    const double half_log_sin2 = sin2 > 0.0 ? 0.5 * std::log(sin2) : 0.0;
    for (int k = 0; k <= big_n_; ++k) {
      const int down = big_n_ - k;
      if ((down > 0 && cos2 <= 0.0) || (k > 0 && sin2 <= 0.0)) {
        f[static_cast<std::size_t>(k)] = 0.0;
        continue;
      }
      f[static_cast<std::size_t>(k)] = std::exp(half_log_norm_[static_cast<std::size_t>(k)] +
                                                down * half_log_cos2 + k * half_log_sin2);
    }
  }

 private:
  int big_n_;
  std::vector<double> half_log_norm_;
};

}  // namespace semiwell::detail
