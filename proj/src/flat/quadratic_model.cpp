#include "semiwell/flat_model.hpp"

#include <numeric>
#include <queue>
#include <set>

namespace semiwell {

double mu_toeplitz(const QuadraticForm& q) {
  const std::vector<double> lambdas = symplectic_spectrum(q);
  return 0.5 * std::accumulate(lambdas.begin(), lambdas.end(), 0.0) + 0.25 * q.trace();
}

std::vector<double> model_spectrum(const QuadraticForm& q, int count) {
  if (count < 0) throw std::invalid_argument("count must be nonnegative");
  const std::vector<double> lambdas = symplectic_spectrum(q);
  const double base = mu_toeplitz(q);
  const int n = q.n();

  auto level = [&](const MultiIndex& k) {
    double e = base;
    for (int j = 0; j < n; ++j) e += k[static_cast<std::size_t>(j)] * lambdas[static_cast<std::size_t>(j)];
    return e;
  };

  // Best-first walk over occupation numbers; every lambda_j > 0 so the
  // levels come out in ascending order.
  using Entry = std::pair<double, MultiIndex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::set<MultiIndex> seen;
  const MultiIndex origin(static_cast<std::size_t>(n), 0);
  frontier.emplace(level(origin), origin);
  seen.insert(origin);

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    auto [e, k] = frontier.top();
    frontier.pop();
    out.push_back(e);
    for (int j = 0; j < n; ++j) {
      MultiIndex next = k;
      ++next[static_cast<std::size_t>(j)];
      if (seen.insert(next).second) frontier.emplace(level(next), next);
    }
  }
  return out;
}

}  // namespace semiwell
