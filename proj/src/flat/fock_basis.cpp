#include "semiwell/flat_model.hpp"

namespace semiwell {

namespace {

// All multi-indices of length n and total degree d, first component descending.
void enumerate_degree(int n, int d, MultiIndex& prefix, std::vector<MultiIndex>& out) {
  if (static_cast<int>(prefix.size()) == n - 1) {
    prefix.push_back(d);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = d; v >= 0; --v) {
    prefix.push_back(v);
    enumerate_degree(n, d - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

FockBasis::FockBasis(int n, int cutoff) : n_(n), cutoff_(cutoff) {
  if (n < 1) throw std::invalid_argument("Fock basis needs n >= 1");
  if (cutoff < 0) throw std::invalid_argument("Fock basis cutoff must be nonnegative");
  MultiIndex prefix;
  for (int d = 0; d <= cutoff; ++d) enumerate_degree(n, d, prefix, indices_);
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    lookup_.emplace(indices_[i], static_cast<Eigen::Index>(i));
  }
}

Eigen::Index FockBasis::index_of(const MultiIndex& nu) const {
  auto it = lookup_.find(nu);
  return it == lookup_.end() ? -1 : it->second;
}

Eigen::Index FockBasis::count_up_to_degree(int d) const {
  Eigen::Index count = 0;
  for (const auto& nu : indices_) {
    if (total_degree(nu) > d) break;
    ++count;
  }
  return count;
}

}  // namespace semiwell
