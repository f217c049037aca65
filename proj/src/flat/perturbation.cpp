#include "semiwell/flat_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace semiwell {

namespace {

// Rotates the global phase so the largest component is real and positive.
void fix_phase(QuantumState& v) {
  Eigen::Index big = 0;
  v.cwiseAbs().maxCoeff(&big);
  const Complex c = v(big);
  if (std::abs(c) > 0.0) v *= std::conj(c) / std::abs(c);
}

}  // namespace

double tail_mass(const QuantumState& state, const FockBasis& basis) {
  if (state.size() != basis.size()) throw std::invalid_argument("state length does not match basis");
  const double total = state.squaredNorm();
  if (!(total > 0.0)) return 0.0;
  double tail = 0.0;
  for (Eigen::Index i = basis.count_up_to_degree(basis.cutoff() - 2); i < basis.size(); ++i) {
    tail += std::norm(state(i));
  }
  return tail / total;
}

int default_cutoff(const FlatSymbol& h, int max_cutoff) {
  for (int d = 8; d <= max_cutoff; d += 4) {
    const FockBasis basis(h.n(), d);
    const EigenDecomposition eig = eig_hermitian(toeplitz_flat(h, basis), true);
    if (tail_mass(eig.vectors->col(0), basis) < 1e-12) return d;
  }
  return max_cutoff;
}

PerturbationResult perturbation_expansion(const FlatSymbol& q, const FlatSymbol& r3,
                                          const FlatSymbol& r4, const FockBasis& basis) {
  const HermitianMatrix tq = toeplitz_flat(q, basis);
  const HermitianMatrix t3 = toeplitz_flat(r3, basis);
  const HermitianMatrix t4 = toeplitz_flat(r4, basis);

  const EigenDecomposition eig = eig_hermitian(tq, true);
  if (eig.values.size() < 2 || eig.values[1] - eig.values[0] < kDegeneracyTol) {
    std::ostringstream os;
    os << "bottom eigenvalue " << eig.values[0]
       << " of the quadratic model is degenerate on this truncation; use degenerate_first_order";
    throw DegenerateLevelError(os.str());
  }

  PerturbationResult out;
  out.lambda0 = eig.values[0];
  out.u0 = eig.vectors->col(0);
  fix_phase(out.u0);

  const QuantumState j1u0 = t3.entries() * out.u0;
  out.lambda1 = out.u0.dot(j1u0).real();

  QuantumState rhs = j1u0 - out.lambda1 * out.u0;
  rhs -= out.u0.dot(rhs) * out.u0;
  out.u1 = -reduced_resolvent(tq, out.lambda0, out.u0).apply(rhs);

  out.lambda2 = out.u0.dot(t4.entries() * out.u0).real() + out.u0.dot(t3.entries() * out.u1).real();

  out.tail = tail_mass(out.u0, basis);
  if (out.tail >= 1e-12) {
    std::ostringstream os;
    os << "ground-state mass on the top two degrees is " << out.tail
       << " (>= 1e-12); increase the cutoff";
    out.warnings.push_back(os.str());
  }
  return out;
}

std::vector<DegenerateBranch> degenerate_first_order(const FlatSymbol& q, const FlatSymbol& r3,
                                                     const FockBasis& basis,
                                                     const std::vector<int>& level_indices) {
  if (level_indices.empty()) throw std::invalid_argument("empty eigenvalue index set");
  const HermitianMatrix tq = toeplitz_flat(q, basis);
  const EigenDecomposition eig = eig_hermitian(tq, true);
  const auto size = static_cast<int>(eig.values.size());

  std::vector<int> idx = level_indices;
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    throw std::invalid_argument("duplicate indices in eigenvalue index set");
  }
  for (int i : idx) {
    if (i < 0 || i >= size) throw std::invalid_argument("eigenvalue index out of range");
  }
  const double level = eig.values[static_cast<std::size_t>(idx.front())];
  for (int i : idx) {
    if (std::abs(eig.values[static_cast<std::size_t>(i)] - level) > kDegeneracyTol) {
      throw std::invalid_argument("index set spans more than one eigenvalue");
    }
  }
  const auto multiplicity = std::count_if(eig.values.begin(), eig.values.end(), [&](double v) {
    return std::abs(v - level) <= kDegeneracyTol;
  });
  if (multiplicity < 2) {
    std::ostringstream os;
    os << "eigenvalue " << level << " is simple; use perturbation_expansion";
    throw DegenerateLevelError(os.str());
  }
  if (multiplicity != static_cast<long>(idx.size())) {
    std::ostringstream os;
    os << "eigenspace of " << level << " has dimension " << multiplicity << " but "
       << idx.size() << " indices were requested";
    throw std::invalid_argument(os.str());
  }

  const auto d = static_cast<Eigen::Index>(idx.size());
  CMatrix v(basis.size(), d);
  for (Eigen::Index c = 0; c < d; ++c) v.col(c) = eig.vectors->col(idx[static_cast<std::size_t>(c)]);

  const HermitianMatrix t3 = toeplitz_flat(r3, basis);
  const CMatrix compressed = v.adjoint() * t3.entries() * v;
  const EigenDecomposition split = eig_hermitian(HermitianMatrix(compressed), true);

  std::vector<DegenerateBranch> out;
  for (Eigen::Index c = 0; c < d; ++c) {
    QuantumState vec = v * split.vectors->col(c);
    fix_phase(vec);
    out.push_back({std::move(vec), split.values[static_cast<std::size_t>(c)]});
  }
  return out;
}

}  // namespace semiwell
