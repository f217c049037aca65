#include "semiwell/flat_model.hpp"

#include <algorithm>
#include <cmath>

namespace semiwell {

namespace {

MultiIndex unit(int n, int j) {
  MultiIndex e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(j)] = 1;
  return e;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

// Coordinate w_i as a linear form alpha z_p + beta zbar_p.
struct LinearForm {
  int var;
  Complex alpha;
  Complex beta;
};

LinearForm coordinate(int n, int i) {
  if (i < n) return {i, {0.5, 0.0}, {0.5, 0.0}};
  return {i - n, {0.0, -0.5}, {0.0, 0.5}};
}

}  // namespace

int total_degree(const MultiIndex& nu) {
  int d = 0;
  for (int v : nu) d += v;
  return d;
}

FlatSymbol::FlatSymbol(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("flat symbol needs n >= 1");
}

FlatSymbol& FlatSymbol::add_term(const MultiIndex& a, const MultiIndex& b, Complex c) {
  if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_) {
    throw std::invalid_argument("multi-index length does not match n");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || b[i] < 0) throw std::invalid_argument("negative exponent in flat symbol");
  }
  terms_[{a, b}] += c;
  return *this;
}

FlatSymbol& FlatSymbol::add_real_pair(const MultiIndex& a, const MultiIndex& b, double c) {
  add_term(a, b, c);
  add_term(b, a, c);
  return *this;
}

FlatSymbol FlatSymbol::from_quadratic(const QuadraticForm& q) {
  const int n = q.n();
  FlatSymbol out(n);
  const MultiIndex zero(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < 2 * n; ++i) {
    for (int k = 0; k < 2 * n; ++k) {
      const double m = q.matrix()(i, k);
      if (m == 0.0) continue;
      const LinearForm li = coordinate(n, i);
      const LinearForm lk = coordinate(n, k);
      const MultiIndex ep = unit(n, li.var);
      const MultiIndex er = unit(n, lk.var);
      out.add_term(add(ep, er), zero, m * li.alpha * lk.alpha);
      out.add_term(ep, er, m * li.alpha * lk.beta);
      out.add_term(er, ep, m * li.beta * lk.alpha);
      out.add_term(zero, add(ep, er), m * li.beta * lk.beta);
    }
  }
  // Drop exact cancellations so degree() and term listings stay clean.
  std::erase_if(out.terms_, [](const auto& kv) { return std::abs(kv.second) < 1e-300; });
  return out;
}

FlatSymbol FlatSymbol::harmonic(int n) {
  FlatSymbol out(n);
  for (int j = 0; j < n; ++j) out.add_term(unit(n, j), unit(n, j), 1.0);
  return out;
}

int FlatSymbol::degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) {
    if (c != Complex{}) d = std::max(d, total_degree(key.first) + total_degree(key.second));
  }
  return d;
}

double FlatSymbol::reality_defect() const {
  double worst = 0.0;
  for (const auto& [key, c] : terms_) {
    auto it = terms_.find({key.second, key.first});
    const Complex mirror = it == terms_.end() ? Complex{} : it->second;
    worst = std::max(worst, std::abs(c - std::conj(mirror)));
  }
  return worst;
}

Complex FlatSymbol::evaluate(const std::vector<Complex>& z) const {
  if (static_cast<int>(z.size()) != n_) throw std::invalid_argument("point dimension mismatch");
  Complex total{};
  for (const auto& [key, c] : terms_) {
    Complex term = c;
    for (int j = 0; j < n_; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      term *= std::pow(z[uj], key.first[uj]) * std::pow(std::conj(z[uj]), key.second[uj]);
    }
    total += term;
  }
  return total;
}

FlatSymbol FlatSymbol::operator+(const FlatSymbol& other) const {
  if (other.n_ != n_) throw std::invalid_argument("flat symbols live on different C^n");
  FlatSymbol out(*this);
  for (const auto& [key, c] : other.terms_) out.terms_[key] += c;
  return out;
}

FlatSymbol FlatSymbol::operator*(double s) const {
  FlatSymbol out(*this);
  for (auto& kv : out.terms_) kv.second *= s;
  return out;
}

}  // namespace semiwell
