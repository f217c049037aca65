#include "semiwell/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace semiwell {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Undecided:
      return "UNDECIDED";
    case Verdict::Computed:
      return "COMPUTED";
  }
  return "UNKNOWN";
}

std::vector<SweepRecord> sweep(const SphereSymbol& h, const std::vector<int>& n_list,
                               const SweepOptions& options) {
  if (n_list.empty()) throw std::invalid_argument("empty N list");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1) throw std::invalid_argument("N values must be positive");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw std::invalid_argument("N list must be strictly ascending");
  }
  if (options.count < 1 || options.count > n_list.front() + 1) {
    throw std::invalid_argument("eigenvalue count must lie in [1, min(N) + 1]");
  }

  std::vector<SweepRecord> records(n_list.size());
  auto compute = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    const int big_n = n_list[i];
    const EigenDecomposition eig = eig_hermitian(toeplitz_sphere(h, big_n), options.keep_ground);
    SweepRecord& rec = records[i];
    rec.big_n = big_n;
    rec.eigenvalues.assign(eig.values.begin(), eig.values.begin() + options.count);
    if (options.keep_ground) rec.ground = eig.vectors->col(0);
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  const auto workers = static_cast<std::size_t>(std::clamp<int>(options.threads, 1, static_cast<int>(n_list.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < n_list.size(); ++i) compute(i);
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n_list.size(); i = next++) {
        try {
          compute(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

}  // namespace semiwell
