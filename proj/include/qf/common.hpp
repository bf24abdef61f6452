#pragma once

#include <cstdint>
#include <vector>

namespace qf {

/// Default ceiling on enumeration work (operators swept, codewords listed,
/// marginal dimension). Exceeding it raises BudgetExceededError instead of
/// silently truncating.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Advance a strictly increasing index vector over {0..n-1} to the next
/// combination in lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

/// Number of verifier worker threads: QECC_FORGE_THREADS caps it, hardware
/// concurrency is the default.
int worker_thread_count();

}  // namespace qf
