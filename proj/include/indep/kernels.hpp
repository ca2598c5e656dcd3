#pragma once

#include <cstdint>
#include <vector>

namespace indep {

/// Execution policy for table kernels. Both produce identical tables.
enum class Exec { Serial, Parallel };

/// table[i] = f(i) for i in [0, count). With Exec::Parallel the loop is split across
/// OpenMP threads; f must be pure.
template <typename F>
std::vector<std::uint8_t> tabulate(std::uint64_t count, F&& f, Exec exec) {
  std::vector<std::uint8_t> table(count);
  const auto total = static_cast<std::int64_t>(count);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < total; ++i)
      table[static_cast<std::size_t>(i)] = f(static_cast<std::uint64_t>(i)) ? 1 : 0;
  } else {
    for (std::int64_t i = 0; i < total; ++i)
      table[static_cast<std::size_t>(i)] = f(static_cast<std::uint64_t>(i)) ? 1 : 0;
  }
  return table;
}

/// Least i in [0, count) with pred(i), or count if none. Parallel version scans
/// blocks concurrently and skips blocks past the best hit found so far; the result
/// equals the serial scan.
template <typename P>
std::uint64_t find_first(std::uint64_t count, P&& pred, Exec exec) {
  if (exec == Exec::Serial || count < 256) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return count;
  }
  constexpr std::uint64_t kBlock = 64;
  const auto blocks = static_cast<std::int64_t>((count + kBlock - 1) / kBlock);
  std::uint64_t best = count;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    const std::uint64_t lo = static_cast<std::uint64_t>(blk) * kBlock;
    std::uint64_t current;
#pragma omp atomic read
    current = best;
    if (lo >= current) continue;
    const std::uint64_t hi = lo + kBlock < count ? lo + kBlock : count;
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (!pred(i)) continue;
#pragma omp critical(indep_find_first)
      if (i < best) best = i;
      break;
    }
  }
  return best;
}

}  // namespace indep
