#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <omp.h>

namespace nullsatz {

// Exhaustive scans have a serial reference and an OpenMP kernel; both return the same
// result (smallest matching index / sorted match list).
enum class Exec { Serial, Parallel };

template <class Pred>
std::optional<std::uint64_t> find_first_serial(std::uint64_t n, Pred&& pred) {
  for (std::uint64_t i = 0; i < n; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

template <class Pred>
std::optional<std::uint64_t> find_first_parallel(std::uint64_t n, Pred&& pred) {
  constexpr std::uint64_t kBlock = 4096;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t start = 0; start < n; start += kBlock) {
    std::uint64_t end = std::min(n, start + kBlock);
    std::uint64_t best = kNone;
    const auto count = static_cast<std::int64_t>(end - start);
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
    for (std::int64_t k = 0; k < count; ++k) {
      std::uint64_t i = start + static_cast<std::uint64_t>(k);
      if (i < best && pred(i)) best = i;
    }
    if (best != kNone) return best;
  }
  return std::nullopt;
}

template <class Pred>
std::optional<std::uint64_t> find_first(std::uint64_t n, Pred&& pred, Exec exec = Exec::Parallel) {
  if (exec == Exec::Serial) return find_first_serial(n, pred);
  return find_first_parallel(n, pred);
}

template <class Pred>
std::vector<std::uint64_t> collect_matches(std::uint64_t n, Pred&& pred, Exec exec = Exec::Parallel) {
  std::vector<std::uint64_t> out;
  if (exec == Exec::Serial) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (pred(i)) out.push_back(i);
    return out;
  }
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t k = 0; k < count; ++k)
      if (pred(static_cast<std::uint64_t>(k))) local.push_back(static_cast<std::uint64_t>(k));
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nullsatz
