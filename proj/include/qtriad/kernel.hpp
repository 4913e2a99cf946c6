#pragma once

// Exhaustive scan kernels. Each returns the first failing tuple in
// lexicographic scan order, so results are identical for any thread count.
// The outer index is distributed across OpenMP threads; a shared bound lets
// threads skip outer indices beyond an already-known failure.

#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qtriad/core.hpp"

namespace qtriad::kernel {

template <class Holds>
std::optional<Elem> first_failure(std::span<const Elem> as, Holds&& holds) {
  const std::int64_t na = std::int64_t(as.size());
  std::atomic<std::int64_t> best{na};
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < na; ++i) {
    if (i >= best.load(std::memory_order_relaxed)) continue;
    if (!holds(as[std::size_t(i)])) {
      std::int64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  if (best.load() == na) return std::nullopt;
  return as[std::size_t(best.load())];
}

template <class Holds>
std::optional<std::array<Elem, 2>> first_failure(std::span<const Elem> as,
                                                 std::span<const Elem> bs, Holds&& holds) {
  const std::int64_t na = std::int64_t(as.size());
  std::atomic<std::int64_t> best{na};
  std::vector<std::int64_t> inner(as.size(), -1);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < na; ++i) {
    if (i >= best.load(std::memory_order_relaxed)) continue;
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (!holds(as[std::size_t(i)], bs[j])) {
        inner[std::size_t(i)] = std::int64_t(j);
        std::int64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  }
  const std::int64_t b = best.load();
  if (b == na) return std::nullopt;
  return std::array<Elem, 2>{as[std::size_t(b)], bs[std::size_t(inner[std::size_t(b)])]};
}

template <class Holds>
std::optional<std::array<Elem, 3>> first_failure(std::span<const Elem> as,
                                                 std::span<const Elem> bs,
                                                 std::span<const Elem> cs, Holds&& holds) {
  const std::int64_t na = std::int64_t(as.size());
  std::atomic<std::int64_t> best{na};
  std::vector<std::array<std::size_t, 2>> inner(as.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < na; ++i) {
    if (i >= best.load(std::memory_order_relaxed)) continue;
    bool failed = false;
    for (std::size_t j = 0; j < bs.size() && !failed; ++j)
      for (std::size_t k = 0; k < cs.size(); ++k)
        if (!holds(as[std::size_t(i)], bs[j], cs[k])) {
          inner[std::size_t(i)] = {j, k};
          failed = true;
          break;
        }
    if (failed) {
      std::int64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  const std::int64_t b = best.load();
  if (b == na) return std::nullopt;
  const auto [j, k] = inner[std::size_t(b)];
  return std::array<Elem, 3>{as[std::size_t(b)], bs[j], cs[k]};
}

/// 0..n-1 as a vector, for scanning whole carriers.
inline std::vector<Elem> all_elements(std::size_t n) {
  std::vector<Elem> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Elem(i);
  return v;
}

}  // namespace qtriad::kernel
