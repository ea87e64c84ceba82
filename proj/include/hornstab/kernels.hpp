#pragma once

// Combinatorial enumeration shared by the reasoners and the oracle, plus the
// execution switch that selects the OpenMP kernel or its serial reference.

#include <cstddef>
#include <exception>
#include <cstdint>
#include <vector>

#include "hornstab/core.hpp"

namespace hornstab {

/// Selects the OpenMP kernel or the serial reference loop. Both produce
/// identical results; the serial path is kept for testing and benchmarking.
enum class Execution { kSerial, kParallel };

/// True when the library was built with OpenMP.
bool parallel_available();

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
/// Saturating a + b and a * b.
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);
/// |N_alpha(v)| = sum_{i<=alpha} C(n, i), saturating.
std::uint64_t neighborhood_size(std::size_t n, std::size_t alpha);

/// Every mask over n bits with at most `alpha` ones, ordered by popcount and
/// then lexicographically by index set. Throws ResourceError above `cap`.
std::vector<Mask> flip_masks(std::size_t n, std::size_t alpha, std::uint64_t cap);

/// N_alpha(v) as a model set.
ModelSet neighborhood(const Model& v, std::size_t alpha,
                      std::uint64_t cap = std::uint64_t{1} << 26);

/// Index combinations of {0..universe-1}, stored flat. Entry k occupies
/// [offsets[k], offsets[k+1]) of `items`.
struct CombinationList {
  std::vector<std::uint32_t> items;
  std::vector<std::size_t> offsets{0};

  std::size_t size() const { return offsets.size() - 1; }
  const std::uint32_t* begin(std::size_t k) const { return items.data() + offsets[k]; }
  const std::uint32_t* end(std::size_t k) const { return items.data() + offsets[k + 1]; }
  std::size_t length(std::size_t k) const { return offsets[k + 1] - offsets[k]; }
};

/// All subsets of {0..universe-1} whose size lies in [min_size, max_size],
/// ordered by size then lexicographically. Throws ResourceError above `cap`.
CombinationList combinations(std::size_t universe, std::size_t min_size, std::size_t max_size,
                             std::uint64_t cap);

/// Smallest k in [0, count) with pred(k), or `count` if none. The parallel
/// path scans fixed-size chunks in order and evaluates each chunk with an
/// OpenMP min-reduction, so it stops at the first chunk containing a hit and
/// returns the same index as the serial loop. `pred` must be thread-safe.
template <class Pred>
std::size_t find_first(std::size_t count, Pred&& pred, Execution exec,
                       std::size_t chunk = 2048) {
  if (exec == Execution::kSerial || count < 2 * chunk) {
    for (std::size_t k = 0; k < count; ++k) {
      if (pred(k)) return k;
    }
    return count;
  }
  std::exception_ptr error;
  for (std::size_t base = 0; base < count; base += chunk) {
    const std::size_t stop = base + chunk < count ? base + chunk : count;
    std::size_t hit = count;
#pragma omp parallel for reduction(min : hit) schedule(static)
    for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(base); k < static_cast<std::ptrdiff_t>(stop); ++k) {
      const auto idx = static_cast<std::size_t>(k);
      if (idx >= hit) continue;
      try {
        if (pred(idx)) hit = idx;
      } catch (...) {
#pragma omp critical(hornstab_find_first)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    if (hit != count) return hit;
  }
  return count;
}

}  // namespace hornstab
