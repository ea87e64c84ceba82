#include "hornstab/kernels.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace hornstab {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

// Advances a sorted k-combination of {0..n-1} to its lexicographic successor.
bool next_combination(std::vector<std::uint32_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSat / b ? kSat : a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays exact; guard the multiplication.
    std::uint64_t num = n - k + i;
    std::uint64_t g = std::gcd(r, i);
    std::uint64_t rr = r / g, ii = i / g;
    std::uint64_t nn = num / ii;  // ii divides num once r is reduced
    if (num % ii != 0) {
      return kSat;  // cannot happen for exact binomials; keep the contract
    }
    r = sat_mul(rr, nn);
    if (r == kSat) return kSat;
  }
  return r;
}

std::uint64_t neighborhood_size(std::size_t n, std::size_t alpha) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i <= std::min(alpha, n); ++i) total = sat_add(total, binomial(n, i));
  return total;
}

std::vector<Mask> flip_masks(std::size_t n, std::size_t alpha, std::uint64_t cap) {
  check_model_width(n);
  const std::uint64_t count = neighborhood_size(n, alpha);
  if (count > cap) {
    throw ResourceError("neighborhood of radius " + std::to_string(alpha) + " over " +
                        std::to_string(n) + " variables exceeds cap " + std::to_string(cap));
  }
  std::vector<Mask> out;
  out.reserve(count);
  for (std::size_t k = 0; k <= std::min(alpha, n); ++k) {
    std::vector<std::uint32_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0U);
    do {
      Mask m = 0;
      for (auto i : idx) m |= Mask{1} << i;
      out.push_back(m);
    } while (k > 0 && next_combination(idx, n));
  }
  return out;
}

ModelSet neighborhood(const Model& v, std::size_t alpha, std::uint64_t cap) {
  std::vector<Mask> flips = flip_masks(v.size(), alpha, cap);
  for (auto& f : flips) f ^= v.bits();
  return ModelSet::from_masks(v.size(), flips);
}

CombinationList combinations(std::size_t universe, std::size_t min_size, std::size_t max_size,
                             std::uint64_t cap) {
  CombinationList out;
  max_size = std::min(max_size, universe);
  std::uint64_t count = 0;
  for (std::size_t k = min_size; k <= max_size; ++k) count = sat_add(count, binomial(universe, k));
  if (count > cap) {
    throw ResourceError("subset enumeration of " + std::to_string(count) +
                        " subsets exceeds cap " + std::to_string(cap));
  }
  out.offsets.reserve(count + 1);
  for (std::size_t k = min_size; k <= max_size; ++k) {
    std::vector<std::uint32_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0U);
    do {
      out.items.insert(out.items.end(), idx.begin(), idx.end());
      out.offsets.push_back(out.items.size());
    } while (k > 0 && next_combination(idx, universe));
  }
  return out;
}

}  // namespace hornstab
