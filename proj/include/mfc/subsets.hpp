#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "mfc/graph.hpp"

namespace mfc {

/// Next integer with the same popcount (Gosper's hack). Requires x != 0.
constexpr std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

/// Scatters the low bits of `index_mask` onto the members of `universe`.
inline VertexSet scatter(std::uint64_t index_mask, const std::vector<int>& members) {
  VertexSet out;
  while (index_mask != 0) {
    out.insert(members[std::countr_zero(index_mask)]);
    index_mask &= index_mask - 1;
  }
  return out;
}

/// Calls f(S) for every S subset of universe with |S| = size, in ascending
/// bitmask (colexicographic) order. f returns false to stop early. Returns
/// false iff stopped early.
template <class F>
bool for_each_subset_of_size(VertexSet universe, int size, F&& f) {
  const int m = universe.size();
  if (size < 0 || size > m) return true;
  if (size == 0) return f(VertexSet{});
  const std::vector<int> members = universe.to_vector();
  const std::uint64_t first = size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
  const std::uint64_t last = first << (m - size);
  for (std::uint64_t x = first;; x = next_same_popcount(x)) {
    if (!f(scatter(x, members))) return false;
    if (x == last) break;
  }
  return true;
}

/// Materializes the index masks of all size-subsets of an m-element universe
/// in ascending order; used by the parallel kernels to split the sweep.
inline std::vector<std::uint64_t> subset_index_masks(int m, int size) {
  std::vector<std::uint64_t> out;
  if (size < 0 || size > m) return out;
  if (size == 0) return {0};
  std::uint64_t x = (std::uint64_t{1} << size) - 1;
  const std::uint64_t limit = std::uint64_t{1} << m;
  while (x < limit) {
    out.push_back(x);
    x = next_same_popcount(x);
  }
  return out;
}

}  // namespace mfc
