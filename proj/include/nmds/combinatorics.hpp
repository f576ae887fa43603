#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nmds {

// Binomial coefficient in 64 bits. Throws std::overflow_error when the value
// does not fit; zero when k > n.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Colex rank of a strictly increasing subset {c_0 < c_1 < ...}:
// sum_i C(c_i, i+1). Ranks of t-subsets of [0, n) cover [0, C(n,t)).
std::uint64_t colex_rank(std::span<const std::uint32_t> subset);

// Inverse of colex_rank for t-subsets.
std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::size_t t);

// Advances `subset` (strictly increasing, values < n) to the next subset in
// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::uint32_t>& subset, std::uint32_t n);

// Calls fn(subset) for every t-subset of `items` (items assumed sorted), in
// lexicographic order of positions.
template <class Fn>
void for_each_subset(std::span<const std::uint32_t> items, std::size_t t, Fn&& fn) {
  const std::size_t n = items.size();
  if (t > n) return;
  std::vector<std::uint32_t> pos(t);
  std::vector<std::uint32_t> chosen(t);
  for (std::size_t i = 0; i < t; ++i) pos[i] = static_cast<std::uint32_t>(i);
  for (;;) {
    for (std::size_t i = 0; i < t; ++i) chosen[i] = items[pos[i]];
    fn(std::span<const std::uint32_t>(chosen));
    if (!next_combination(pos, static_cast<std::uint32_t>(n))) return;
  }
}

}  // namespace nmds
