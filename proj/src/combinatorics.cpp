#include "nmds/combinatorics.hpp"

#include <stdexcept>
#include <thread>

#include "nmds/bigint.hpp"
#include "nmds/parallel.hpp"

namespace nmds {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r * (n-k+i) is C(n-k+i, i) * i
    if (r > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

BigInt binomial_big(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t colex_rank(std::span<const std::uint32_t> subset) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) r += binomial(subset[i], i + 1);
  return r;
}

std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::size_t t) {
  std::vector<std::uint32_t> out(t);
  for (std::size_t i = t; i-- > 0;) {
    // Largest c with C(c, i+1) <= rank.
    std::uint32_t c = static_cast<std::uint32_t>(i);
    while (binomial(c + 1, i + 1) <= rank) ++c;
    out[i] = c;
    rank -= binomial(c, i + 1);
  }
  return out;
}

bool next_combination(std::vector<std::uint32_t>& subset, std::uint32_t n) {
  const std::size_t t = subset.size();
  std::size_t i = t;
  while (i > 0 && subset[i - 1] == n - t + i - 1) --i;
  if (i == 0) return false;
  ++subset[i - 1];
  for (std::size_t j = i; j < t; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

unsigned default_worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace nmds
