#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nmds/bigint.hpp"
#include "nmds/code.hpp"

namespace nmds {

// Points are 0..n-1; blocks are sorted, deduplicated and carry multiplicities.
struct Design {
  std::size_t n = 0;
  std::size_t w = 0;
  std::vector<std::pair<Block, std::uint64_t>> blocks;  // sorted by block

  // Supports whose multiplicities are already per scalar class (as produced
  // by min_weight_supports / fixed_weight_dual_supports). Throws
  // PreconditionError on a malformed block.
  static Design from_blocks(std::size_t n, std::size_t w,
                            std::span<const std::pair<Block, std::uint64_t>> supports);
  static Design from_blocks(std::size_t n, std::size_t w, std::span<const Block> supports);
  // Raw codeword supports: every multiplicity must be divisible by q-1
  // (PreconditionError otherwise) and is divided by it.
  static Design from_codeword_supports(std::size_t n, std::size_t w,
                                       std::span<const Block> supports, std::uint32_t q);

  // Number of blocks counted with multiplicity.
  BigInt block_count() const;
  bool simple() const;
};

struct DesignVerdict {
  std::size_t t = 0;
  std::optional<BigInt> lambda;  // absent: not a t-design
  bool simple = false;
  bool steiner = false;
  BigInt b = 0;
  // When lambda is absent: a t-subset whose count differs from the first one.
  std::optional<Block> witness;
};

// Throws PreconditionError unless 1 <= t <= w <= n.
DesignVerdict verify_t_design(const Design& d, std::size_t t, unsigned workers = 1);

struct ComplementResult {
  Design design;
  BigInt expected_lambda;  // lambda * C(n-t, w) / C(n-t, w-t)
};

// Throws PreconditionError when the verdict carries no lambda and
// InconsistencyError when the expected lambda is not integral.
ComplementResult complementary_design(const Design& d, const DesignVerdict& verdict);

struct DesignParams {
  BigInt b;
  BigInt lambda;
};

// b = A_w / (q-1), lambda = C(w,t) A_w / ((q-1) C(n,t)). Throws
// PreconditionError for A_w <= 0 and InconsistencyError when either value is
// not an integer.
DesignParams expected_design_params(const BigInt& a_w, std::size_t n, std::size_t w,
                                    std::size_t t, std::uint32_t q);

}  // namespace nmds
