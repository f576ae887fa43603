#include "nmds/design.hpp"

#include <algorithm>
#include <map>

#include "nmds/combinatorics.hpp"
#include "nmds/errors.hpp"
#include "nmds/parallel.hpp"

namespace nmds {

namespace {

void check_block(const Block& b, std::size_t n, std::size_t w) {
  if (b.size() != w) throw PreconditionError("block size differs from the design's w");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] >= n) throw PreconditionError("block index out of range");
    if (i > 0 && b[i] <= b[i - 1]) throw PreconditionError("block indices must be increasing");
  }
}

Design collect(std::size_t n, std::size_t w, std::map<Block, std::uint64_t>&& tally) {
  Design d;
  d.n = n;
  d.w = w;
  d.blocks.assign(std::make_move_iterator(tally.begin()), std::make_move_iterator(tally.end()));
  return d;
}

}  // namespace

Design Design::from_blocks(std::size_t n, std::size_t w,
                           std::span<const std::pair<Block, std::uint64_t>> supports) {
  std::map<Block, std::uint64_t> tally;
  for (const auto& [block, mult] : supports) {
    check_block(block, n, w);
    if (mult == 0) continue;
    tally[block] += mult;
  }
  return collect(n, w, std::move(tally));
}

Design Design::from_blocks(std::size_t n, std::size_t w, std::span<const Block> supports) {
  std::map<Block, std::uint64_t> tally;
  for (const auto& block : supports) {
    check_block(block, n, w);
    ++tally[block];
  }
  return collect(n, w, std::move(tally));
}

Design Design::from_codeword_supports(std::size_t n, std::size_t w,
                                      std::span<const Block> supports, std::uint32_t q) {
  auto d = from_blocks(n, w, supports);
  for (auto& [block, mult] : d.blocks) {
    if (mult % (q - 1) != 0) {
      throw PreconditionError("support multiplicity is not divisible by q-1");
    }
    mult /= q - 1;
  }
  return d;
}

BigInt Design::block_count() const {
  BigInt b = 0;
  for (const auto& e : blocks) b += e.second;
  return b;
}

bool Design::simple() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& e) { return e.second == 1; });
}

DesignVerdict verify_t_design(const Design& d, std::size_t t, unsigned workers) {
  if (t < 1 || t > d.w || d.w > d.n) throw PreconditionError("need 1 <= t <= w <= n");
  const std::uint64_t cells = binomial(d.n, t);

  // Shard blocks across tasks; per-task accumulators are merged by addition.
  const std::size_t shards = std::max<std::size_t>(1, std::min<std::size_t>(d.blocks.size(), 4 * std::max(1u, workers)));
  auto partial = run_tasks<std::vector<std::uint64_t>>(shards, workers, [&](std::size_t s) {
    std::vector<std::uint64_t> acc(cells, 0);
    const std::size_t lo = d.blocks.size() * s / shards;
    const std::size_t hi = d.blocks.size() * (s + 1) / shards;
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& [block, mult] = d.blocks[i];
      for_each_subset(block, t, [&](std::span<const std::uint32_t> sub) {
        acc[colex_rank(sub)] += mult;
      });
    }
    return acc;
  });
  std::vector<std::uint64_t> acc(cells, 0);
  for (const auto& p : partial)
    for (std::uint64_t i = 0; i < cells; ++i) acc[i] += p[i];

  DesignVerdict v;
  v.t = t;
  v.b = d.block_count();
  v.simple = d.simple();
  const std::uint64_t first = acc.empty() ? 0 : acc[0];
  for (std::uint64_t i = 0; i < cells; ++i) {
    if (acc[i] != first) {
      v.witness = colex_unrank(i, t);
      break;
    }
  }
  if (!v.witness) {
    v.lambda = BigInt(first);
    if (*v.lambda * binomial_big(d.n, t) != v.b * binomial_big(d.w, t)) {
      throw InconsistencyError("lambda C(n,t) != b C(w,t) for a counted design");
    }
  }
  v.steiner = t >= 2 && v.lambda && *v.lambda == 1;
  return v;
}

ComplementResult complementary_design(const Design& d, const DesignVerdict& verdict) {
  if (!verdict.lambda) throw PreconditionError("complement needs a verified t-design");
  const std::size_t t = verdict.t;
  const BigInt num = *verdict.lambda * binomial_big(d.n - t, d.w);
  const BigInt den = binomial_big(d.n - t, d.w - t);
  if (den == 0 || num % den != 0) {
    throw InconsistencyError("complementary lambda is not an integer");
  }
  std::vector<std::pair<Block, std::uint64_t>> comp;
  comp.reserve(d.blocks.size());
  for (const auto& [block, mult] : d.blocks) {
    Block c;
    c.reserve(d.n - d.w);
    std::size_t i = 0;
    for (std::uint32_t p = 0; p < d.n; ++p) {
      if (i < block.size() && block[i] == p) {
        ++i;
      } else {
        c.push_back(p);
      }
    }
    comp.emplace_back(std::move(c), mult);
  }
  return {Design::from_blocks(d.n, d.n - d.w, comp), num / den};
}

DesignParams expected_design_params(const BigInt& a_w, std::size_t n, std::size_t w,
                                    std::size_t t, std::uint32_t q) {
  if (a_w <= 0) throw PreconditionError("A_w must be positive");
  if (t > w || w > n) throw PreconditionError("need t <= w <= n");
  const BigInt qm1 = q - 1;
  if (a_w % qm1 != 0) throw InconsistencyError("b = A_w/(q-1) is not an integer");
  const BigInt num = binomial_big(w, t) * a_w;
  const BigInt den = qm1 * binomial_big(n, t);
  if (num % den != 0) throw InconsistencyError("lambda from A_w is not an integer");
  return {a_w / qm1, num / den};
}

}  // namespace nmds
