#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nmds/bigint.hpp"
#include "nmds/matrix.hpp"

namespace nmds {

// Sorted 0-based coordinate indices.
using Block = std::vector<std::uint32_t>;

struct Budget {
  static constexpr std::uint64_t kDefaultCodewords = std::uint64_t{1} << 35;
  static constexpr std::uint64_t kDefaultSubsets = std::uint64_t{1} << 31;

  std::uint64_t codewords = kDefaultCodewords;  // codeword evaluations
  std::uint64_t subsets = kDefaultSubsets;      // subset rank tests
  unsigned workers = 0;                         // 0 = default_worker_count()

  // Defaults overridden by NMDS_CODEWORD_BUDGET / NMDS_SUBSET_BUDGET.
  static Budget from_environment();
  unsigned worker_count() const;
};

class LinearCode {
 public:
  // Throws PreconditionError when the rows are dependent, naming the first
  // row that lies in the span of the earlier ones.
  static LinearCode from_generator(Matrix generator);

  const Matrix& generator() const noexcept { return gen_; }
  const Field& field() const noexcept { return gen_.field(); }
  const FieldPtr& field_ptr() const noexcept { return gen_.field_ptr(); }
  std::size_t n() const noexcept { return gen_.cols(); }
  std::size_t k() const noexcept { return gen_.rows(); }
  std::uint32_t q() const noexcept { return gen_.field().q(); }

  // Generator of the dual is the reduced null-space basis of this generator.
  LinearCode dual() const;
  // Appends the overall parity column (row sums).
  LinearCode extend() const;
  Vector encode(std::span<const Element> message) const { return gen_.left_apply(message); }

 private:
  explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {}
  Matrix gen_;
};

struct WeightDistribution {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint32_t q = 0;
  std::vector<BigInt> counts;  // A_0..A_n

  static WeightDistribution zero(std::size_t n, std::size_t k, std::uint32_t q);
  BigInt total() const;
  // Smallest positive weight with a nonzero count, or 0 for the zero code.
  std::size_t min_weight() const;
  // Weights w > 0 with A_w != 0, ascending.
  std::vector<std::size_t> support() const;
  bool operator==(const WeightDistribution&) const = default;
};

enum class CodeLabel { MDS, NMDS, AMDSOnly, Other };
std::string to_string(CodeLabel label);

struct CodeClass {
  std::size_t d = 0;
  std::size_t d_dual = 0;
  // False when d < n-k: the rank scan then only certifies d <= n-k-1 and `d`
  // holds that bound.
  bool d_exact = true;
  CodeLabel label = CodeLabel::Other;
};

// Exhaustive enumeration of all q^k codewords. Throws BudgetExceeded when
// q^k exceeds budget.codewords.
WeightDistribution weight_distribution_exhaustive(const LinearCode& code,
                                                  const Budget& budget = {});

// Rank-based classification from column subsets of size <= k+1.
CodeClass nmds_classify(const LinearCode& code, const Budget& budget = {});

struct MinWeightSupports {
  // primal[i] is the support of the minimum-weight codeword paired with the
  // dual minimum-weight codeword supported on dual[i]; they are complements.
  std::vector<Block> primal;
  std::vector<Block> dual;
  // Set when a dependent k-subset has rank < k-1 or a null vector has a zero
  // entry, i.e. the code is not NMDS. Blocks are incomplete in that case.
  std::optional<std::string> violation;
};

// Every k-subset of columns with rank k-1, in lexicographic order.
MinWeightSupports min_weight_supports(const LinearCode& code, const Budget& budget = {});

// Supports of weight-w codewords of the dual code with multiplicity (number
// of such codewords divided by q-1), in lexicographic order of the support.
std::vector<std::pair<Block, std::uint64_t>> fixed_weight_dual_supports(
    const LinearCode& code, std::size_t w, const Budget& budget = {});

// Full distribution of an [n,k,n-k] NMDS code from A_{n-k}. Throws
// InconsistencyError when the result does not sum to q^k.
WeightDistribution complete_weight_distribution_nmds(std::size_t n, std::size_t k,
                                                     std::uint32_t q, const BigInt& a_min);

// Dual distribution of the same code from A^perp_k via the dual recursion.
WeightDistribution complete_dual_distribution_nmds(std::size_t n, std::size_t k,
                                                   std::uint32_t q, const BigInt& dual_a_min);

// A^perp from A by the Krawtchouk identity. Throws PreconditionError when wd
// does not sum to q^k and InconsistencyError on a non-integral result.
WeightDistribution macwilliams_transform(const WeightDistribution& wd);

struct PlessResult {
  bool pass = false;
  BigInt residuals[3];  // moment 0, 1, 2: observed minus expected
};

// First three power moments under d^perp >= 3 (checked via MacWilliams,
// PreconditionError otherwise).
PlessResult pless_moment_check(const WeightDistribution& wd);

// True iff C has at most d^perp - t nonzero weights in [1, n-t]. Throws
// PreconditionError unless 1 <= t < min(d, d^perp).
bool assmus_mattson_check(const WeightDistribution& wd, const WeightDistribution& dual_wd,
                          std::size_t t);

}  // namespace nmds
