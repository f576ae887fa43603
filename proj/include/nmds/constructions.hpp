#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmds/code.hpp"
#include "nmds/design.hpp"

namespace nmds {

enum class Family { D, H, G2, G3, H4, CONJ };
std::string to_string(Family f);
// Accepts the names printed by to_string; PreconditionError otherwise.
Family parse_family(const std::string& name);

struct FamilySpec {
  Family family = Family::D;
  int m = 3;
  std::optional<int> h;            // D, H
  std::vector<int> exponents;      // G2/G3/H4 tuple, or {k} for CONJ
  bool extended = false;

  // Throws PreconditionError naming the violated hypothesis.
  void validate() const;
  // Row exponents of the generator, in row order.
  std::vector<std::uint32_t> row_exponents() const;
  std::string name() const;
};

// Columns alpha^1, ..., alpha^(q-1); the parity column is appended when
// extended. Throws PreconditionError when `spec` is invalid or the field
// degree differs from spec.m.
LinearCode build_family(const FamilySpec& spec, const FieldPtr& field);

enum class BlockSource { PrimalMin, DualMin, DualWeight4 };
std::string to_string(BlockSource s);

struct ExpectedDesign {
  BlockSource source;
  std::size_t t;
  std::size_t w;
  std::optional<BigInt> lambda;  // absent: only "is a t-design" is claimed
};

struct ExpectedProfile {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  // (weight, count) for every nonzero weight; empty when no closed form is
  // claimed (conjecture instances).
  std::vector<std::pair<std::size_t, BigInt>> enumerator;
  std::vector<ExpectedDesign> designs;
};

// Exact evaluation of the closed forms at q = 2^spec.m. Throws
// InconsistencyError when a coefficient is not an integer or the enumerator
// does not sum to q^k - 1.
ExpectedProfile expected_profile(const FamilySpec& spec);

enum class ExhaustivePolicy { Auto, Never, Always };

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct DesignReport {
  ExpectedDesign expected;
  DesignVerdict verdict;
  std::optional<DesignParams> from_weights;  // b, lambda implied by A_w
};

struct VerificationReport {
  FamilySpec spec;
  std::uint32_t q = 0;
  std::uint32_t modulus = 0;
  CodeClass code_class;
  std::optional<WeightDistribution> exhaustive;
  WeightDistribution completed;      // primal recursion from A_{n-k}
  WeightDistribution dual_completed; // dual recursion from A^perp_k
  WeightDistribution via_dual;       // MacWilliams of dual_completed
  WeightDistribution dual;           // MacWilliams of the accepted distribution
  std::vector<DesignReport> designs;
  // t -> verdict; absent when t is outside 1 <= t < min(d, d^perp).
  std::vector<std::pair<std::size_t, std::optional<bool>>> assmus_mattson;
  std::vector<Check> checks;
  MinWeightSupports supports;

  bool pass() const;
};

VerificationReport verify_family(const FamilySpec& spec, const FieldPtr& field,
                                 const Budget& budget = {},
                                 ExhaustivePolicy policy = ExhaustivePolicy::Auto);

}  // namespace nmds
