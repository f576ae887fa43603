#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmds/code.hpp"
#include "nmds/constructions.hpp"

namespace nmds {

struct LemmaReport {
  std::string lemma_id;
  std::string params;    // e.g. "m=5" or "m=2..6 h=1..8"
  std::string expected;  // closed form or predicate, evaluated where possible
  std::string observed;
  bool pass = false;
  std::uint64_t cases = 0;          // fixed tuples / parameter points checked
  std::uint64_t cross_checked = 0;  // second-route evaluations that agreed
  std::vector<std::string> counterexamples;  // capped at kMaxCounterexamples

  // Conjecture instances: observed primal-min and dual-min designs.
  // Counting lemmas: A_{n-k} implied by the closed-form and observed counts
  // next to the family's enumerator.
  std::vector<std::string> details;

  static constexpr std::size_t kMaxCounterexamples = 16;
};

// Stable ids, documented in the CLI help.
std::vector<std::string> counting_lemma_ids();
std::vector<std::string> field_lemma_ids();
// Maps an alias such as "lem-ab" to its id; returns the input otherwise.
std::string canonical_lemma_id(const std::string& id);

// For every admissible fixed tuple, counts the unordered completions whose
// lemma matrix is singular and compares with the closed form. Throws
// PreconditionError for an unknown id or when the field violates the lemma's
// hypothesis on m.
LemmaReport verify_counting_lemma(const std::string& id, const FieldPtr& field,
                                  unsigned workers = 1);

// Exhaustive check of a field lemma over m in [m_lo, m_hi] and, where the
// lemma has one, h in [h_lo, h_hi] (restricted to admissible h).
LemmaReport verify_field_lemma(const std::string& id, int m_lo, int m_hi, int h_lo = 1,
                               int h_hi = 8);

// Builds M_k over GF(2^m) and checks NMDS + both minimum-weight 2-designs by
// rank methods only. Throws PreconditionError unless 4 <= k < q-1.
LemmaReport verify_conjecture(int m, int k, const Budget& budget = {});

}  // namespace nmds
