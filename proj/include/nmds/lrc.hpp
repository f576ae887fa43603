#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nmds/code.hpp"
#include "nmds/constructions.hpp"

namespace nmds {

struct LocalityResult {
  std::optional<std::size_t> r;              // d^perp - 1 when the premise holds
  std::size_t d_dual = 0;
  std::optional<std::uint64_t> replication;  // blocks through each point
  std::optional<std::uint32_t> uncovered;    // 0-based coordinate, when coverage fails
};

// Minimum locality from the minimum-weight supports of the dual code: when
// they form a 1-design with replication >= 1 the locality is d^perp - 1.
// All blocks must have the same size d^perp.
LocalityResult minimum_locality(std::size_t n, const std::vector<Block>& dual_min_blocks);
// Same, computing the dual minimum-weight supports by rank methods. Requires
// an NMDS code (PreconditionError otherwise).
LocalityResult minimum_locality(const LinearCode& code, const Budget& budget = {});

// n - k - ceil(k/r) + 2.
std::int64_t singleton_like_rhs(std::size_t n, std::size_t k, std::size_t r);
bool verify_d_optimal(std::size_t n, std::size_t k, std::size_t d, std::size_t r);

// Upper estimate of the largest dimension of a q-ary linear code of length n
// and minimum distance d.
using KOptEstimator = std::function<std::uint64_t(std::size_t n, std::size_t d, std::uint32_t q)>;
// max(n - d + 1, 0).
std::uint64_t singleton_k_opt(std::size_t n, std::size_t d, std::uint32_t q);

enum class KOptimality { Certified, Inconclusive };
std::string to_string(KOptimality k);

struct KOptResult {
  std::uint64_t bound = 0;   // min over t of r t + k_opt(n - t(r+1), d)
  std::size_t argmin_t = 0;
  KOptimality verdict = KOptimality::Inconclusive;
  std::string details;       // per-t terms
  std::string estimator;
};

// t ranges over 1 <= t <= ceil(k/r) + 1; terms with n - t(r+1) < 0 are skipped.
KOptResult verify_k_optimal(std::size_t n, std::size_t k, std::size_t d, std::uint32_t q,
                            std::size_t r, const KOptEstimator& estimator = singleton_k_opt,
                            const std::string& estimator_name = "singleton");

struct LrcRow {
  std::string family;  // e.g. "G3 (1,2,4) m=5", "dual ext-H4 (1,2,3,4) m=4"
  int m = 0;
  std::size_t n = 0, k = 0, d = 0;
  std::uint32_t q = 0;
  std::optional<std::size_t> r;
  std::size_t table_n = 0, table_k = 0, table_d = 0, table_r = 0;
  std::optional<std::uint32_t> uncovered;
  std::int64_t singleton_rhs = 0;
  bool d_optimal = false;
  KOptResult k_opt;

  bool matches_table() const;
  bool pass() const;
};

struct LrcTable {
  std::vector<LrcRow> rows;
  bool pass() const;
};

// Every table family (and its dual) instantiated at each admissible m in
// [m_lo, m_hi].
LrcTable lrc_table_report(int m_lo, int m_hi, const Budget& budget = {});

}  // namespace nmds
