#include <doctest.h>

#include "nmds/constructions.hpp"
#include "nmds/errors.hpp"
#include "nmds/lrc.hpp"

using namespace nmds;

TEST_CASE("Singleton-like bound") {
  CHECK(singleton_like_rhs(7, 3, 2) == 4);
  CHECK(verify_d_optimal(7, 3, 4, 2));
  CHECK(verify_d_optimal(31, 5, 26, 4));
  CHECK_FALSE(verify_d_optimal(7, 3, 3, 2));
  CHECK_THROWS_AS(verify_d_optimal(7, 3, 5, 2), InconsistencyError);
  CHECK_THROWS_AS(singleton_like_rhs(7, 3, 0), PreconditionError);
}

TEST_CASE("Cadambe-Mazumdar bound with the Singleton estimator") {
  auto r = verify_k_optimal(7, 3, 4, 8, 2);
  CHECK(r.bound == 3);
  CHECK(r.argmin_t == 1);
  CHECK(r.verdict == KOptimality::Certified);
  r = verify_k_optimal(15, 4, 11, 16, 3);
  CHECK(r.bound == 4);
  CHECK(r.verdict == KOptimality::Certified);
  // A weaker estimator cannot certify.
  auto loose = [](std::size_t n, std::size_t, std::uint32_t) -> std::uint64_t { return n; };
  r = verify_k_optimal(7, 3, 4, 8, 2, loose, "trivial");
  CHECK(r.verdict == KOptimality::Inconclusive);
  CHECK(r.estimator == "trivial");
  // Degenerate: every admissible t leaves fewer than d coordinates.
  CHECK(singleton_k_opt(2, 5, 8) == 0);
}

TEST_CASE("minimum locality") {
  const auto code = build_family({Family::D, 3, 1, {}, false}, make_field(3));
  CHECK(minimum_locality(code).r == std::size_t{2});
  CHECK(minimum_locality(code.dual()).r == std::size_t{3});
  const auto ext = build_family({Family::H4, 4, std::nullopt, {1, 2, 3, 4}, true}, make_field(4));
  CHECK(minimum_locality(ext).r == std::size_t{5});
  const auto uncovered = minimum_locality(5, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(uncovered.r);
  CHECK(uncovered.uncovered == std::uint32_t{4});
  const auto uneven = minimum_locality(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(uneven.r);
  CHECK_FALSE(uneven.uncovered);
}

TEST_CASE("table rows at m=3 and m=5") {
  const auto t3 = lrc_table_report(3, 3);
  CHECK(t3.pass());
  CHECK(t3.rows.size() == 10);  // D, H for h=1,2 and (2,3), each with its dual
  const auto t5 = lrc_table_report(5, 5);
  CHECK(t5.pass());
  bool found = false;
  for (const auto& r : t5.rows) {
    if (r.family == "H4 (1,2,4,5) m=5") {
      found = true;
      CHECK(r.r == std::size_t{5});
      CHECK(r.d == 25);
    }
  }
  CHECK(found);
}
