#include <doctest.h>

#include <cmath>
#include <random>

#include "nmds/code.hpp"
#include "nmds/constructions.hpp"
#include "nmds/errors.hpp"

using namespace nmds;

namespace {

LinearCode family(Family fam, int m, std::optional<int> h, std::vector<int> e = {}, bool ext = false) {
  return build_family({fam, m, h, std::move(e), ext}, make_field(m));
}

WeightDistribution wd_of(std::size_t n, std::size_t k, std::uint32_t q,
                         std::initializer_list<std::pair<std::size_t, long long>> counts) {
  auto wd = WeightDistribution::zero(n, k, q);
  for (auto [w, a] : counts) wd.counts[w] = a;
  return wd;
}

LinearCode random_code(const FieldPtr& f, std::size_t k, std::size_t n, std::mt19937& rng) {
  for (;;) {
    Matrix g(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) g.at(i, j) = rng() % f->q();
    try {
      return LinearCode::from_generator(g);
    } catch (const PreconditionError&) {
    }
  }
}

}  // namespace

// Frozen from tests/oracle/oracle.py (naive enumeration over all messages).
TEST_CASE("exhaustive distributions match the oracle") {
  CHECK(weight_distribution_exhaustive(family(Family::D, 3, 1)) ==
        wd_of(7, 3, 8, {{0, 1}, {4, 49}, {6, 294}, {7, 168}}));
  CHECK(weight_distribution_exhaustive(family(Family::H, 3, 1)) ==
        wd_of(7, 3, 8, {{0, 1}, {4, 49}, {6, 294}, {7, 168}}));
  CHECK(weight_distribution_exhaustive(family(Family::D, 3, 2)) ==
        wd_of(7, 3, 8, {{0, 1}, {4, 49}, {6, 294}, {7, 168}}));
  CHECK(weight_distribution_exhaustive(family(Family::D, 4, 1)) ==
        wd_of(15, 3, 16, {{0, 1}, {12, 525}, {14, 2250}, {15, 1320}}));
  CHECK(weight_distribution_exhaustive(family(Family::G2, 4, std::nullopt, {2, 3})) ==
        wd_of(15, 4, 16, {{0, 1}, {11, 1575}, {12, 525}, {13, 15750}, {14, 22050}, {15, 25635}}));
  CHECK(weight_distribution_exhaustive(family(Family::D, 3, 1).dual()) ==
        wd_of(7, 4, 8, {{0, 1}, {3, 49}, {4, 49}, {5, 882}, {6, 1470}, {7, 1645}}));
}

TEST_CASE("generator validation and budget refusal") {
  const auto f = make_field(3);
  CHECK_THROWS_AS(LinearCode::from_generator(Matrix::from_rows(f, {{1, 2, 3}, {2, 4, 6}})),
                  PreconditionError);
  Budget tiny;
  tiny.codewords = 100;
  CHECK_THROWS_AS(weight_distribution_exhaustive(family(Family::D, 3, 1), tiny), BudgetExceeded);
  try {
    weight_distribution_exhaustive(family(Family::D, 3, 1), tiny);
  } catch (const BudgetExceeded& e) {
    CHECK(e.requested() == 512);
    CHECK(e.limit() == 100);
  }
}

TEST_CASE("three-way agreement on random codes (property)") {
  std::mt19937 rng(2024);
  for (int m : {2, 3, 4}) {
    const auto f = make_field(m);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = 3 + rng() % 6;
      const std::size_t k = 1 + rng() % (n - 1);
      if (std::pow(double(f->q()), double(n - k)) > 1e6 || std::pow(double(f->q()), double(k)) > 1e6) continue;
      const auto code = random_code(f, k, n, rng);
      const auto wd = weight_distribution_exhaustive(code);
      const auto dual = weight_distribution_exhaustive(code.dual());
      REQUIRE(macwilliams_transform(wd) == dual);
      REQUIRE(macwilliams_transform(dual) == wd);
      REQUIRE(wd.total() == pow_big(BigInt(f->q()), unsigned(k)));
    }
  }
}

TEST_CASE("classification of NMDS and MDS codes") {
  const auto c = nmds_classify(family(Family::D, 4, 1));
  CHECK(c.label == CodeLabel::NMDS);
  CHECK(c.d == 12);
  CHECK(c.d_dual == 3);
  CHECK(c.d_exact);
  // A Reed-Solomon code is MDS.
  const auto f = make_field(3);
  std::vector<Vector> rows(3, Vector(7));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 7; ++j) rows[i][j] = f->pow(f->exp(j), i);
  const auto rs = nmds_classify(LinearCode::from_generator(Matrix::from_rows(f, rows)));
  CHECK(rs.label == CodeLabel::MDS);
  CHECK(rs.d == 5);
}

TEST_CASE("minimum-weight supports are complementary") {
  const auto code = family(Family::G2, 4, std::nullopt, {2, 3});
  const auto s = min_weight_supports(code);
  REQUIRE_FALSE(s.violation);
  CHECK(s.dual.size() == 105);  // 1575 / 15
  for (std::size_t i = 0; i < s.dual.size(); ++i) {
    CHECK(s.dual[i].size() == 4);
    CHECK(s.primal[i].size() == 11);
  }
  const auto w4 = fixed_weight_dual_supports(family(Family::D, 3, 1), 4);
  std::uint64_t blocks = 0;
  for (const auto& e : w4) blocks += e.second;
  CHECK(blocks == 7);  // A^perp_4 / (q-1) = 49 / 7
}

TEST_CASE("NMDS completions") {
  const auto wd = complete_weight_distribution_nmds(7, 3, 8, 49);
  CHECK(wd == wd_of(7, 3, 8, {{0, 1}, {4, 49}, {6, 294}, {7, 168}}));
  const auto dual = complete_dual_distribution_nmds(15, 4, 16, 1575);
  CHECK(dual.counts[4] == 1575);
  CHECK(macwilliams_transform(dual) == complete_weight_distribution_nmds(15, 4, 16, 1575));
  CHECK_THROWS_AS(complete_weight_distribution_nmds(7, 3, 8, 50), InconsistencyError);
}

TEST_CASE("Pless moments and Assmus-Mattson") {
  const auto wd = weight_distribution_exhaustive(family(Family::H4, 4, std::nullopt, {1, 2, 3, 4}));
  const auto p = pless_moment_check(wd);
  CHECK(p.pass);
  for (const auto& r : p.residuals) CHECK(r == 0);
  // (2,3,4) at q=16 has more nonzero weights in [1, n-2] than d^perp - 2.
  const auto g3 = weight_distribution_exhaustive(family(Family::G3, 4, std::nullopt, {2, 3, 4}));
  CHECK_FALSE(assmus_mattson_check(g3, macwilliams_transform(g3), 2));
  CHECK_THROWS_AS(assmus_mattson_check(g3, macwilliams_transform(g3), 6), PreconditionError);
  auto broken = wd;
  broken.counts[wd.n] += 1;
  CHECK_THROWS_AS(macwilliams_transform(broken), PreconditionError);
}

TEST_CASE("worker count does not change results") {
  const auto code = family(Family::G3, 4, std::nullopt, {1, 2, 3});
  Budget one, four;
  one.workers = 1;
  four.workers = 4;
  CHECK(weight_distribution_exhaustive(code, one) == weight_distribution_exhaustive(code, four));
  const auto a = min_weight_supports(code, one), b = min_weight_supports(code, four);
  CHECK(a.dual == b.dual);
  CHECK(a.primal == b.primal);
}
