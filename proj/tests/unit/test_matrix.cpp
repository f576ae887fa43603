#include <doctest.h>

#include <random>

#include "nmds/bigint.hpp"
#include "nmds/combinatorics.hpp"
#include "nmds/errors.hpp"
#include "nmds/matrix.hpp"

using namespace nmds;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng() % f->q();
  return m;
}

}  // namespace

TEST_CASE("rank-nullity and null vectors (property)") {
  std::mt19937 rng(11);
  for (int m : {2, 3, 4, 8}) {
    const auto f = make_field(m);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 8;
      auto a = random_matrix(f, r, c, rng);
      if (trial % 3 == 0 && r > 1) {  // force a dependent row
        for (std::size_t j = 0; j < c; ++j) a.at(r - 1, j) = a.at(0, j) ^ f->mul(3 % f->q(), a.at(0, j));
      }
      const auto rn = rank_and_nullspace(a);
      REQUIRE(rn.rank + rn.basis.size() == c);
      REQUIRE(rank(a) == rn.rank);
      REQUIRE(rank(a.transpose()) == rn.rank);
      for (const auto& v : rn.basis) {
        for (auto x : a.apply(v)) REQUIRE(x == 0);
      }
    }
  }
}

TEST_CASE("determinant is multiplicative and vanishes exactly on rank deficiency") {
  std::mt19937 rng(5);
  const auto f = make_field(4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto a = random_matrix(f, n, n, rng);
    REQUIRE((determinant(a) == 0) == (rank(a) < n));
    REQUIRE(determinant(a) == determinant(a.transpose()));
  }
  CHECK(determinant(Matrix::identity(f, 4)) == 1);
  CHECK_THROWS_AS(determinant(Matrix(f, 2, 3)), PreconditionError);
  CHECK_THROWS_AS(Matrix(f, 1, 1, {16}), PreconditionError);
}

TEST_CASE("column rank without materialization") {
  std::mt19937 rng(3);
  const auto f = make_field(3);
  const auto a = random_matrix(f, 3, 7, rng);
  std::vector<std::uint32_t> all{0, 1, 2, 3, 4, 5, 6};
  for_each_subset(all, 3, [&](std::span<const std::uint32_t> cols) {
    REQUIRE(column_rank(a, cols) == rank(a.select_columns(cols)));
  });
}

TEST_CASE("elementary symmetric polynomials") {
  const auto f = Field::build(3);
  const Element a = 1, b = f.alpha(), c = f.mul(f.alpha(), f.alpha());
  const Vector v{a, b, c};
  CHECK(elementary_symmetric(f, v, 0) == 1);
  CHECK(elementary_symmetric(f, v, 1) == (a ^ b ^ c));
  CHECK(elementary_symmetric(f, v, 2) == (f.mul(a, b) ^ f.mul(a, c) ^ f.mul(b, c)));
  CHECK(elementary_symmetric(f, v, 3) == f.mul(a, f.mul(b, c)));
  CHECK_THROWS_AS(elementary_symmetric(f, v, 4), PreconditionError);
  const auto all = elementary_symmetric_all(f, v);
  for (std::size_t j = 0; j <= 3; ++j) CHECK(all[j] == elementary_symmetric(f, v, j));
}

TEST_CASE("generalized Vandermonde closed form equals elimination") {
  const auto f = make_field(3);
  const Element a = f->alpha();
  const Vector v{a, f->pow(a, 2), f->pow(a, 3)};
  for (std::size_t l = 0; l <= 3; ++l) {
    CHECK(generalized_vandermonde_det(*f, v, l) == determinant(generalized_vandermonde_matrix(f, v, l)));
  }
  CHECK_THROWS_AS(generalized_vandermonde_det(*f, Vector{1, 1}, 0), PreconditionError);
  CHECK_THROWS_AS(generalized_vandermonde_det(*f, v, 4), PreconditionError);
}

TEST_CASE("power matrix rows") {
  const auto f = make_field(4);
  const std::vector<std::uint32_t> rows{0, 2, 3};
  const Vector pts{0, 1, 5};
  const auto m = power_matrix(f, rows, pts);
  CHECK(m.at(0, 0) == 1);  // 0^0 = 1
  CHECK(m.at(1, 0) == 0);
  CHECK(m.at(2, 2) == f->pow(5, 3));
}

TEST_CASE("colex ranking round trip (property)") {
  for (std::size_t t = 1; t <= 4; ++t) {
    const std::uint64_t count = binomial(12, t);
    std::vector<std::uint32_t> s(t);
    for (std::size_t i = 0; i < t; ++i) s[i] = static_cast<std::uint32_t>(i);
    std::uint64_t seen = 0;
    do {
      const auto r = colex_rank(s);
      REQUIRE(r < count);
      REQUIRE(colex_unrank(r, t) == s);
      ++seen;
    } while (next_combination(s, 12));
    CHECK(seen == count);
  }
  CHECK(binomial(31, 6) == 736281);
  CHECK(binomial(5, 7) == 0);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
  CHECK(binomial_big(200, 100) > BigInt(0));
}
