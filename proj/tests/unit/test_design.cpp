#include <doctest.h>

#include "nmds/code.hpp"
#include "nmds/constructions.hpp"
#include "nmds/design.hpp"
#include "nmds/errors.hpp"

using namespace nmds;

namespace {

// Fano plane, 0-based.
std::vector<Block> fano() {
  return {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
}

}  // namespace

TEST_CASE("Fano plane is a Steiner 2-(7,3,1) design") {
  const auto d = Design::from_blocks(7, 3, fano());
  const auto v = verify_t_design(d, 2);
  REQUIRE(v.lambda);
  CHECK(*v.lambda == 1);
  CHECK(v.steiner);
  CHECK(v.simple);
  CHECK(v.b == 7);
  const auto v3 = verify_t_design(d, 3);
  CHECK_FALSE(v3.lambda);
  REQUIRE(v3.witness);
  CHECK(v3.witness->size() == 3);
}

TEST_CASE("removing a block breaks the design and yields a witness") {
  auto blocks = fano();
  blocks.pop_back();
  const auto v = verify_t_design(Design::from_blocks(7, 3, blocks), 2);
  CHECK_FALSE(v.lambda);
  CHECK(v.witness);
}

TEST_CASE("repeated blocks keep multiplicity") {
  auto blocks = fano();
  const auto twice = [&] {
    auto b = blocks;
    b.insert(b.end(), blocks.begin(), blocks.end());
    return b;
  }();
  const auto v = verify_t_design(Design::from_blocks(7, 3, twice), 2);
  CHECK(*v.lambda == 2);
  CHECK_FALSE(v.simple);
  CHECK_FALSE(v.steiner);
}

TEST_CASE("complementary design parameters") {
  const auto d = Design::from_blocks(7, 3, fano());
  const auto c = complementary_design(d, verify_t_design(d, 2));
  CHECK(c.design.w == 4);
  CHECK(c.expected_lambda == 2);  // 1 * C(5,3) / C(5,1)
  CHECK(*verify_t_design(c.design, 2).lambda == 2);
}

TEST_CASE("design parameters from a weight count") {
  // A_27 = 28830 for (1,3) at q=32 gives the primal 2-(31,27,702) design.
  const auto p = expected_design_params(28830, 31, 27, 2, 32);
  CHECK(p.b == 930);
  CHECK(p.lambda == 702);
  CHECK_THROWS_AS(expected_design_params(28831, 31, 27, 2, 32), InconsistencyError);
  CHECK_THROWS_AS(expected_design_params(0, 31, 27, 2, 32), PreconditionError);
}

TEST_CASE("block validation") {
  CHECK_THROWS_AS(Design::from_blocks(7, 3, std::vector<Block>{{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(Design::from_blocks(7, 3, std::vector<Block>{{0, 1, 7}}), PreconditionError);
  CHECK_THROWS_AS(Design::from_blocks(7, 3, std::vector<Block>{{2, 1, 0}}), PreconditionError);
  CHECK_THROWS_AS(verify_t_design(Design::from_blocks(7, 3, fano()), 4), PreconditionError);
}

TEST_CASE("sharded verification is independent of worker count") {
  const auto code = build_family({Family::G2, 5, std::nullopt, {1, 3}, false}, make_field(5));
  const auto s = min_weight_supports(code);
  const auto d = Design::from_blocks(31, 27, s.primal);
  const auto a = verify_t_design(d, 2, 1), b = verify_t_design(d, 2, 3);
  CHECK(a.lambda == b.lambda);
  CHECK(*a.lambda == 702);
}
