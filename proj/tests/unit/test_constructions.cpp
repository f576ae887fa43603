#include <doctest.h>

#include "nmds/constructions.hpp"
#include "nmds/errors.hpp"

using namespace nmds;

namespace {

FamilySpec tuple(Family f, int m, std::vector<int> e, bool ext = false) {
  return {f, m, std::nullopt, std::move(e), ext};
}

}  // namespace

TEST_CASE("hypotheses are enforced") {
  CHECK_THROWS_AS(tuple(Family::G2, 4, {1, 3}).validate(), PreconditionError);
  CHECK_THROWS_AS(tuple(Family::G3, 3, {2, 3, 4}).validate(), PreconditionError);
  CHECK_THROWS_AS(tuple(Family::G3, 5, {1, 3, 4}, true).validate(), PreconditionError);
  CHECK_THROWS_AS(FamilySpec({Family::D, 4, 2, {}, false}).validate(), PreconditionError);
  CHECK_THROWS_AS(FamilySpec({Family::D, 4, std::nullopt, {}, false}).validate(), PreconditionError);
  CHECK_THROWS_AS(parse_family("X"), PreconditionError);
  CHECK_NOTHROW(tuple(Family::H4, 5, {1, 2, 4, 5}, true).validate());
  CHECK(parse_family("G3") == Family::G3);
}

TEST_CASE("row exponents") {
  CHECK(FamilySpec({Family::D, 5, 2, {}, false}).row_exponents() == std::vector<std::uint32_t>{0, 1, 5});
  CHECK(FamilySpec({Family::H, 5, 2, {}, false}).row_exponents() == std::vector<std::uint32_t>{0, 4, 5});
  CHECK(tuple(Family::G3, 5, {1, 2, 4}).row_exponents() == std::vector<std::uint32_t>{0, 1, 2, 4, 5});
  CHECK(tuple(Family::CONJ, 4, {6}).row_exponents() == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 6});
}

TEST_CASE("closed forms evaluate exactly") {
  const auto p = expected_profile({Family::D, 3, 1, {}, false});
  CHECK(p.n == 7);
  CHECK(p.d == 4);
  REQUIRE(p.enumerator.size() == 3);
  const auto p2 = expected_profile(tuple(Family::G2, 5, {1, 3}));
  bool found = false;
  for (const auto& [w, a] : p2.enumerator) found = found || (w == 27 && a == 28830);
  CHECK(found);
  const auto p3 = expected_profile(tuple(Family::G2, 4, {2, 3}));
  CHECK(p3.enumerator.front().second == 1575);
}

TEST_CASE("verification of a small family passes every check") {
  const auto r = verify_family({Family::D, 3, 1, {}, false}, make_field(3), {}, ExhaustivePolicy::Always);
  CHECK(r.pass());
  REQUIRE(r.exhaustive);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name);
  CHECK(r.designs.size() == 3);
}

TEST_CASE("extended code parameters") {
  const auto r = verify_family(tuple(Family::H4, 4, {1, 2, 3, 4}, true), make_field(4), {},
                               ExhaustivePolicy::Never);
  CHECK(r.pass());
  CHECK(r.completed.n == 16);
  CHECK(r.code_class.d == 10);
  bool t3_96 = false, t3_16 = false;
  for (const auto& d : r.designs) {
    t3_96 = t3_96 || (d.verdict.t == 3 && d.expected.w == 10 && d.verdict.lambda == BigInt(96));
    t3_16 = t3_16 || (d.verdict.t == 3 && d.expected.w == 6 && d.verdict.lambda == BigInt(16));
  }
  CHECK(t3_96);
  CHECK(t3_16);
}

TEST_CASE("enumerators do not depend on the modulus") {
  for (auto [m, mods] : {std::pair{4, std::pair{19u, 25u}}, std::pair{5, std::pair{37u, 41u}}}) {
    const auto spec = m == 4 ? tuple(Family::G3, 4, {2, 3, 4}) : tuple(Family::G3, 5, {1, 3, 4});
    const auto a = verify_family(spec, make_field(m, mods.first), {}, ExhaustivePolicy::Never);
    const auto b = verify_family(spec, make_field(m, mods.second), {}, ExhaustivePolicy::Never);
    CHECK(a.pass());
    CHECK(b.pass());
    CHECK(a.completed == b.completed);
  }
}

TEST_CASE("field degree must match") {
  CHECK_THROWS_AS(build_family({Family::D, 3, 1, {}, false}, make_field(4)), PreconditionError);
}
