#include <doctest.h>

#include "nmds/errors.hpp"
#include "nmds/lemmas.hpp"

using namespace nmds;

// Per-tuple histograms frozen from tests/oracle/oracle.py, which expands
// every determinant by cofactors.
TEST_CASE("counting lemmas at small q match the oracle") {
  auto r = verify_counting_lemma("L4.3", make_field(3));
  CHECK(r.pass);
  CHECK(r.cases == 21);
  CHECK(r.observed == "rows {0,2,3,4}: 2 (x21 tuples)");
  r = verify_counting_lemma("L4.3", make_field(4));
  CHECK(r.observed == "rows {0,2,3,4}: 6 (x105 tuples)");
  r = verify_counting_lemma("L5.3", make_field(4));
  CHECK(r.observed == "rows {0,1,2,3,5}: 16 (x105 tuples)");
  r = verify_counting_lemma("L4.1", make_field(5));
  CHECK(r.pass);
  CHECK(r.observed == "rows {0,1,3,4}: 12 (x465 tuples)");
  CHECK(r.cross_checked > 465 * 12);
  REQUIRE(r.details.size() == 1);
  CHECK(r.details[0].find("observed count implies 28830") != std::string::npos);
}

TEST_CASE("a published count that contradicts the enumerator is reported as failing") {
  const auto r = verify_counting_lemma("L6.4", make_field(5));
  CHECK_FALSE(r.pass);
  CHECK(r.observed == "rows {0,1,2,4,5,6}: 702 (x465 tuples)");
  CHECK(r.counterexamples.size() == LemmaReport::kMaxCounterexamples);
  REQUIRE(r.details.size() == 1);
  CHECK(r.details[0].find("enumerator A_25 = 674622") != std::string::npos);
  CHECK(r.details[0].find("observed count implies 674622") != std::string::npos);
}

TEST_CASE("two-matrix lemma counts both matrices") {
  const auto r = verify_counting_lemma("L6.1", make_field(4));
  CHECK(r.pass);
  CHECK(r.cases == 210);
  CHECK(r.expected == "(q-4)(q-6)(q-8)/24 = 40");
}

TEST_CASE("extended-domain lemma includes zero") {
  const auto r = verify_counting_lemma("L6.2", make_field(4));
  CHECK(r.pass);
  CHECK(r.cases == 560);  // C(16, 3)
}

TEST_CASE("hypotheses and ids") {
  CHECK_THROWS_AS(verify_counting_lemma("L4.1", make_field(4)), PreconditionError);
  CHECK_THROWS_AS(verify_counting_lemma("L9.9", make_field(5)), PreconditionError);
  CHECK_THROWS_AS(verify_field_lemma("nope", 2, 3), PreconditionError);
  CHECK(canonical_lemma_id("lem-ab") == "L2.15");
  CHECK(canonical_lemma_id("L4.1") == "L4.1");
  CHECK(counting_lemma_ids().size() == 11);
  CHECK(field_lemma_ids().size() == 13);
}

TEST_CASE("field lemma suites at small m") {
  for (const auto& id : field_lemma_ids()) {
    const auto r = verify_field_lemma(id, 2, 4, 1, 4);
    CHECK_MESSAGE(r.pass, id << ": " << r.observed);
    CHECK(r.cases > 0);
  }
  const auto ab = verify_field_lemma("lem-ab", 5, 5);
  CHECK(ab.pass);
  CHECK(ab.cases == 32 * 31 / 2);
  const auto s = verify_field_lemma("lem-s", 4, 4);
  CHECK(s.cases == 30);
}

TEST_CASE("lemma without admissible parameters fails rather than passing vacuously") {
  const auto r = verify_field_lemma("L2.15", 2, 2);
  CHECK_FALSE(r.pass);
}

TEST_CASE("conjecture instance") {
  const auto r = verify_conjecture(4, 5);
  CHECK(r.pass);
  CHECK(r.details.size() == 2);
  CHECK_THROWS_AS(verify_conjecture(4, 3), PreconditionError);
  CHECK_THROWS_AS(verify_conjecture(3, 7), PreconditionError);
}
