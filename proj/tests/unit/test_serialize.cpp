#include <doctest.h>

#include "nmds/errors.hpp"
#include "nmds/serialize.hpp"

using namespace nmds;

TEST_CASE("weight distribution round trip with decimal strings") {
  auto wd = WeightDistribution::zero(7, 3, 8);
  wd.counts[0] = 1;
  wd.counts[4] = 49;
  wd.counts[6] = 294;
  wd.counts[7] = 168;
  const auto j = to_json(wd);
  CHECK(j["counts"][1][0] == "4");
  CHECK(j["counts"][1][1] == "49");
  CHECK(weight_distribution_from_json(j) == wd);
  CHECK(weight_distribution_from_json(Json::parse(j.dump())) == wd);
}

TEST_CASE("design JSON is 1-based with repetition") {
  const auto d = Design::from_blocks(4, 2, std::vector<Block>{{0, 1}, {0, 1}, {2, 3}});
  const auto j = to_json(d);
  CHECK(j["blocks"].size() == 3);
  CHECK(j["blocks"][0] == Json::array({1, 2}));
  CHECK(design_from_json(j).blocks == d.blocks);
  CHECK_THROWS_AS(design_from_json(Json::parse(R"({"n":4,"w":2,"blocks":[[0,1]]})")), PreconditionError);
}

TEST_CASE("matrix JSON carries the field") {
  const auto f = make_field(4, 25);
  const auto m = Matrix::from_rows(f, {{1, 2, 3}, {4, 5, 6}});
  const auto j = to_json(m);
  CHECK(j["modulus"] == 25);
  const auto back = matrix_from_json(j);
  CHECK(back == m);
  CHECK(back.field().modulus() == 25);
}

TEST_CASE("family spec parsing") {
  const auto s = family_spec_from_json(
      Json::parse(R"({"family":"G3","m":5,"exponents":[1,2,4],"extended":true,"h":null})"));
  CHECK(s.family == Family::G3);
  CHECK(s.extended);
  CHECK(s.exponents == std::vector<int>{1, 2, 4});
  CHECK(family_spec_from_json(to_json(s)).name() == s.name());
  CHECK_THROWS_AS(family_spec_from_json(Json::parse(R"({"family":"G3"})")), PreconditionError);
  CHECK_THROWS_AS(family_spec_from_json(Json::parse(R"({"family":"G2","m":4,"exponents":[1,3]})")),
                  PreconditionError);
}

TEST_CASE("envelope and reports") {
  const auto j = envelope("x", {{"a", 1}});
  CHECK(j["schema"] == "1");
  CHECK(j.begin().key() == "schema");
  const auto r = verify_family({Family::D, 3, 1, {}, false}, make_field(3));
  const auto rj = to_json(r);
  CHECK(rj["pass"] == true);
  CHECK(rj["weight_distribution"]["counts"].size() == 4);
  const auto t = lrc_table_report(3, 3);
  const auto csv = lrc_csv(t);
  CHECK(csv.rfind("family,m,n,k,d,q,r,d_opt,k_opt,bound_details\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
}
