#pragma once

#include <string>

#include <json.hpp>

#include "nmds/code.hpp"
#include "nmds/constructions.hpp"
#include "nmds/design.hpp"
#include "nmds/gf.hpp"
#include "nmds/lemmas.hpp"
#include "nmds/lrc.hpp"
#include "nmds/matrix.hpp"

namespace nmds {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Counts are decimal strings throughout; block indices are 1-based.
Json to_json(const WeightDistribution& wd);
WeightDistribution weight_distribution_from_json(const Json& j);

Json to_json(const Design& d);
Design design_from_json(const Json& j);
Json to_json(const DesignVerdict& v);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const FamilySpec& s);
// {"family":"G3","m":5,"exponents":[1,2,4],"extended":true,"h":null}; missing
// optional keys take their defaults. PreconditionError on malformed input.
FamilySpec family_spec_from_json(const Json& j);

Json field_summary(const Field& f);
Json to_json(const CodeClass& c);
Json to_json(const VerificationReport& r);
Json to_json(const LemmaReport& r);
Json to_json(const LrcRow& r);
Json to_json(const LrcTable& t);
std::string lrc_csv(const LrcTable& t);

// Wraps a payload as {"schema":"1", "kind":kind, ...payload}.
Json envelope(const std::string& kind, Json payload);

}  // namespace nmds
