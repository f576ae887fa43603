#include "nmds/serialize.hpp"

#include <sstream>

#include "nmds/errors.hpp"

namespace nmds {

namespace {

std::string str(const BigInt& v) { return to_string(v); }

BigInt parse_big(const Json& j) {
  if (!j.is_string()) throw PreconditionError("expected a decimal string");
  try {
    return BigInt(j.get<std::string>());
  } catch (const std::exception&) {
    throw PreconditionError("malformed integer '" + j.get<std::string>() + "'");
  }
}

template <class T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw PreconditionError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("bad value for '") + key + "': " + e.what());
  }
}

Json block_json(const Block& b) {
  Json a = Json::array();
  for (auto p : b) a.push_back(p + 1);
  return a;
}

Json checks_json(const std::vector<Check>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) a.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return a;
}

}  // namespace

Json to_json(const WeightDistribution& wd) {
  Json counts = Json::array();
  for (std::size_t i = 0; i < wd.counts.size(); ++i) {
    if (wd.counts[i] != 0) counts.push_back({std::to_string(i), str(wd.counts[i])});
  }
  return {{"n", wd.n}, {"k", wd.k}, {"q", wd.q}, {"counts", counts}};
}

WeightDistribution weight_distribution_from_json(const Json& j) {
  auto wd = WeightDistribution::zero(get<std::size_t>(j, "n"), get<std::size_t>(j, "k"),
                                     get<std::uint32_t>(j, "q"));
  for (const auto& e : get<Json>(j, "counts")) {
    if (!e.is_array() || e.size() != 2) throw PreconditionError("counts entries are [i, A_i]");
    const BigInt i = parse_big(e[0]);
    if (i < 0 || i > wd.n) throw PreconditionError("weight out of range");
    wd.counts[static_cast<std::size_t>(i)] = parse_big(e[1]);
  }
  return wd;
}

Json to_json(const Design& d) {
  Json blocks = Json::array();
  for (const auto& [b, mult] : d.blocks)
    for (std::uint64_t i = 0; i < mult; ++i) blocks.push_back(block_json(b));
  return {{"n", d.n}, {"w", d.w}, {"blocks", blocks}};
}

Design design_from_json(const Json& j) {
  const auto n = get<std::size_t>(j, "n");
  const auto w = get<std::size_t>(j, "w");
  std::vector<Block> blocks;
  for (const auto& b : get<Json>(j, "blocks")) {
    Block block;
    for (const auto& p : b) {
      const auto v = p.get<std::int64_t>();
      if (v < 1) throw PreconditionError("block indices are 1-based");
      block.push_back(static_cast<std::uint32_t>(v - 1));
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return Design::from_blocks(n, w, blocks);
}

Json to_json(const DesignVerdict& v) {
  Json j = {{"t", v.t},
            {"lambda", v.lambda ? Json(str(*v.lambda)) : Json(nullptr)},
            {"simple", v.simple},
            {"steiner", v.steiner},
            {"b", str(v.b)}};
  if (v.witness) j["witness"] = block_json(*v.witness);
  return j;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
    rows.push_back(row);
  }
  return {{"m", m.field().m()}, {"modulus", m.field().modulus()}, {"rows", rows}};
}

Matrix matrix_from_json(const Json& j) {
  const auto field = make_field(get<int>(j, "m"), get<std::uint32_t>(j, "modulus"));
  std::vector<Vector> rows;
  for (const auto& r : get<Json>(j, "rows")) {
    Vector row;
    for (const auto& e : r) {
      const auto v = e.get<std::int64_t>();
      if (v < 0 || v >= field->q()) throw PreconditionError("element outside [0, q)");
      row.push_back(static_cast<Element>(v));
    }
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(field, rows);
}

Json to_json(const FamilySpec& s) {
  return {{"family", to_string(s.family)},
          {"m", s.m},
          {"exponents", s.exponents},
          {"extended", s.extended},
          {"h", s.h ? Json(*s.h) : Json(nullptr)}};
}

FamilySpec family_spec_from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("family spec must be a JSON object");
  FamilySpec s;
  s.family = parse_family(get<std::string>(j, "family"));
  s.m = get<int>(j, "m");
  if (j.contains("exponents") && !j["exponents"].is_null()) s.exponents = get<std::vector<int>>(j, "exponents");
  if (j.contains("extended") && !j["extended"].is_null()) s.extended = get<bool>(j, "extended");
  if (j.contains("h") && !j["h"].is_null()) s.h = get<int>(j, "h");
  s.validate();
  return s;
}

Json field_summary(const Field& f) {
  Json exp = Json::array();
  for (Element i = 0; i < f.order(); ++i) exp.push_back(f.exp(i));
  return {{"m", f.m()}, {"q", f.q()}, {"modulus", f.modulus()}, {"alpha", f.alpha()},
          {"exp", exp}};
}

Json to_json(const CodeClass& c) {
  return {{"d", c.d}, {"d_dual", c.d_dual}, {"d_exact", c.d_exact}, {"label", to_string(c.label)}};
}

Json to_json(const VerificationReport& r) {
  Json designs = Json::array();
  for (const auto& d : r.designs) {
    Json e = {{"source", to_string(d.expected.source)},
              {"t", d.expected.t},
              {"w", d.expected.w},
              {"expected_lambda", d.expected.lambda ? Json(str(*d.expected.lambda)) : Json(nullptr)},
              {"verdict", to_json(d.verdict)}};
    if (d.from_weights) e["from_weights"] = {{"b", str(d.from_weights->b)}, {"lambda", str(d.from_weights->lambda)}};
    designs.push_back(e);
  }
  Json am = Json::array();
  for (const auto& [t, v] : r.assmus_mattson) am.push_back({{"t", t}, {"holds", v ? Json(*v) : Json(nullptr)}});
  Json j = {{"spec", to_json(r.spec)},
            {"name", r.spec.name()},
            {"q", r.q},
            {"modulus", r.modulus},
            {"class", to_json(r.code_class)},
            {"weight_distribution", to_json(r.completed)},
            {"dual_weight_distribution", to_json(r.dual)},
            {"exhaustive", r.exhaustive ? to_json(*r.exhaustive) : Json(nullptr)},
            {"designs", designs},
            {"assmus_mattson", am},
            {"checks", checks_json(r.checks)},
            {"pass", r.pass()}};
  return j;
}

Json to_json(const LemmaReport& r) {
  return {{"lemma_id", r.lemma_id},
          {"params", r.params},
          {"expected", r.expected},
          {"observed", r.observed},
          {"pass", r.pass},
          {"cases", std::to_string(r.cases)},
          {"cross_checked", std::to_string(r.cross_checked)},
          {"counterexamples", r.counterexamples},
          {"details", r.details}};
}

Json to_json(const LrcRow& r) {
  return {{"family", r.family},
          {"m", r.m},
          {"n", r.n},
          {"k", r.k},
          {"d", r.d},
          {"q", r.q},
          {"r", r.r ? Json(*r.r) : Json(nullptr)},
          {"table", {{"n", r.table_n}, {"k", r.table_k}, {"d", r.table_d}, {"r", r.table_r}}},
          {"uncovered", r.uncovered ? Json(*r.uncovered + 1) : Json(nullptr)},
          {"singleton_like_rhs", r.singleton_rhs},
          {"d_opt", r.d_optimal},
          {"k_opt", to_string(r.k_opt.verdict)},
          {"cm_bound", r.k_opt.bound},
          {"estimator", r.k_opt.estimator},
          {"bound_details", r.k_opt.details},
          {"pass", r.pass()}};
}

Json to_json(const LrcTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(to_json(r));
  return {{"rows", rows}, {"pass", t.pass()}};
}

std::string lrc_csv(const LrcTable& t) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "family,m,n,k,d,q,r,d_opt,k_opt,bound_details\n";
  for (const auto& r : t.rows) {
    os << quote(r.family) << ',' << r.m << ',' << r.n << ',' << r.k << ',' << r.d << ',' << r.q
       << ',' << (r.r ? std::to_string(*r.r) : "") << ',' << (r.d_optimal ? "true" : "false")
       << ',' << to_string(r.k_opt.verdict) << ','
       << quote("B=" + std::to_string(r.k_opt.bound) + " at t=" + std::to_string(r.k_opt.argmin_t) +
                " [" + r.k_opt.estimator + "] " + r.k_opt.details)
       << '\n';
  }
  return os.str();
}

Json envelope(const std::string& kind, Json payload) {
  Json j = {{"schema", kSchemaVersion}, {"kind", kind}};
  for (auto& [key, value] : payload.items()) j[key] = value;
  return j;
}

}  // namespace nmds
