#include "suites.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "nmds/constructions.hpp"
#include "nmds/errors.hpp"
#include "nmds/lemmas.hpp"
#include "nmds/lrc.hpp"

namespace nmds::suites {

namespace {

using Clock = std::chrono::steady_clock;

FamilySpec spec_dh(Family f, int m, int h) { return {f, m, h, {}, false}; }
FamilySpec spec_tuple(Family f, int m, std::vector<int> e, bool ext = false) {
  return {f, m, std::nullopt, std::move(e), ext};
}

struct DesignClaim {
  std::size_t t, w;
  BigInt lambda;
};

struct FamilyClaim {
  FamilySpec spec;
  ExhaustivePolicy policy = ExhaustivePolicy::Auto;
  std::map<std::size_t, BigInt> weights;  // pinned A_w values
  std::vector<DesignClaim> designs;
  std::optional<std::array<std::size_t, 3>> nkd;
};

void fail(CriterionResult& res, std::string what) {
  res.pass = false;
  res.failures.push_back(std::move(what));
}

// Runs verify_family and the pinned claims on top of it; returns the report
// when verification itself did not throw.
std::optional<VerificationReport> check_family(CriterionResult& res, const FamilyClaim& c,
                                               const FieldPtr& field, const Budget& budget,
                                               bool require_exhaustive) {
  ++res.items;
  const std::string name = c.spec.name();
  VerificationReport r;
  try {
    r = verify_family(c.spec, field, budget, c.policy);
  } catch (const std::exception& e) {
    fail(res, name + ": " + e.what());
    return std::nullopt;
  }
  res.details.push_back(to_json(r));
  for (const auto& chk : r.checks) {
    if (!chk.pass) fail(res, name + ": " + chk.name + " failed (" + chk.detail + ")");
  }
  if (require_exhaustive && !r.exhaustive) fail(res, name + ": exhaustive enumeration did not run");
  const WeightDistribution& wd = r.exhaustive ? *r.exhaustive : r.completed;
  for (const auto& [w, a] : c.weights) {
    if (w >= wd.counts.size() || wd.counts[w] != a) {
      fail(res, name + ": A_" + std::to_string(w) + " != " + to_string(a));
    }
  }
  if (c.nkd) {
    const auto [n, k, d] = *c.nkd;
    if (wd.n != n || wd.k != k || r.code_class.d != d || !r.code_class.d_exact) {
      fail(res, name + ": parameters differ from [" + std::to_string(n) + "," +
                    std::to_string(k) + "," + std::to_string(d) + "]");
    }
  }
  for (const auto& dc : c.designs) {
    const bool found = std::any_of(r.designs.begin(), r.designs.end(), [&](const DesignReport& d) {
      return d.expected.t == dc.t && d.expected.w == dc.w && d.verdict.lambda &&
             *d.verdict.lambda == dc.lambda;
    });
    if (!found) {
      fail(res, name + ": no verified " + std::to_string(dc.t) + "-(" + std::to_string(wd.n) + "," +
                    std::to_string(dc.w) + "," + to_string(dc.lambda) + ") design");
    }
  }
  return r;
}

void run_families(CriterionResult& res, const std::vector<FamilyClaim>& claims,
                  const Budget& budget) {
  for (const auto& c : claims) {
    check_family(res, c, make_field(c.spec.m), budget, c.policy == ExhaustivePolicy::Always);
  }
}

void criterion1(CriterionResult& res, const Budget& budget) {
  std::vector<FamilyClaim> claims;
  for (int m = 3; m <= 5; ++m) {
    const long long q = 1LL << m;
    for (int h = 1; h < m; ++h) {
      if (std::gcd(h, m) != 1) continue;
      for (Family f : {Family::D, Family::H}) {
        FamilyClaim c{spec_dh(f, m, h), ExhaustivePolicy::Always};
        c.nkd = {{std::size_t(q - 1), 3, std::size_t(q - 4)}};
        if (m == 3) c.weights = {{4, 49}, {6, 294}, {7, 168}};
        c.designs = {{2, 3, 1},
                     {2, 4, BigInt((q - 4) * (q - 7) / 2)},
                     {2, std::size_t(q - 4), BigInt((q - 4) * (q - 5) / 6)}};
        claims.push_back(std::move(c));
      }
    }
  }
  run_families(res, claims, budget);
}

void criterion2(CriterionResult& res, const Budget& budget) {
  std::vector<FamilyClaim> claims;
  for (int m = 3; m <= 5; ++m) {
    const long long q = 1LL << m;
    FamilyClaim c{spec_tuple(Family::G2, m, {2, 3}), ExhaustivePolicy::Always};
    c.designs = {{2, 4, BigInt((q - 4) / 2)}};
    if (m == 4) c.weights = {{11, 1575}};
    claims.push_back(std::move(c));
  }
  FamilyClaim c{spec_tuple(Family::G2, 5, {1, 3}), ExhaustivePolicy::Always};
  c.designs = {{2, 4, BigInt((32 - 8) / 2)}};
  c.weights = {{27, 28830}};
  claims.push_back(std::move(c));
  run_families(res, claims, budget);
}

void criterion3(CriterionResult& res, const Budget& budget) {
  std::vector<FamilyClaim> claims;
  for (int m : {4, 5}) {
    for (auto e : {std::vector<int>{2, 3, 4}, std::vector<int>{1, 2, 3}}) {
      claims.push_back({spec_tuple(Family::G3, m, e), ExhaustivePolicy::Always});
    }
  }
  claims.push_back({spec_tuple(Family::G3, 5, {1, 2, 4}), ExhaustivePolicy::Always});
  claims.push_back({spec_tuple(Family::G3, 5, {1, 3, 4}), ExhaustivePolicy::Always});
  FamilyClaim ext{spec_tuple(Family::G3, 5, {1, 2, 4}, true), ExhaustivePolicy::Always};
  ext.nkd = {{32, 5, 27}};
  ext.designs = {{3, 5, 12}};
  claims.push_back(std::move(ext));
  run_families(res, claims, budget);
}

void criterion4(CriterionResult& res, const Budget& budget) {
  std::vector<FamilyClaim> claims;
  for (auto e : {std::vector<int>{1, 2, 3, 4}, std::vector<int>{2, 3, 4, 5}}) {
    claims.push_back({spec_tuple(Family::H4, 4, e), ExhaustivePolicy::Always});
    claims.push_back({spec_tuple(Family::H4, 5, e), ExhaustivePolicy::Never});
  }
  claims.push_back({spec_tuple(Family::H4, 5, {1, 2, 4, 5}), ExhaustivePolicy::Never});
  FamilyClaim ext16{spec_tuple(Family::H4, 4, {1, 2, 3, 4}, true), ExhaustivePolicy::Always};
  ext16.designs = {{3, 10, 96}, {3, 6, 16}};
  claims.push_back(std::move(ext16));
  FamilyClaim ext32{spec_tuple(Family::H4, 5, {1, 2, 4, 5}, true), ExhaustivePolicy::Never};
  ext32.designs = {{3, 6, 108}};
  claims.push_back(std::move(ext32));
  run_families(res, claims, budget);
}

void criterion5(CriterionResult& res, const Budget& budget) {
  const std::vector<std::tuple<std::string, int, std::uint64_t>> cases = {
      {"L4.1", 5, 12},  {"L4.3", 3, 2},   {"L4.3", 4, 6},   {"L5.1", 4, 16},
      {"L5.3", 4, 16},  {"L5.5", 5, 108}, {"L6.4", 5, 108}, {"L6.6", 5, 108},
      {"L5.7", 5, 12},  {"L6.1", 4, 40},  {"L6.2", 4, 16},  {"L5.9", 5, 108},
  };
  for (const auto& [id, m, count] : cases) {
    ++res.items;
    try {
      const auto r = verify_counting_lemma(id, make_field(m), budget.worker_count());
      res.details.push_back(to_json(r));
      const std::string suffix = " = " + std::to_string(count);
      const bool pinned = r.expected.size() >= suffix.size() &&
                          r.expected.compare(r.expected.size() - suffix.size(), suffix.size(), suffix) == 0;
      if (!pinned) fail(res, id + " m=" + std::to_string(m) + ": closed form is not " + std::to_string(count));
      if (!r.pass) fail(res, id + " m=" + std::to_string(m) + ": " + r.observed);
      if (r.cases == 0) fail(res, id + " m=" + std::to_string(m) + ": no tuples checked");
    } catch (const std::exception& e) {
      fail(res, id + " m=" + std::to_string(m) + ": " + e.what());
    }
  }
}

void criterion6(CriterionResult& res, const Budget&) {
  for (const auto& id : field_lemma_ids()) {
    ++res.items;
    try {
      const auto r = verify_field_lemma(id, 2, 6, 1, 8);
      res.details.push_back(to_json(r));
      if (!r.pass) {
        fail(res, id + ": " + r.observed +
                      (r.counterexamples.empty() ? "" : " e.g. " + r.counterexamples.front()));
      }
    } catch (const std::exception& e) {
      fail(res, id + ": " + e.what());
    }
  }
}

void criterion7(CriterionResult& res, const Budget& budget) {
  for (auto [m, k_hi] : {std::pair{4, 12}, std::pair{5, 8}}) {
    for (int k = 4; k <= k_hi; ++k) {
      ++res.items;
      try {
        const auto r = verify_conjecture(m, k, budget);
        res.details.push_back(to_json(r));
        if (!r.pass) fail(res, r.params + ": " + r.observed);
      } catch (const std::exception& e) {
        fail(res, "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + e.what());
      }
    }
  }
}

void criterion8(CriterionResult& res, const Budget& budget) {
  try {
    const auto table = lrc_table_report(3, 5, budget);
    res.details = to_json(table)["rows"];
    for (const auto& row : table.rows) {
      ++res.items;
      if (!row.pass()) {
        fail(res, row.family + ": r=" + (row.r ? std::to_string(*row.r) : "none") + " (table " +
                      std::to_string(row.table_r) + ") d_opt=" + (row.d_optimal ? "true" : "false") +
                      " k_opt=" + to_string(row.k_opt.verdict));
      }
    }
    for (int m = 3; m <= 5; ++m) {
      if (std::none_of(table.rows.begin(), table.rows.end(), [&](const LrcRow& r) { return r.m == m; })) {
        fail(res, "no rows at m=" + std::to_string(m));
      }
    }
  } catch (const std::exception& e) {
    fail(res, e.what());
  }
}

void criterion9(CriterionResult& res, const Budget& budget) {
  // Exhaustive enumeration is capped so q=16 runs up to k=5 and q=32 up to
  // k=4; larger codes rely on the two recursions.
  Budget capped = budget;
  capped.codewords = std::min<std::uint64_t>(budget.codewords, std::uint64_t{1} << 21);
  const std::map<int, std::vector<std::uint32_t>> moduli = {{4, {19, 25}}, {5, {37, 41}}};
  std::size_t three_way = 0;
  for (const auto& [m, mods] : moduli) {
    std::vector<FamilySpec> specs;
    for (int h = 1; h < m; ++h) {
      if (std::gcd(h, m) != 1) continue;
      specs.push_back(spec_dh(Family::D, m, h));
      specs.push_back(spec_dh(Family::H, m, h));
    }
    const std::vector<std::pair<Family, std::vector<int>>> tuples = {
        {Family::G2, {1, 3}},       {Family::G2, {2, 3}},       {Family::G3, {2, 3, 4}},
        {Family::G3, {1, 2, 3}},    {Family::G3, {1, 2, 4}},    {Family::G3, {1, 3, 4}},
        {Family::H4, {1, 2, 3, 4}}, {Family::H4, {2, 3, 4, 5}}, {Family::H4, {1, 2, 4, 5}}};
    for (const auto& [f, e] : tuples) {
      for (bool ext : {false, true}) {
        FamilySpec s = spec_tuple(f, m, e, ext);
        try {
          s.validate();
          specs.push_back(s);
        } catch (const PreconditionError&) {
        }
      }
    }
    for (const auto& s : specs) {
      std::optional<WeightDistribution> reference;
      for (auto mod : mods) {
        FamilyClaim c{s, ExhaustivePolicy::Auto};
        const auto r = check_family(res, c, make_field(m, mod), capped, false);
        if (!r) continue;
        const std::string name = s.name() + " modulus=" + std::to_string(mod);
        if (r->exhaustive) ++three_way;
        for (const char* required : {"complement pairing", "A_{n-k} = A^perp_k", "Pless moments",
                                     "completion = dual recursion + MacWilliams",
                                     "complementary design"}) {
          const bool present = std::any_of(r->checks.begin(), r->checks.end(),
                                           [&](const Check& c) { return c.name == required; });
          if (!present) fail(res, name + ": property '" + required + "' was not evaluated");
        }
        for (const auto& d : r->designs) {
          if (!d.from_weights) fail(res, name + ": design parameters from A_w unavailable");
        }
        if (!reference) {
          reference = r->completed;
        } else if (!(*reference == r->completed)) {
          fail(res, s.name() + ": enumerator depends on the modulus");
        }
      }
    }
  }
  if (three_way == 0) fail(res, "no code was enumerated exhaustively");
}

const char* title(int id) {
  switch (id) {
    case 1: return "3-row families D/H, m=3..5";
    case 2: return "4-row families (2,3) q=8..32, (1,3) q=32";
    case 3: return "5-row families and extended (1,2,4), q=16,32";
    case 4: return "6-row families and extended codes, q=16,32";
    case 5: return "counting lemmas, every fixed tuple";
    case 6: return "field lemma suites, m<=6";
    case 7: return "conjecture instances m=4 k=4..12, m=5 k=4..8";
    case 8: return "LRC table rows, q=8,16,32";
    case 9: return "property suites and modulus independence";
  }
  return "";
}

double limit(int id) {
  switch (id) {
    case 1: return 5;
    case 2: return 30;
    case 3: return 120;
    case 4: return 600;
    case 5: return 300;
    case 6: return 60;
    case 7: return 120;
    case 8: return 60;
    default: return 600;
  }
}

}  // namespace

CriterionResult run_criterion(int id, const Budget& budget) {
  if (id < 1 || id > kCriterionCount) throw PreconditionError("criterion must be 1..9");
  CriterionResult res;
  res.id = id;
  res.title = title(id);
  res.limit_seconds = limit(id);
  res.pass = true;
  const auto start = Clock::now();
  switch (id) {
    case 1: criterion1(res, budget); break;
    case 2: criterion2(res, budget); break;
    case 3: criterion3(res, budget); break;
    case 4: criterion4(res, budget); break;
    case 5: criterion5(res, budget); break;
    case 6: criterion6(res, budget); break;
    case 7: criterion7(res, budget); break;
    case 8: criterion8(res, budget); break;
    case 9: criterion9(res, budget); break;
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (res.seconds > res.limit_seconds) {
    std::ostringstream os;
    os << "runtime " << res.seconds << " s exceeds " << res.limit_seconds << " s";
    fail(res, os.str());
  }
  if (res.items == 0) fail(res, "nothing was checked");
  return res;
}

Json to_json(const CriterionResult& r) {
  return {{"criterion", r.id},     {"title", r.title},     {"pass", r.pass},
          {"seconds", r.seconds},  {"limit_seconds", r.limit_seconds},
          {"items", r.items},      {"failures", r.failures}, {"details", r.details}};
}

}  // namespace nmds::suites
