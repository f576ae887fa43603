// nmds: build and verify NMDS code families over GF(2^m).
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
// precondition error, 3 a work budget was exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nmds/errors.hpp"
#include "nmds/serialize.hpp"
#include "suites.hpp"

namespace {

using namespace nmds;

struct Common {
  unsigned workers = 0;
  std::string format = "json";
  std::string output;
  std::uint64_t codeword_budget = 0;
  std::uint64_t subset_budget = 0;

  Budget budget() const {
    Budget b = Budget::from_environment();
    if (codeword_budget) b.codewords = codeword_budget;
    if (subset_budget) b.subsets = subset_budget;
    b.workers = workers;
    return b;
  }
};

struct FamilyArgs {
  std::string family;
  int m = 0;
  std::optional<int> h;
  std::vector<int> exponents;
  bool extended = false;
  std::string spec_json;

  FamilySpec spec() const {
    if (!spec_json.empty()) {
      std::string text = spec_json;
      if (text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw PreconditionError("cannot read " + text.substr(1));
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      Json j;
      try {
        j = Json::parse(text);
      } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed --spec JSON: ") + e.what());
      }
      return family_spec_from_json(j);
    }
    if (family.empty() || m == 0) throw PreconditionError("--family and --m are required");
    FamilySpec s{parse_family(family), m, h, exponents, extended};
    s.validate();
    return s;
  }
};

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--family", a.family, "D, H, G2, G3, H4 or CONJ");
  cmd->add_option("--m", a.m, "field degree")->check(CLI::Range(2, 16));
  cmd->add_option("--h", a.h, "exponent parameter of D and H");
  cmd->add_option("--exponents", a.exponents, "exponent tuple, e.g. 1,2,4 (k for CONJ)")
      ->delimiter(',');
  cmd->add_flag("--extended", a.extended, "append the parity column");
  cmd->add_option("--spec", a.spec_json, "family spec as JSON, or @file");
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw PreconditionError("cannot write " + c.output);
  out << text;
}

void emit_json(const Common& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

void require_format(const Common& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw PreconditionError("--format " + c.format + " is not available for this command");
}

std::string lemma_help() {
  std::ostringstream os;
  os << "Counting lemma ids (need --m):";
  for (const auto& id : counting_lemma_ids()) os << ' ' << id;
  os << "\nField lemma ids (use --m-lo/--m-hi, --h-lo/--h-hi):";
  for (const auto& id : field_lemma_ids()) os << ' ' << id;
  os << "\nAliases: lem-oval-known, lem-oval, lem-gcd, lem-s, lem-binomial, lem-ker, lem-abc,"
        "\n  lem-013, lem-f013, lem-013plus, lem-g013, lem-ab, lem-vandermonde (L2.4..L2.16)\n";
  return os.str();
}

int run_field(const Common& c, int m, std::optional<std::uint32_t> modulus) {
  require_format(c, {"json", "text"});
  const auto f = make_field(m, modulus);
  if (c.format == "text") {
    std::ostringstream os;
    os << "GF(2^" << f->m() << ") q=" << f->q() << " modulus=" << f->modulus()
       << " alpha=" << f->alpha() << "\n";
    emit(c, os.str());
  } else {
    emit_json(c, envelope("field", field_summary(*f)));
  }
  return 0;
}

int run_build(const Common& c, const FamilyArgs& a) {
  require_format(c, {"json", "text"});
  const auto spec = a.spec();
  const auto code = build_family(spec, make_field(spec.m));
  if (c.format == "text") {
    std::ostringstream os;
    os << spec.name() << ": [" << code.n() << "," << code.k() << "]\n";
    const auto& g = code.generator();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t col = 0; col < g.cols(); ++col) os << (col ? " " : "") << g.at(r, col);
      os << "\n";
    }
    emit(c, os.str());
  } else {
    emit_json(c, envelope("generator", {{"spec", to_json(spec)}, {"generator", to_json(code.generator())}}));
  }
  return 0;
}

ExhaustivePolicy parse_policy(const std::string& s) {
  if (s == "auto") return ExhaustivePolicy::Auto;
  if (s == "never") return ExhaustivePolicy::Never;
  if (s == "always") return ExhaustivePolicy::Always;
  throw PreconditionError("--exhaustive must be auto, never or always");
}

int run_verify(const Common& c, const FamilyArgs& a, const std::string& policy) {
  require_format(c, {"json", "text"});
  const auto spec = a.spec();
  const auto r = verify_family(spec, make_field(spec.m), c.budget(), parse_policy(policy));
  if (c.format == "text") {
    std::ostringstream os;
    os << spec.name() << " [" << r.completed.n << "," << r.completed.k << "," << r.code_class.d
       << "] " << to_string(r.code_class.label) << "\n";
    for (const auto& chk : r.checks)
      os << (chk.pass ? "  ok   " : "  FAIL ") << chk.name << (chk.detail.empty() ? "" : ": " + chk.detail) << "\n";
    os << (r.pass() ? "PASS" : "FAIL") << "\n";
    emit(c, os.str());
  } else {
    emit_json(c, envelope("verification", to_json(r)));
  }
  return r.pass() ? 0 : 1;
}

std::string lemma_text(const LemmaReport& r) {
  std::ostringstream os;
  os << r.lemma_id << " " << r.params << ": " << (r.pass ? "PASS" : "FAIL") << "\n  expected "
     << r.expected << "\n  observed " << r.observed << "\n";
  for (const auto& d : r.details) os << "  " << d << "\n";
  for (const auto& ce : r.counterexamples) os << "  counterexample " << ce << "\n";
  return os.str();
}

int run_lemma(const Common& c, const std::string& raw_id, int m, int m_lo, int m_hi, int h_lo,
              int h_hi) {
  require_format(c, {"json", "text"});
  const std::string id = canonical_lemma_id(raw_id);
  const auto counting = counting_lemma_ids();
  LemmaReport r;
  if (std::find(counting.begin(), counting.end(), id) != counting.end()) {
    if (m == 0) throw PreconditionError(id + " needs --m");
    r = verify_counting_lemma(id, make_field(m), c.budget().worker_count());
  } else {
    if (m != 0) m_lo = m_hi = m;
    r = verify_field_lemma(id, m_lo, m_hi, h_lo, h_hi);
  }
  if (c.format == "text") {
    emit(c, lemma_text(r));
  } else {
    emit_json(c, envelope("lemma", to_json(r)));
  }
  return r.pass ? 0 : 1;
}

int run_conjecture(const Common& c, int m, int k_lo, int k_hi) {
  require_format(c, {"json", "text"});
  if (k_lo > k_hi) throw PreconditionError("empty k range");
  Json reports = Json::array();
  std::string text;
  bool pass = true;
  for (int k = k_lo; k <= k_hi; ++k) {
    const auto r = verify_conjecture(m, k, c.budget());
    pass = pass && r.pass;
    reports.push_back(to_json(r));
    text += lemma_text(r);
  }
  if (c.format == "text") {
    emit(c, text);
  } else {
    emit_json(c, envelope("conjecture", {{"reports", reports}, {"pass", pass}}));
  }
  return pass ? 0 : 1;
}

int run_lrc(const Common& c, int m_lo, int m_hi) {
  const auto t = lrc_table_report(m_lo, m_hi, c.budget());
  if (c.format == "csv") {
    emit(c, lrc_csv(t));
  } else if (c.format == "text") {
    std::ostringstream os;
    for (const auto& r : t.rows) {
      os << (r.pass() ? "ok   " : "FAIL ") << r.family << " (" << r.n << "," << r.k << "," << r.d
         << "," << r.q << ";" << (r.r ? std::to_string(*r.r) : "-") << ") d_opt="
         << (r.d_optimal ? "true" : "false") << " k_opt=" << to_string(r.k_opt.verdict) << "\n";
    }
    emit(c, os.str());
  } else {
    emit_json(c, envelope("lrc", to_json(t)));
  }
  return t.pass() ? 0 : 1;
}

int run_report(const Common& c, std::vector<int> criteria, bool timings) {
  require_format(c, {"json", "text"});
  if (criteria.empty())
    for (int i = 1; i <= suites::kCriterionCount; ++i) criteria.push_back(i);
  Json results = Json::array();
  std::ostringstream text;
  bool pass = true;
  for (int id : criteria) {
    const auto r = suites::run_criterion(id, c.budget());
    pass = pass && r.pass;
    Json j = suites::to_json(r);
    if (!timings) {
      j.erase("seconds");
    }
    results.push_back(std::move(j));
    text << (r.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << r.title << " ("
         << r.items << " items)";
    if (timings) text << " " << r.seconds << " s";
    text << "\n";
    for (const auto& f : r.failures) text << "  " << f << "\n";
  }
  if (c.format == "text") {
    emit(c, text.str());
  } else {
    emit_json(c, envelope("report", {{"criteria", results}, {"pass", pass}}));
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify NMDS code families over GF(2^m)"};
  app.set_help_flag("--help", "Print this help message and exit");  // --h is a family option
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--workers", common.workers, "worker threads (0 = available parallelism)");
  app.add_option("--format", common.format, "json, csv (lrc only) or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("-o,--output", common.output, "write to a file instead of stdout");
  app.add_option("--codeword-budget", common.codeword_budget,
                 "max codewords to enumerate (env NMDS_CODEWORD_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--subset-budget", common.subset_budget,
                 "max column subsets to rank (env NMDS_SUBSET_BUDGET)")
      ->check(CLI::PositiveNumber);

  int field_m = 0;
  std::optional<std::uint32_t> modulus;
  auto* field = app.add_subcommand("field", "inspect GF(2^m)");
  field->add_option("--m", field_m, "field degree")->required()->check(CLI::Range(2, 16));
  field->add_option("--modulus", modulus, "irreducible modulus as a bit-encoded integer");

  FamilyArgs build_args, verify_args;
  auto* build = app.add_subcommand("build", "emit a generator matrix");
  add_family_options(build, build_args);
  auto* verify = app.add_subcommand("verify", "full family verification");
  add_family_options(verify, verify_args);
  std::string policy = "auto";
  verify->add_option("--exhaustive", policy, "auto, never or always");

  std::string lemma_id;
  int lemma_m = 0, m_lo = 2, m_hi = 6, h_lo = 1, h_hi = 8;
  auto* lemma = app.add_subcommand("lemma", "field and counting lemma suites");
  lemma->add_option("--id", lemma_id, "lemma id or alias")->required();
  lemma->add_option("--m", lemma_m, "field degree (required for counting lemmas)");
  lemma->add_option("--m-lo", m_lo, "smallest m for field lemmas");
  lemma->add_option("--m-hi", m_hi, "largest m for field lemmas");
  lemma->add_option("--h-lo", h_lo, "smallest h");
  lemma->add_option("--h-hi", h_hi, "largest h");
  lemma->footer(lemma_help());

  int conj_m = 0, conj_k = 0, conj_k_lo = 0, conj_k_hi = 0;
  auto* conj = app.add_subcommand("conjecture", "check M_k instances by rank methods");
  conj->add_option("--m", conj_m, "field degree")->required();
  auto* k_opt = conj->add_option("--k", conj_k, "dimension");
  conj->add_option("--k-lo", conj_k_lo, "smallest k")->excludes(k_opt);
  conj->add_option("--k-hi", conj_k_hi, "largest k")->excludes(k_opt);

  int lrc_lo = 3, lrc_hi = 5;
  auto* lrc = app.add_subcommand("lrc", "locality and optimality table");
  lrc->add_option("--m-lo", lrc_lo, "smallest m");
  lrc->add_option("--m-hi", lrc_hi, "largest m");

  std::vector<int> criteria;
  bool timings = false;
  auto* report = app.add_subcommand("report", "run the acceptance suites");
  report->add_option("--criteria", criteria, "criteria to run (default 1..9)")
      ->delimiter(',')
      ->check(CLI::Range(1, suites::kCriterionCount));
  report->add_flag("--timings", timings, "include wall-clock timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*field) return run_field(common, field_m, modulus);
    if (*build) return run_build(common, build_args);
    if (*verify) return run_verify(common, verify_args, policy);
    if (*lemma) return run_lemma(common, lemma_id, lemma_m, m_lo, m_hi, h_lo, h_hi);
    if (*conj) {
      if (conj_k) return run_conjecture(common, conj_m, conj_k, conj_k);
      if (!conj_k_lo || !conj_k_hi) throw PreconditionError("give --k or both --k-lo and --k-hi");
      return run_conjecture(common, conj_m, conj_k_lo, conj_k_hi);
    }
    if (*lrc) return run_lrc(common, lrc_lo, lrc_hi);
    if (*report) return run_report(common, criteria, timings);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
