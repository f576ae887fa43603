#include "nmds/lrc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nmds/design.hpp"
#include "nmds/errors.hpp"

namespace nmds {

LocalityResult minimum_locality(std::size_t n, const std::vector<Block>& dual_min_blocks) {
  if (dual_min_blocks.empty()) throw PreconditionError("no dual minimum-weight blocks");
  LocalityResult res;
  res.d_dual = dual_min_blocks.front().size();
  if (res.d_dual < 2) throw PreconditionError("d^perp must be at least 2");
  std::vector<std::uint64_t> through(n, 0);
  for (const auto& b : dual_min_blocks) {
    if (b.size() != res.d_dual) throw PreconditionError("blocks of unequal size");
    for (auto p : b) {
      if (p >= n) throw PreconditionError("block index out of range");
      ++through[p];
    }
  }
  const auto zero = std::find(through.begin(), through.end(), 0u);
  if (zero != through.end()) {
    res.uncovered = static_cast<std::uint32_t>(zero - through.begin());
    return res;
  }
  if (std::adjacent_find(through.begin(), through.end(), std::not_equal_to<>()) != through.end()) {
    return res;  // covered, but not a 1-design
  }
  res.replication = through.front();
  res.r = res.d_dual - 1;
  return res;
}

LocalityResult minimum_locality(const LinearCode& code, const Budget& budget) {
  const auto sup = min_weight_supports(code, budget);
  if (sup.violation) throw PreconditionError("code is not NMDS: " + *sup.violation);
  return minimum_locality(code.n(), sup.dual);
}

std::int64_t singleton_like_rhs(std::size_t n, std::size_t k, std::size_t r) {
  if (r == 0) throw PreconditionError("locality must be >= 1");
  const auto ceil = static_cast<std::int64_t>((k + r - 1) / r);
  return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k) - ceil + 2;
}

bool verify_d_optimal(std::size_t n, std::size_t k, std::size_t d, std::size_t r) {
  const auto rhs = singleton_like_rhs(n, k, r);
  if (static_cast<std::int64_t>(d) > rhs) {
    throw InconsistencyError("d exceeds the Singleton-like bound");
  }
  return static_cast<std::int64_t>(d) == rhs;
}

std::uint64_t singleton_k_opt(std::size_t n, std::size_t d, std::uint32_t) {
  return n >= d ? n - d + 1 : 0;
}

std::string to_string(KOptimality k) {
  return k == KOptimality::Certified ? "certified" : "INCONCLUSIVE";
}

KOptResult verify_k_optimal(std::size_t n, std::size_t k, std::size_t d, std::uint32_t q,
                            std::size_t r, const KOptEstimator& estimator,
                            const std::string& estimator_name) {
  if (r == 0) throw PreconditionError("locality must be >= 1");
  KOptResult res;
  res.estimator = estimator_name;
  std::ostringstream details;
  bool any = false;
  const std::size_t t_max = (k + r - 1) / r + 1;
  for (std::size_t t = 1; t <= t_max; ++t) {
    if (t * (r + 1) > n) break;
    const std::size_t rest = n - t * (r + 1);
    const std::uint64_t term = r * t + estimator(rest, d, q);
    details << (any ? "; " : "") << "t=" << t << ": " << r * t << "+k_opt(" << rest << ","
            << d << ")=" << term;
    if (!any || term < res.bound) {
      res.bound = term;
      res.argmin_t = t;
    }
    any = true;
  }
  if (!any) throw PreconditionError("n < r + 1: no admissible t");
  if (k > res.bound) throw InconsistencyError("k exceeds the Cadambe-Mazumdar bound");
  res.verdict = k == res.bound ? KOptimality::Certified : KOptimality::Inconclusive;
  res.details = details.str();
  return res;
}

bool LrcRow::matches_table() const {
  return n == table_n && k == table_k && d == table_d && r && *r == table_r;
}

bool LrcRow::pass() const {
  return matches_table() && d_optimal && k_opt.verdict == KOptimality::Certified;
}

bool LrcTable::pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const LrcRow& r) { return r.pass(); });
}

namespace {

struct TableEntry {
  Family family;
  std::vector<int> exponents;
  bool extended;
  std::size_t length_offset;  // n = q - 1 + length_offset
  std::size_t k;
};

const std::vector<TableEntry>& table_entries() {
  static const std::vector<TableEntry> t = {
      {Family::G2, {1, 3}, false, 0, 4},          {Family::G2, {2, 3}, false, 0, 4},
      {Family::G3, {2, 3, 4}, false, 0, 5},       {Family::G3, {1, 2, 3}, false, 0, 5},
      {Family::G3, {1, 2, 4}, false, 0, 5},       {Family::G3, {1, 3, 4}, false, 0, 5},
      {Family::G3, {1, 2, 4}, true, 1, 5},        {Family::H4, {1, 2, 3, 4}, false, 0, 6},
      {Family::H4, {2, 3, 4, 5}, false, 0, 6},    {Family::H4, {1, 2, 4, 5}, false, 0, 6},
      {Family::H4, {1, 2, 3, 4}, true, 1, 6},     {Family::H4, {1, 2, 4, 5}, true, 1, 6},
  };
  return t;
}

bool admissible(const FamilySpec& s) {
  try {
    s.validate();
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

LrcRow make_row(std::string family, int m, std::size_t n, std::size_t k, std::size_t d,
                std::uint32_t q, const LocalityResult& loc, std::size_t table_k) {
  LrcRow row;
  row.family = std::move(family);
  row.m = m;
  row.n = n;
  row.k = k;
  row.d = d;
  row.q = q;
  row.r = loc.r;
  row.uncovered = loc.uncovered;
  // Table entries are NMDS: d = n - k and r = k - 1.
  row.table_n = n;
  row.table_k = table_k;
  row.table_d = n - table_k;
  row.table_r = table_k - 1;
  if (row.r) {
    row.singleton_rhs = singleton_like_rhs(n, k, *row.r);
    row.d_optimal = verify_d_optimal(n, k, d, *row.r);
    row.k_opt = verify_k_optimal(n, k, d, q, *row.r);
  }
  return row;
}

void add_code_rows(LrcTable& table, const FamilySpec& spec, std::size_t table_n,
                   std::size_t table_k, const Budget& budget) {
  const auto field = make_field(spec.m);
  const auto code = build_family(spec, field);
  const auto cls = nmds_classify(code, budget);
  if (cls.label != CodeLabel::NMDS) {
    throw InconsistencyError(spec.name() + " is not NMDS (" + to_string(cls.label) + ")");
  }
  const auto sup = min_weight_supports(code, budget);
  if (sup.violation) throw InconsistencyError(spec.name() + ": " + *sup.violation);
  const std::size_t n = code.n(), k = code.k();
  auto primal = make_row(spec.name(), spec.m, n, k, cls.d, code.q(),
                         minimum_locality(n, sup.dual), table_k);
  primal.table_n = table_n;
  table.rows.push_back(std::move(primal));
  // The dual's recovering sets come from the minimum-weight codewords of C.
  auto dual = make_row("dual " + spec.name(), spec.m, n, n - k, cls.d_dual, code.q(),
                       minimum_locality(n, sup.primal), table_n - table_k);
  dual.table_n = table_n;
  dual.table_d = table_k;
  dual.table_r = table_n - table_k - 1;
  table.rows.push_back(std::move(dual));
}

}  // namespace

LrcTable lrc_table_report(int m_lo, int m_hi, const Budget& budget) {
  if (m_lo < 3 || m_hi > 8 || m_lo > m_hi) throw PreconditionError("m range must lie in [3, 8]");
  LrcTable table;
  for (int m = m_lo; m <= m_hi; ++m) {
    const std::size_t q = std::size_t{1} << m;
    for (Family fam : {Family::D, Family::H}) {
      for (int h = 1; h < m; ++h) {
        FamilySpec spec{fam, m, h, {}, false};
        if (admissible(spec)) add_code_rows(table, spec, q - 1, 3, budget);
      }
    }
    for (const auto& e : table_entries()) {
      FamilySpec spec{e.family, m, std::nullopt, e.exponents, e.extended};
      if (admissible(spec)) add_code_rows(table, spec, q - 1 + e.length_offset, e.k, budget);
    }
  }
  return table;
}

}  // namespace nmds
