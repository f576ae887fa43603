#include "nmds/code.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "nmds/combinatorics.hpp"
#include "nmds/errors.hpp"
#include "nmds/parallel.hpp"

namespace nmds {

namespace {

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw PreconditionError(std::string(name) + " must be a positive integer");
  }
  return v;
}

std::string format_block(std::span<const std::uint32_t> cols) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i] + 1;
  os << '}';
  return os.str();
}

std::uint64_t saturating_u64(const BigInt& v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(v);
}

// Sum_{j<=depth} C(n, j), saturated.
std::uint64_t subset_node_estimate(std::size_t n, std::size_t depth) {
  BigInt total = 0;
  for (std::size_t j = 1; j <= depth; ++j) total += binomial_big(n, j);
  return saturating_u64(total);
}

void require_subset_budget(std::uint64_t needed, const Budget& budget, const char* what) {
  if (needed > budget.subsets) throw BudgetExceeded(what, needed, budget.subsets);
}

// Incremental echelon basis of column vectors of length k. Each stored vector
// has a pivot coordinate equal to 1 and zeros at earlier pivots, so reducing
// in insertion order eliminates every pivot.
class EchelonStack {
 public:
  EchelonStack(const Field& f, std::size_t k) : f_(f), k_(k) {
    basis_.reserve(k * k);
    pivots_.reserve(k);
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

  // Reduces v against the basis; returns true (and keeps it) if independent.
  bool push(std::span<const Element> column) {
    scratch_.assign(column.begin(), column.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Element c = scratch_[pivots_[i]];
      if (c == 0) continue;
      const Element* b = basis_.data() + i * k_;
      for (std::size_t t = 0; t < k_; ++t) scratch_[t] ^= f_.mul(c, b[t]);
    }
    std::size_t p = 0;
    while (p < k_ && scratch_[p] == 0) ++p;
    if (p == k_) return false;
    const Element inv = f_.inv(scratch_[p]);
    for (std::size_t t = 0; t < k_; ++t) basis_.push_back(f_.mul(inv, scratch_[t]));
    pivots_.push_back(p);
    return true;
  }

  void pop(bool was_independent) {
    if (!was_independent) return;
    pivots_.pop_back();
    basis_.resize(basis_.size() - k_);
  }

 private:
  const Field& f_;
  std::size_t k_;
  std::vector<Element> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<Element> scratch_;
};

std::vector<Vector> columns_of(const Matrix& g) {
  std::vector<Vector> cols(g.cols(), Vector(g.rows()));
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) cols[c][r] = g.at(r, c);
  return cols;
}

}  // namespace

Budget Budget::from_environment() {
  Budget b;
  if (auto v = env_u64("NMDS_CODEWORD_BUDGET")) b.codewords = *v;
  if (auto v = env_u64("NMDS_SUBSET_BUDGET")) b.subsets = *v;
  return b;
}

unsigned Budget::worker_count() const { return workers == 0 ? default_worker_count() : workers; }

LinearCode LinearCode::from_generator(Matrix generator) {
  if (generator.rows() == 0) throw PreconditionError("generator matrix has no rows");
  if (generator.rows() > generator.cols()) {
    throw PreconditionError("generator has more rows than columns");
  }
  EchelonStack stack(generator.field(), generator.cols());
  for (std::size_t r = 0; r < generator.rows(); ++r) {
    if (!stack.push(generator.row(r))) {
      throw PreconditionError("generator rows are dependent: row " + std::to_string(r + 1) +
                              " lies in the span of the rows above it");
    }
  }
  return LinearCode(std::move(generator));
}

LinearCode LinearCode::dual() const {
  auto ns = rank_and_nullspace(gen_);
  if (ns.basis.empty()) throw PreconditionError("the dual of the full space is the zero code");
  return LinearCode(Matrix::from_rows(gen_.field_ptr(), ns.basis));
}

LinearCode LinearCode::extend() const {
  Matrix ext(gen_.field_ptr(), gen_.rows(), gen_.cols() + 1);
  for (std::size_t r = 0; r < gen_.rows(); ++r) {
    Element parity = 0;
    for (std::size_t c = 0; c < gen_.cols(); ++c) {
      ext.at(r, c) = gen_.at(r, c);
      parity ^= gen_.at(r, c);  // -sum = sum in characteristic 2
    }
    ext.at(r, gen_.cols()) = parity;
  }
  return LinearCode(std::move(ext));
}

WeightDistribution WeightDistribution::zero(std::size_t n, std::size_t k, std::uint32_t q) {
  WeightDistribution wd;
  wd.n = n;
  wd.k = k;
  wd.q = q;
  wd.counts.assign(n + 1, 0);
  return wd;
}

BigInt WeightDistribution::total() const {
  BigInt s = 0;
  for (const auto& a : counts) s += a;
  return s;
}

std::size_t WeightDistribution::min_weight() const {
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] != 0) return i;
  return 0;
}

std::vector<std::size_t> WeightDistribution::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] != 0) out.push_back(i);
  return out;
}

std::string to_string(CodeLabel label) {
  switch (label) {
    case CodeLabel::MDS: return "MDS";
    case CodeLabel::NMDS: return "NMDS";
    case CodeLabel::AMDSOnly: return "AMDS-only";
    case CodeLabel::Other: return "other";
  }
  return "other";
}

// Enumeration strategy: pick a pivot row p of maximal support and rescale the
// other rows on supp(p) by 1/g_p. For a fixed combination b of the other rows,
// the codeword b + u g_p vanishes on j in supp(p) iff b'_j = u (b' rescaled),
// so one histogram of b' over supp(p) yields the weights of all q codewords
// b + u g_p at once. Combinations b are walked by an odometer that changes one
// coefficient per step.
WeightDistribution weight_distribution_exhaustive(const LinearCode& code, const Budget& budget) {
  const Field& f = code.field();
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const std::uint32_t q = f.q();
  const BigInt total = pow_big(BigInt(q), static_cast<unsigned>(k));
  if (total > budget.codewords) {
    throw BudgetExceeded("exhaustive enumeration needs q^k = " + to_string(total) +
                             " codewords",
                         saturating_u64(total), budget.codewords);
  }
  const Matrix& g = code.generator();

  std::size_t pivot = 0;
  std::size_t best = 0;
  for (std::size_t r = 0; r < k; ++r) {
    const auto row = g.row(r);
    const std::size_t w = n - static_cast<std::size_t>(std::count(row.begin(), row.end(), 0u));
    if (w > best) best = w, pivot = r;
  }
  std::vector<std::uint32_t> in_support, off_support;
  for (std::size_t j = 0; j < n; ++j) (g.at(pivot, j) != 0 ? in_support : off_support).push_back(j);
  // Column order: support first, then the rest.
  std::vector<std::uint32_t> order = in_support;
  order.insert(order.end(), off_support.begin(), off_support.end());
  const std::size_t ns = in_support.size();

  std::vector<Vector> rows;  // other rows, permuted and rescaled
  for (std::size_t r = 0; r < k; ++r) {
    if (r == pivot) continue;
    Vector v(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t c = order[j];
      v[j] = j < ns ? f.div(g.at(r, c), g.at(pivot, c)) : g.at(r, c);
    }
    rows.push_back(std::move(v));
  }

  auto add_multiple = [&](Vector& base, const Vector& row, Element c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < n; ++j) base[j] ^= f.mul(c, row[j]);
  };

  // Split on the last free row's coefficient when there is one.
  const std::size_t free_rows = rows.size();
  const std::size_t tasks = free_rows == 0 ? 1 : q;
  const std::size_t inner = free_rows == 0 ? 0 : free_rows - 1;

  auto partial = run_tasks<std::vector<std::uint64_t>>(
      tasks, budget.worker_count(), [&](std::size_t task) {
        std::vector<std::uint64_t> acc(n + 1, 0);
        std::vector<std::uint32_t> hist(q, 0);
        std::vector<Element> touched;
        touched.reserve(ns);
        Vector base(n, 0);
        if (free_rows > 0) add_multiple(base, rows[free_rows - 1], static_cast<Element>(task));
        std::vector<Element> digits(inner, 0);
        for (;;) {
          std::size_t off_weight = 0;
          for (std::size_t j = ns; j < n; ++j) off_weight += base[j] != 0;
          for (std::size_t j = 0; j < ns; ++j) {
            if (hist[base[j]]++ == 0) touched.push_back(base[j]);
          }
          const std::size_t top = off_weight + ns;
          acc[top] += q - touched.size();
          for (Element u : touched) {
            ++acc[top - hist[u]];
            hist[u] = 0;
          }
          touched.clear();

          std::size_t i = 0;
          for (; i < inner; ++i) {
            const Element v = digits[i];
            const Element next = v + 1 == q ? 0 : v + 1;
            add_multiple(base, rows[i], v ^ next);
            digits[i] = next;
            if (next != 0) break;
          }
          if (i == inner) break;
        }
        return acc;
      });

  auto wd = WeightDistribution::zero(n, k, q);
  for (const auto& acc : partial)
    for (std::size_t w = 0; w <= n; ++w) wd.counts[w] += acc[w];
  if (wd.total() != total) throw InconsistencyError("enumeration did not visit q^k codewords");
  return wd;
}

CodeClass nmds_classify(const LinearCode& code, const Budget& budget) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  CodeClass cls;
  if (k == n) {
    cls.d = 1;
    cls.d_dual = n + 1;
    cls.label = CodeLabel::MDS;
    return cls;
  }
  require_subset_budget(subset_node_estimate(n, k), budget, "rank classification");
  const auto cols = columns_of(code.generator());

  struct Tally {
    std::size_t dual_min = std::numeric_limits<std::size_t>::max();
    bool k_dependent = false;  // some k-subset has rank < k
    bool low_k1 = false;       // some (k+1)-subset has rank < k
  };
  auto tallies = run_tasks<Tally>(n, budget.worker_count(), [&](std::size_t first) {
    Tally t;
    EchelonStack stack(code.field(), k);
    auto visit = [&](auto&& self, std::size_t c, std::size_t size, std::size_t rank) -> void {
      const bool indep = stack.push(cols[c]);
      const std::size_t s1 = size + 1;
      const std::size_t r1 = rank + indep;
      const std::size_t deficiency = s1 - r1;
      if (deficiency >= 1) t.dual_min = std::min(t.dual_min, s1);
      if (s1 == k && deficiency >= 1) t.k_dependent = true;
      if (deficiency >= 2) {
        t.low_k1 = true;  // every (k+1)-superset has rank <= k-1
      } else if (s1 < k || (s1 == k && deficiency == 1)) {
        for (std::size_t next = c + 1; next < n; ++next) self(self, next, s1, r1);
      }
      stack.pop(indep);
    };
    visit(visit, first, 0, 0);
    return t;
  });

  Tally all;
  for (const auto& t : tallies) {
    all.dual_min = std::min(all.dual_min, t.dual_min);
    all.k_dependent = all.k_dependent || t.k_dependent;
    all.low_k1 = all.low_k1 || t.low_k1;
  }
  // Any k+1 columns of a k-row matrix are dependent.
  cls.d_dual = std::min(all.dual_min, k + 1);
  if (!all.k_dependent) {
    cls.d = n - k + 1;
    cls.label = CodeLabel::MDS;
  } else if (!all.low_k1) {
    cls.d = n - k;
    cls.label = cls.d_dual == k ? CodeLabel::NMDS : CodeLabel::AMDSOnly;
  } else {
    cls.d = n - k - 1;
    cls.d_exact = false;
    cls.label = CodeLabel::Other;
  }
  return cls;
}

MinWeightSupports min_weight_supports(const LinearCode& code, const Budget& budget) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  MinWeightSupports out;
  if (k >= n) return out;
  require_subset_budget(subset_node_estimate(n, k), budget, "minimum-weight support scan");
  const auto cols = columns_of(code.generator());
  const Matrix& g = code.generator();

  auto parts = run_tasks<MinWeightSupports>(n, budget.worker_count(), [&](std::size_t first) {
    MinWeightSupports part;
    EchelonStack stack(code.field(), k);
    std::vector<std::uint32_t> path;

    auto process = [&]() {
      const Matrix sub = g.select_columns(path);
      const auto right = rank_and_nullspace(sub);
      if (right.basis.size() != 1) {
        part.violation = "columns " + format_block(path) + " have rank below k-1";
        return;
      }
      for (Element e : right.basis[0]) {
        if (e == 0) {
          part.violation = "dual codeword on " + format_block(path) + " has a zero entry";
          return;
        }
      }
      const auto left = rank_and_nullspace(sub.transpose());
      const Vector word = g.left_apply(left.basis.at(0));
      Block primal;
      for (std::uint32_t j = 0; j < n; ++j) {
        const bool in_s = std::binary_search(path.begin(), path.end(), j);
        if (word[j] != 0) {
          primal.push_back(j);
        } else if (!in_s) {
          part.violation = "codeword vanishing on " + format_block(path) +
                           " has an extra zero at " + std::to_string(j + 1);
          return;
        }
      }
      part.dual.push_back(path);
      part.primal.push_back(std::move(primal));
    };

    auto visit = [&](auto&& self, std::uint32_t c) -> void {
      if (part.violation) return;
      const bool indep = stack.push(cols[c]);
      path.push_back(c);
      if (!indep) {
        if (path.size() < k) {
          part.violation = "columns " + format_block(path) + " are dependent";
        } else {
          process();
        }
      } else if (path.size() < k) {
        for (std::uint32_t next = c + 1; next < n && !part.violation; ++next) self(self, next);
      }
      path.pop_back();
      stack.pop(indep);
    };
    visit(visit, static_cast<std::uint32_t>(first));
    return part;
  });

  for (auto& p : parts) {
    if (p.violation && !out.violation) out.violation = p.violation;
    for (auto& b : p.dual) out.dual.push_back(std::move(b));
    for (auto& b : p.primal) out.primal.push_back(std::move(b));
  }
  return out;
}

std::vector<std::pair<Block, std::uint64_t>> fixed_weight_dual_supports(const LinearCode& code,
                                                                         std::size_t w,
                                                                         const Budget& budget) {
  const std::size_t n = code.n();
  const Field& f = code.field();
  const std::uint32_t q = f.q();
  if (w < 1 || w > 8) throw PreconditionError("dual support weight must lie in [1, 8]");
  if (w > n) return {};
  require_subset_budget(saturating_u64(binomial_big(n, w)), budget, "fixed-weight support scan");
  const Matrix& g = code.generator();

  using Part = std::vector<std::pair<Block, std::uint64_t>>;
  auto parts = run_tasks<Part>(n - w + 1, budget.worker_count(), [&](std::size_t first) {
    Part part;
    std::vector<std::uint32_t> rest;
    for (std::uint32_t j = static_cast<std::uint32_t>(first) + 1; j < n; ++j) rest.push_back(j);
    for_each_subset(rest, w - 1, [&](std::span<const std::uint32_t> tail) {
      Block s{static_cast<std::uint32_t>(first)};
      s.insert(s.end(), tail.begin(), tail.end());
      const auto ns = rank_and_nullspace(g.select_columns(s));
      const std::size_t dim = ns.basis.size();
      if (dim == 0) return;
      std::uint64_t count = 0;
      if (dim == 1) {
        const auto& v = ns.basis[0];
        count = std::all_of(v.begin(), v.end(), [](Element e) { return e != 0; }) ? q - 1 : 0;
      } else {
        const BigInt combos = pow_big(BigInt(q), static_cast<unsigned>(dim));
        if (combos > (BigInt(1) << 24)) {
          throw BudgetExceeded("null space of " + format_block(s) + " is too large to scan",
                               saturating_u64(combos), std::uint64_t{1} << 24);
        }
        std::vector<Element> coeff(dim, 0);
        Vector v(w);
        for (;;) {
          std::fill(v.begin(), v.end(), 0);
          for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t t = 0; t < w; ++t) v[t] ^= f.mul(coeff[b], ns.basis[b][t]);
          count += std::all_of(v.begin(), v.end(), [](Element e) { return e != 0; });
          std::size_t i = 0;
          while (i < dim && ++coeff[i] == q) coeff[i++] = 0;
          if (i == dim) break;
        }
      }
      if (count == 0) return;
      if (count % (q - 1) != 0) {
        throw InconsistencyError("codeword count on " + format_block(s) +
                                 " is not a multiple of q-1");
      }
      part.emplace_back(std::move(s), count / (q - 1));
    });
    return part;
  });

  Part out;
  for (auto& p : parts)
    for (auto& e : p) out.push_back(std::move(e));
  return out;
}

namespace {

BigInt signed_term(std::size_t j, const BigInt& v) { return j % 2 == 0 ? v : BigInt(-v); }

// C(n, a) * sum_{j<s} (-1)^j C(b, j) (q^{s-j} - 1) + (-1)^s C(c, s) * base
BigInt nmds_recursion_term(std::size_t n, std::size_t a, std::size_t b, std::size_t c,
                           std::size_t s, std::uint32_t q, const BigInt& base) {
  BigInt sum = 0;
  for (std::size_t j = 0; j < s; ++j) {
    sum += signed_term(j, binomial_big(b, j) * (pow_big(BigInt(q), static_cast<unsigned>(s - j)) - 1));
  }
  return binomial_big(n, a) * sum + signed_term(s, binomial_big(c, s) * base);
}

void require_checksum(const WeightDistribution& wd, const char* what) {
  for (const auto& a : wd.counts) {
    if (a < 0) throw InconsistencyError(std::string(what) + " produced a negative count");
  }
  if (wd.total() != pow_big(BigInt(wd.q), static_cast<unsigned>(wd.k))) {
    throw InconsistencyError(std::string(what) + " does not sum to q^k");
  }
}

}  // namespace

WeightDistribution complete_weight_distribution_nmds(std::size_t n, std::size_t k,
                                                     std::uint32_t q, const BigInt& a_min) {
  if (k == 0 || k >= n) throw PreconditionError("NMDS completion needs 0 < k < n");
  auto wd = WeightDistribution::zero(n, k, q);
  wd.counts[0] = 1;
  wd.counts[n - k] = a_min;
  for (std::size_t s = 1; s <= k; ++s) {
    wd.counts[n - k + s] = nmds_recursion_term(n, k - s, n - k + s, k, s, q, a_min);
  }
  require_checksum(wd, "NMDS completion");
  return wd;
}

WeightDistribution complete_dual_distribution_nmds(std::size_t n, std::size_t k,
                                                   std::uint32_t q, const BigInt& dual_a_min) {
  if (k == 0 || k >= n) throw PreconditionError("NMDS completion needs 0 < k < n");
  auto wd = WeightDistribution::zero(n, n - k, q);
  wd.counts[0] = 1;
  wd.counts[k] = dual_a_min;
  for (std::size_t s = 1; s <= n - k; ++s) {
    wd.counts[k + s] = nmds_recursion_term(n, k + s, k + s, n - k, s, q, dual_a_min);
  }
  require_checksum(wd, "dual NMDS completion");
  return wd;
}

WeightDistribution macwilliams_transform(const WeightDistribution& wd) {
  const std::size_t n = wd.n;
  const BigInt qk = pow_big(BigInt(wd.q), static_cast<unsigned>(wd.k));
  if (wd.counts.size() != n + 1 || wd.total() != qk) {
    throw PreconditionError("weight distribution does not sum to q^k");
  }
  const BigInt qm1 = wd.q - 1;
  std::vector<BigInt> qm1_pow(n + 1);
  qm1_pow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) qm1_pow[i] = qm1_pow[i - 1] * qm1;

  auto out = WeightDistribution::zero(n, n - wd.k, wd.q);
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt sum = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (wd.counts[i] == 0) continue;
      // Krawtchouk K_j(i) = sum_s (-1)^s (q-1)^{j-s} C(i,s) C(n-i, j-s)
      BigInt kj = 0;
      for (std::size_t s = 0; s <= std::min(i, j); ++s) {
        if (j - s > n - i) continue;
        kj += signed_term(s, qm1_pow[j - s] * binomial_big(i, s) * binomial_big(n - i, j - s));
      }
      sum += wd.counts[i] * kj;
    }
    if (sum % qk != 0) throw InconsistencyError("MacWilliams transform is not integral");
    out.counts[j] = sum / qk;
  }
  if (out.counts[0] != 1) throw InconsistencyError("MacWilliams transform gives A_0 != 1");
  return out;
}

PlessResult pless_moment_check(const WeightDistribution& wd) {
  const auto dual = macwilliams_transform(wd);
  if (dual.counts.size() > 1 && (dual.counts[1] != 0 || (dual.counts.size() > 2 && dual.counts[2] != 0))) {
    throw PreconditionError("power moments in this form need d^perp >= 3");
  }
  const Rational q = wd.q;
  const Rational n = static_cast<unsigned long long>(wd.n);
  const Rational qk = pow_big(BigInt(wd.q), static_cast<unsigned>(wd.k));
  const Rational expected[3] = {
      qk - 1,
      qk / q * (q - 1) * n,
      qk / (q * q) * (q - 1) * n * (q * n - n + 1),
  };
  Rational observed[3] = {0, 0, 0};
  for (std::size_t w = 1; w <= wd.n; ++w) {
    const Rational a = Rational(wd.counts[w]);
    const Rational rw = static_cast<unsigned long long>(w);
    observed[0] += a;
    observed[1] += rw * a;
    observed[2] += rw * rw * a;
  }
  PlessResult r;
  r.pass = true;
  for (int i = 0; i < 3; ++i) {
    const Rational diff = observed[i] - expected[i];
    // A non-integral residual is reported by its numerator; it is nonzero.
    r.residuals[i] = boost::multiprecision::numerator(diff);
    r.pass = r.pass && diff == 0;
  }
  return r;
}

bool assmus_mattson_check(const WeightDistribution& wd, const WeightDistribution& dual_wd,
                          std::size_t t) {
  const std::size_t d = wd.min_weight();
  const std::size_t d_dual = dual_wd.min_weight();
  if (t < 1 || d == 0 || d_dual == 0 || t >= std::min(d, d_dual)) {
    throw PreconditionError("Assmus-Mattson check needs 1 <= t < min(d, d^perp)");
  }
  std::size_t weights = 0;
  for (std::size_t w = 1; w + t <= wd.n; ++w) weights += wd.counts[w] != 0;
  return weights <= d_dual - t;
}

}  // namespace nmds
