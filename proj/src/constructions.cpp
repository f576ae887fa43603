#include "nmds/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "nmds/combinatorics.hpp"
#include "nmds/errors.hpp"

namespace nmds {

std::string to_string(Family f) {
  switch (f) {
    case Family::D: return "D";
    case Family::H: return "H";
    case Family::G2: return "G2";
    case Family::G3: return "G3";
    case Family::H4: return "H4";
    case Family::CONJ: return "CONJ";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::D, Family::H, Family::G2, Family::G3, Family::H4, Family::CONJ}) {
    if (to_string(f) == name) return f;
  }
  throw PreconditionError("unknown family '" + name + "' (expected D, H, G2, G3, H4 or CONJ)");
}

std::string to_string(BlockSource s) {
  switch (s) {
    case BlockSource::PrimalMin: return "primal-min";
    case BlockSource::DualMin: return "dual-min";
    case BlockSource::DualWeight4: return "dual-weight-4";
  }
  return "?";
}

namespace {

using Tuple = std::vector<int>;

bool is(const Tuple& e, std::initializer_list<int> t) { return e == Tuple(t); }

[[noreturn]] void reject(const FamilySpec& s, const std::string& why) {
  throw PreconditionError(s.name() + ": " + why);
}

void require_odd_above_3(const FamilySpec& s) {
  if (s.m % 2 == 0 || s.m <= 3) reject(s, "m must be odd and > 3");
}

void require_above_3(const FamilySpec& s) {
  if (s.m <= 3) reject(s, "m must be > 3");
}

}  // namespace

std::string FamilySpec::name() const {
  std::ostringstream os;
  os << (extended ? "ext-" : "") << to_string(family);
  if (h) os << " h=" << *h;
  if (!exponents.empty()) {
    os << (family == Family::CONJ ? " k=" : " (");
    for (std::size_t i = 0; i < exponents.size(); ++i) os << (i ? "," : "") << exponents[i];
    if (family != Family::CONJ) os << ')';
  }
  os << " m=" << m;
  return os.str();
}

void FamilySpec::validate() const {
  if (m < kMinDegree || m > kMaxDegree) reject(*this, "m must lie in [2, 16]");
  const bool needs_h = family == Family::D || family == Family::H;
  if (needs_h != h.has_value()) reject(*this, needs_h ? "h is required" : "h is not used");
  if (needs_h && !exponents.empty()) reject(*this, "no exponent tuple is used");

  switch (family) {
    case Family::D:
    case Family::H:
      if (m < 3) reject(*this, "m must be >= 3");
      if (*h < 1 || *h > 30) reject(*this, "h must lie in [1, 30]");
      if (std::gcd(*h, m) != 1) reject(*this, "gcd(m, h) must be 1");
      if (extended) reject(*this, "no extended variant");
      return;
    case Family::G2:
      if (is(exponents, {1, 3})) {
        require_odd_above_3(*this);
      } else if (is(exponents, {2, 3})) {
        if (m < 3) reject(*this, "m must be >= 3");
      } else {
        reject(*this, "exponents must be (1,3) or (2,3)");
      }
      if (extended) reject(*this, "no extended variant");
      return;
    case Family::G3:
      if (is(exponents, {2, 3, 4}) || is(exponents, {1, 2, 3})) {
        require_above_3(*this);
        if (extended) reject(*this, "no extended variant");
      } else if (is(exponents, {1, 2, 4}) || is(exponents, {1, 3, 4})) {
        require_odd_above_3(*this);
        if (extended && !is(exponents, {1, 2, 4})) reject(*this, "only (1,2,4) is extended");
      } else {
        reject(*this, "exponents must be (2,3,4), (1,2,3), (1,2,4) or (1,3,4)");
      }
      return;
    case Family::H4:
      if (is(exponents, {1, 2, 3, 4}) || is(exponents, {2, 3, 4, 5})) {
        require_above_3(*this);
        if (extended && !is(exponents, {1, 2, 3, 4})) reject(*this, "only (1,2,3,4) is extended");
      } else if (is(exponents, {1, 2, 4, 5})) {
        require_odd_above_3(*this);
      } else {
        reject(*this, "exponents must be (1,2,3,4), (2,3,4,5) or (1,2,4,5)");
      }
      return;
    case Family::CONJ: {
      if (exponents.size() != 1) reject(*this, "CONJ takes a single k");
      const long long q = 1LL << m;
      if (exponents[0] <= 2 || exponents[0] >= q - 1) reject(*this, "need 2 < k < q-1");
      if (extended) reject(*this, "no extended variant");
      return;
    }
  }
}

std::vector<std::uint32_t> FamilySpec::row_exponents() const {
  validate();
  std::vector<std::uint32_t> rows{0};
  switch (family) {
    case Family::D:
      rows.push_back(1);
      rows.push_back((1u << *h) + 1);
      break;
    case Family::H:
      rows.push_back(1u << *h);
      rows.push_back((1u << *h) + 1);
      break;
    case Family::G2:
    case Family::G3:
    case Family::H4:
      for (int e : exponents) rows.push_back(static_cast<std::uint32_t>(e));
      rows.push_back(static_cast<std::uint32_t>(exponents.size() + 2));
      break;
    case Family::CONJ: {
      const int k = exponents[0];
      for (int e = 1; e <= k - 2; ++e) rows.push_back(static_cast<std::uint32_t>(e));
      rows.push_back(static_cast<std::uint32_t>(k));
      break;
    }
  }
  return rows;
}

LinearCode build_family(const FamilySpec& spec, const FieldPtr& field) {
  const auto rows = spec.row_exponents();
  if (field->m() != spec.m) throw PreconditionError("field degree does not match the spec");
  Vector points(field->order());
  for (std::uint32_t j = 0; j < field->order(); ++j) points[j] = field->exp(j + 1);
  auto code = LinearCode::from_generator(power_matrix(field, rows, points));
  return spec.extended ? code.extend() : code;
}

namespace {

using Q = Rational;
using Term = std::pair<int, std::function<Q(const Q&)>>;  // weight q - offset

struct ClosedForm {
  std::vector<Term> enumerator;
  // (source, t, block size as q - offset, lambda)
  struct D {
    BlockSource source;
    std::size_t t;
    int w_offset;
    std::function<Q(const Q&)> lambda;
  };
  std::vector<D> designs;
};

Q sq(const Q& x) { return x * x; }

ClosedForm closed_form(const FamilySpec& s) {
  using BS = BlockSource;
  const auto& e = s.exponents;
  switch (s.family) {
    case Family::D:
    case Family::H:
      return {{{4, [](const Q& q) { return sq(q - 1) * (q - 2) / 6; }},
               {2, [](const Q& q) { return sq(q - 1) * (q + 4) / 2; }},
               {1, [](const Q& q) { return (q - 1) * (q * q + 8) / 3; }}},
              {{BS::PrimalMin, 2, 4, [](const Q& q) { return (q - 4) * (q - 5) / 6; }},
               {BS::DualMin, 2, -3, [](const Q&) { return Q(1); }},
               {BS::DualWeight4, 2, -4, [](const Q& q) { return (q - 4) * (q - 7) / 2; }}}};
    case Family::G2:
      if (is(e, {1, 3})) {
        return {{{5, [](const Q& q) { return sq(q - 1) * (q - 2) * (q - 8) / 24; }},
                 {4, [](const Q& q) { return 5 * sq(q - 1) * (q - 2) / 6; }},
                 {3, [](const Q& q) { return q * sq(q - 1) * (q - 2) / 4; }},
                 {2, [](const Q& q) { return sq(q - 1) * (2 * q * q + 7 * q + 20) / 6; }},
                 {1, [](const Q& q) { return (q - 1) * (9 * q * q * q + 13 * q * q - 6 * q + 80) / 24; }}},
                {{BS::PrimalMin, 2, 5, [](const Q& q) { return (q - 5) * (q - 6) * (q - 8) / 24; }},
                 {BS::DualMin, 2, -4, [](const Q& q) { return (q - 8) / 2; }}}};
      }
      return {{{5, [](const Q& q) { return sq(q - 1) * (q - 2) * (q - 4) / 24; }},
               {4, [](const Q& q) { return sq(q - 1) * (q - 2) / 6; }},
               {3, [](const Q& q) { return sq(q - 1) * (q - 2) * (q + 4) / 4; }},
               {2, [](const Q& q) { return sq(q - 1) * (2 * q * q + 3 * q + 28) / 6; }},
               {1, [](const Q& q) { return (q - 1) * (9 * q * q * q + 17 * q * q - 18 * q + 88) / 24; }}},
              {{BS::PrimalMin, 2, 5, [](const Q& q) { return (q - 4) * (q - 5) * (q - 6) / 24; }},
               {BS::DualMin, 2, -4, [](const Q& q) { return (q - 4) / 2; }}}};
    case Family::G3:
      if (s.extended) {
        return {{{5, [](const Q& q) { return q * sq(q - 1) * (q - 2) * (q - 8) / 120; }},
                 {4, [](const Q& q) { return 5 * q * sq(q - 1) * (q - 2) / 24; }},
                 {3, [](const Q& q) { return q * q * sq(q - 1) * (q - 2) / 12; }},
                 {2, [](const Q& q) { return q * sq(q - 1) * (2 * q * q + 7 * q + 20) / 12; }},
                 {1, [](const Q& q) { return q * (q - 1) * (9 * q * q * q + 13 * q * q - 6 * q + 80) / 24; }},
                 {0, [](const Q& q) {
                    return (q - 1) * (44 * q * q * q * q + 21 * q * q * q + 49 * q * q - 114 * q + 120) / 120;
                  }}},
                {{BS::PrimalMin, 3, 5, [](const Q& q) { return (q - 5) * (q - 6) * (q - 7) * (q - 8) / 120; }},
                 {BS::DualMin, 3, -5, [](const Q& q) { return (q - 8) / 2; }}}};
      }
      if (is(e, {2, 3, 4}) || is(e, {1, 2, 3})) {
        return {{{6, [](const Q& q) { return sq(q - 1) * (q - 2) * (q - 4) * (q - 8) / 120; }},
                 {5, [](const Q& q) { return 5 * sq(q - 1) * (q - 2) * (q - 4) / 24; }},
                 {4, [](const Q& q) { return sq(q - 1) * (q - 2) * (q * q - 2 * q + 2) / 12; }},
                 {3, [](const Q& q) { return sq(q - 1) * (q - 2) * (2 * q * q + 9 * q + 28) / 12; }},
                 {2, [](const Q& q) { return sq(q - 1) * (9 * q * q * q + 22 * q * q + 12 * q + 176) / 24; }},
                 {1, [](const Q& q) {
                    return (q - 1) * (44 * q * q * q * q + 65 * q * q * q + 125 * q * q - 170 * q + 536) / 120;
                  }}},
                {{BS::PrimalMin, 2, 6, [](const Q& q) { return (q - 4) * (q - 6) * (q - 7) * (q - 8) / 120; }},
                 {BS::DualMin, 2, -5, [](const Q& q) { return (q - 4) * (q - 8) / 6; }}}};
      }
      return {{{6, [](const Q& q) { return sq(q - 1) * (q - 2) * (q - 5) * (q - 8) / 120; }},
               {5, [](const Q& q) { return sq(q - 1) * (q - 2) * (3 * q - 14) / 12; }},
               {4, [](const Q& q) { return sq(q - 1) * (q - 2) * (q * q - 3 * q + 10) / 12; }},
               {3, [](const Q& q) { return sq(q - 1) * (q - 2) * (q * q + 5 * q + 10) / 6; }},
               {2, [](const Q& q) { return sq(q - 1) * (9 * q * q * q + 21 * q * q + 22 * q + 160) / 24; }},
               {1, [](const Q& q) {
                  return (q - 1) * (22 * q * q * q * q + 33 * q * q * q + 57 * q * q - 72 * q + 260) / 60;
                }}},
              {{BS::PrimalMin, 2, 6, [](const Q& q) { return (q - 5) * (q - 6) * (q - 7) * (q - 8) / 120; }},
               {BS::DualMin, 2, -5, [](const Q& q) { return (q - 5) * (q - 8) / 6; }}}};
    case Family::H4:
      if (s.extended && is(e, {1, 2, 3, 4})) {
        return {{{6, [](const Q& q) { return q * sq(q - 1) * (q - 2) * (q - 4) * (q - 8) / 720; }},
                 {5, [](const Q& q) { return q * sq(q - 1) * (q - 2) * (q - 4) / 24; }},
                 {4, [](const Q& q) { return q * sq(q - 1) * (q - 2) * (q * q - 2 * q + 2) / 48; }},
                 {3, [](const Q& q) { return q * sq(q - 1) * (q - 2) * (2 * q * q + 9 * q + 28) / 36; }},
                 {2, [](const Q& q) { return q * sq(q - 1) * (9 * q * q * q + 22 * q * q + 12 * q + 176) / 48; }},
                 {1, [](const Q& q) {
                    return q * (q - 1) * (44 * q * q * q * q + 65 * q * q * q + 125 * q * q - 170 * q + 536) / 120;
                  }},
                 {0, [](const Q& q) {
                    return (q - 1) *
                           (53 * q * q * q * q * q + 27 * q * q * q * q + 2 * q * q * q + 90 * q * q - 172 * q + 144) /
                           144;
                  }}},
                {{BS::PrimalMin, 3, 6,
                  [](const Q& q) { return (q - 4) * (q - 6) * (q - 7) * sq(q - 8) / 720; }},
                 {BS::DualMin, 3, -6, [](const Q& q) { return (q - 4) * (q - 8) / 6; }}}};
      }
      if (s.extended) {
        return {{{6, [](const Q& q) { return q * sq(q - 1) * (q - 2) * (q - 5) * (q - 8) / 720; }},
                 {5, [](const Q& q) { return q * sq(q - 1) * (q - 2) * (3 * q - 14) / 60; }},
                 {4, [](const Q& q) { return q * sq(q - 1) * (q - 2) * (q * q - 3 * q + 10) / 48; }},
                 {3, [](const Q& q) { return q * sq(q - 1) * (q - 2) * (q * q + 5 * q + 10) / 18; }},
                 {2, [](const Q& q) { return q * sq(q - 1) * (9 * q * q * q + 21 * q * q + 22 * q + 160) / 48; }},
                 {1, [](const Q& q) {
                    return q * (q - 1) * (22 * q * q * q * q + 33 * q * q * q + 57 * q * q - 72 * q + 260) / 60;
                  }},
                 {0, [](const Q& q) {
                    return (q - 1) *
                           (265 * q * q * q * q * q + 134 * q * q * q * q + 21 * q * q * q + 424 * q * q - 844 * q +
                            720) /
                           720;
                  }}},
                {{BS::PrimalMin, 3, 6,
                  [](const Q& q) { return (q - 5) * (q - 6) * (q - 7) * sq(q - 8) / 720; }},
                 {BS::DualMin, 3, -6, [](const Q& q) { return (q - 5) * (q - 8) / 6; }}}};
      }
      if (is(e, {1, 2, 3, 4}) || is(e, {2, 3, 4, 5})) {
        return {{{7, [](const Q& q) { return sq(q - 1) * (q - 2) * (q - 4) * (q - 6) * (q - 8) / 720; }},
                 {6, [](const Q& q) { return sq(q - 1) * (q - 2) * (q - 4) * (2 * q - 11) / 40; }},
                 {5, [](const Q& q) { return sq(q - 1) * (q - 2) * (q - 4) * (q * q - 2 * q + 12) / 48; }},
                 {4, [](const Q& q) { return sq(q - 1) * (q - 2) * (2 * q * q * q + 6 * q * q - 5 * q - 78) / 36; }},
                 {3, [](const Q& q) { return sq(q - 1) * (q - 2) * (q + 4) * (3 * q * q - 2 * q + 24) / 16; }},
                 {2, [](const Q& q) {
                    return sq(q - 1) * (44 * q * q * q * q + 110 * q * q * q + 235 * q * q - 110 * q + 1416) / 120;
                  }},
                 {1, [](const Q& q) {
                    return (q - 1) *
                           (265 * q * q * q * q * q + 399 * q * q * q * q + 400 * q * q * q + 1200 * q * q -
                            1880 * q + 3936) /
                           720;
                  }}},
                {{BS::PrimalMin, 2, 7,
                  [](const Q& q) { return (q - 4) * (q - 6) * (q - 7) * sq(q - 8) / 720; }},
                 {BS::DualMin, 2, -6, [](const Q& q) { return (q - 4) * (q - 6) * (q - 8) / 24; }}}};
      }
      return {{{7, [](const Q& q) { return sq(q - 1) * (q - 2) * (q - 5) * (q - 6) * (q - 8) / 720; }},
               {6, [](const Q& q) { return sq(q - 1) * (q - 2) * (q - 5) * (7 * q - 36) / 120; }},
               {5, [](const Q& q) { return sq(q - 1) * (q - 2) * (q * q * q - 7 * q * q + 34 * q - 96) / 48; }},
               {4, [](const Q& q) { return sq(q - 1) * (q - 2) * (2 * q * q * q + 7 * q * q - 19 * q - 30) / 36; }},
               {3, [](const Q& q) { return sq(q - 1) * (q - 2) * (9 * q * q * q + 29 * q * q + 62 * q + 240) / 48; }},
               {2, [](const Q& q) {
                  return sq(q - 1) * (44 * q * q * q * q + 111 * q * q * q + 219 * q * q - 34 * q + 1320) / 120;
                }},
               {1, [](const Q& q) {
                  return (q - 1) *
                         (265 * q * q * q * q * q + 398 * q * q * q * q + 417 * q * q * q + 1108 * q * q - 1708 * q +
                          3840) /
                         720;
                }}},
              {{BS::PrimalMin, 2, 7, [](const Q& q) { return (q - 5) * (q - 6) * (q - 7) * sq(q - 8) / 720; }},
               // The published value (q-5)(q-8)/6 contradicts the enumerator
               // above; b C(6,2) / ((q-1) C(q-1,2)) from A^perp_6 gives this,
               // which also equals lambda_2 - lambda_3 of the extended code.
               {BS::DualMin, 2, -6, [](const Q& q) { return (q - 5) * (q - 6) * (q - 8) / 24; }}}};
    case Family::CONJ:
      return {};
  }
  return {};
}

BigInt exact(const Q& v, const std::string& what) {
  if (!is_integral(v)) throw InconsistencyError(what + " is not an integer");
  return as_integer(v);
}

}  // namespace

ExpectedProfile expected_profile(const FamilySpec& spec) {
  const auto rows = spec.row_exponents();
  const std::uint32_t q = 1u << spec.m;
  ExpectedProfile p;
  p.n = q - 1 + (spec.extended ? 1 : 0);
  p.k = rows.size();
  p.d = p.n - p.k;

  const Q qq = q;
  // Negative offsets in the design table encode block size = -offset.
  auto block_size = [&](int offset) -> std::size_t {
    return offset < 0 ? static_cast<std::size_t>(-offset) : q - offset;
  };
  if (spec.family == Family::CONJ) {
    p.designs.push_back({BlockSource::PrimalMin, 2, p.n - p.k, std::nullopt});
    p.designs.push_back({BlockSource::DualMin, 2, p.k, std::nullopt});
    return p;
  }
  const auto form = closed_form(spec);
  BigInt sum = 0;
  for (const auto& [offset, coeff] : form.enumerator) {
    const std::size_t w = q - offset;
    BigInt a = exact(coeff(qq), "coefficient of z^" + std::to_string(w));
    sum += a;
    p.enumerator.emplace_back(w, std::move(a));
  }
  std::sort(p.enumerator.begin(), p.enumerator.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (sum != pow_big(BigInt(q), static_cast<unsigned>(p.k)) - 1) {
    throw InconsistencyError(spec.name() + ": closed-form enumerator does not sum to q^k - 1");
  }
  for (const auto& d : form.designs) {
    p.designs.push_back({d.source, d.t, block_size(d.w_offset), exact(d.lambda(qq), "design lambda")});
  }
  return p;
}

bool VerificationReport::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::string describe(const WeightDistribution& wd) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t w = 0; w < wd.counts.size(); ++w) {
    if (wd.counts[w] == 0) continue;
    os << (first ? "" : " ") << "A" << w << "=" << wd.counts[w];
    first = false;
  }
  return os.str();
}

}  // namespace

VerificationReport verify_family(const FamilySpec& spec, const FieldPtr& field,
                                 const Budget& budget, ExhaustivePolicy policy) {
  const auto expected = expected_profile(spec);
  const auto code = build_family(spec, field);
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const std::uint32_t q = code.q();

  VerificationReport r;
  r.spec = spec;
  r.q = q;
  r.modulus = field->modulus();
  auto check = [&](std::string name, bool pass, std::string detail = {}) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
    return pass;
  };

  r.code_class = nmds_classify(code, budget);
  {
    std::ostringstream os;
    os << "[" << n << "," << k << "," << r.code_class.d << "] d_dual=" << r.code_class.d_dual
       << " label=" << to_string(r.code_class.label);
    check("parameters", r.code_class.label == CodeLabel::NMDS && n == expected.n &&
                            k == expected.k && r.code_class.d == expected.d && r.code_class.d_exact,
          os.str());
  }

  r.supports = min_weight_supports(code, budget);
  if (!check("minimum-weight supports", !r.supports.violation && !r.supports.dual.empty(),
             r.supports.violation.value_or(std::to_string(r.supports.dual.size()) + " blocks"))) {
    return r;
  }
  bool paired = r.supports.primal.size() == r.supports.dual.size();
  for (std::size_t i = 0; paired && i < r.supports.dual.size(); ++i) {
    paired = r.supports.primal[i].size() + r.supports.dual[i].size() == n;
    for (auto j : r.supports.dual[i]) {
      paired = paired && !std::binary_search(r.supports.primal[i].begin(), r.supports.primal[i].end(), j);
    }
  }
  check("complement pairing", paired);

  const BigInt a_min = BigInt(r.supports.dual.size()) * (q - 1);
  r.completed = complete_weight_distribution_nmds(n, k, q, a_min);
  r.dual_completed = complete_dual_distribution_nmds(n, k, q, a_min);
  r.via_dual = macwilliams_transform(r.dual_completed);
  check("completion = dual recursion + MacWilliams", r.completed == r.via_dual, describe(r.completed));

  const BigInt total = pow_big(BigInt(q), static_cast<unsigned>(k));
  const bool run_exhaustive =
      policy == ExhaustivePolicy::Always ||
      (policy == ExhaustivePolicy::Auto && total <= budget.codewords);
  if (run_exhaustive) {
    r.exhaustive = weight_distribution_exhaustive(code, budget);
    check("exhaustive = completion", *r.exhaustive == r.completed, describe(*r.exhaustive));
  }
  const WeightDistribution& wd = r.exhaustive ? *r.exhaustive : r.completed;

  if (!expected.enumerator.empty()) {
    auto closed = WeightDistribution::zero(n, k, q);
    closed.counts[0] = 1;
    for (const auto& [w, a] : expected.enumerator) closed.counts[w] = a;
    check("enumerator = closed form", closed == wd, describe(closed));
  }

  r.dual = macwilliams_transform(wd);
  check("A_{n-k} = A^perp_k", wd.counts[n - k] == r.dual.counts[k] && r.dual == r.dual_completed,
        "A_" + std::to_string(n - k) + "=" + to_string(wd.counts[n - k]) + " A^perp_" +
            std::to_string(k) + "=" + to_string(r.dual.counts[k]));
  if (r.dual.min_weight() >= 3) {
    const auto pless = pless_moment_check(wd);
    check("Pless moments", pless.pass,
          "residuals " + to_string(pless.residuals[0]) + "," + to_string(pless.residuals[1]) + "," +
              to_string(pless.residuals[2]));
  }

  for (std::size_t t : {2, 3}) {
    if (t < std::min(wd.min_weight(), r.dual.min_weight())) {
      r.assmus_mattson.emplace_back(t, assmus_mattson_check(wd, r.dual, t));
    } else {
      r.assmus_mattson.emplace_back(t, std::nullopt);
    }
  }

  std::optional<Design> dual_min_design;
  std::optional<Design> primal_min_design;
  for (const auto& ed : expected.designs) {
    Design design;
    const WeightDistribution* source = &wd;
    switch (ed.source) {
      case BlockSource::PrimalMin:
        design = Design::from_blocks(n, n - k, r.supports.primal);
        primal_min_design = design;
        break;
      case BlockSource::DualMin:
        design = Design::from_blocks(n, k, r.supports.dual);
        dual_min_design = design;
        source = &r.dual;
        break;
      case BlockSource::DualWeight4: {
        const auto supports = fixed_weight_dual_supports(code, 4, budget);
        design = Design::from_blocks(n, 4, supports);
        source = &r.dual;
        break;
      }
    }
    DesignReport dr{ed, verify_t_design(design, ed.t, budget.worker_count()), std::nullopt};
    const BigInt& a_w = source->counts[design.w];
    if (a_w > 0) dr.from_weights = expected_design_params(a_w, n, design.w, ed.t, q);

    std::ostringstream label;
    label << "design " << to_string(ed.source) << " " << ed.t << "-(" << n << "," << design.w << ",";
    if (ed.lambda) label << *ed.lambda; else label << "?";
    label << ")";
    std::ostringstream detail;
    detail << "b=" << dr.verdict.b << " lambda=";
    if (dr.verdict.lambda) detail << *dr.verdict.lambda; else detail << "none";
    detail << (dr.verdict.simple ? " simple" : " repeated") << (dr.verdict.steiner ? " steiner" : "");
    const bool lambda_ok = dr.verdict.lambda && (!ed.lambda || *dr.verdict.lambda == *ed.lambda) &&
                           *dr.verdict.lambda > 0;
    const bool weights_ok = dr.from_weights && dr.from_weights->b == dr.verdict.b && dr.verdict.lambda &&
                        dr.from_weights->lambda == *dr.verdict.lambda;
    check(label.str(), lambda_ok && weights_ok && dr.verdict.simple, detail.str());
    r.designs.push_back(std::move(dr));
  }

  if (dual_min_design && primal_min_design) {
    const auto dual_verdict = verify_t_design(*dual_min_design, 2, budget.worker_count());
    if (dual_verdict.lambda) {
      const auto comp = complementary_design(*dual_min_design, dual_verdict);
      const auto comp_verdict = verify_t_design(comp.design, 2, budget.worker_count());
      check("complementary design",
            comp.design.blocks == primal_min_design->blocks && comp_verdict.lambda &&
                *comp_verdict.lambda == comp.expected_lambda,
            "lambda0=" + to_string(comp.expected_lambda));
    } else {
      check("complementary design", false, "dual-min blocks are not a 2-design");
    }
  }
  return r;
}

}  // namespace nmds
