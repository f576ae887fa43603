#include "nmds/gf.hpp"

#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nmds/errors.hpp"

namespace nmds {

namespace {

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
  const int df = poly_degree(f);
  for (int da = poly_degree(a); da >= df; da = poly_degree(a)) a ^= f << (da - df);
  return a;
}

// Carry-less product of two residues (degree < 32) reduced mod f.
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  std::uint64_t acc = 0;
  a = poly_mod(a, f);
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a = poly_mod(a << 1, f);
  }
  return poly_mod(acc, f);
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t two_pow_plus_one(int h) {
  if (h < 1 || h > 62) throw PreconditionError("h must lie in [1, 62]");
  return (std::uint64_t{1} << h) + 1;
}

void require_coprime(const Field& f, int h) {
  if (h < 1) throw PreconditionError("h must be positive");
  if (std::gcd(h, f.m()) != 1) {
    std::ostringstream os;
    os << "gcd(h, m) = 1 is required (h = " << h << ", m = " << f.m() << ")";
    throw PreconditionError(os.str());
  }
}

}  // namespace

int smallest_factor_degree(std::uint64_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) throw PreconditionError("polynomial must have degree >= 1");
  if (d > 32) throw PreconditionError("polynomial degree above 32 is not supported");
  // Ben-Or: f has a factor of degree i iff gcd(f, x^(2^i) - x) != 1, and the
  // first such i is the smallest factor degree.
  std::uint64_t power = 2;  // x^(2^i) mod f, starting at i = 0 with x
  for (int i = 1; i <= d / 2; ++i) {
    power = poly_mulmod(power, power, poly);
    if (poly_gcd(poly, power ^ 2u) != 1) return i;
  }
  return 0;
}

std::uint32_t default_modulus(int m) {
  if (m < kMinDegree || m > kMaxDegree) throw PreconditionError("m must lie in [2, 16]");
  for (std::uint32_t p = (1u << m) | 1u; p < (2u << m); p += 2) {
    if (smallest_factor_degree(p) == 0) return p;
  }
  throw InconsistencyError("no irreducible polynomial found");  // unreachable
}

Element Field::mul_reference(Element a, Element b) const noexcept {
  return static_cast<Element>(poly_mulmod(a, b, modulus_));
}

Field Field::build(int m, std::optional<std::uint32_t> modulus) {
  if (m < kMinDegree || m > kMaxDegree) {
    throw PreconditionError("m must lie in [2, 16], got " + std::to_string(m));
  }
  const std::uint32_t poly = modulus.value_or(default_modulus(m));
  if (poly_degree(poly) != m) {
    throw PreconditionError("modulus " + std::to_string(poly) + " does not have degree " +
                            std::to_string(m));
  }
  if (const int factor = smallest_factor_degree(poly); factor != 0) {
    throw PreconditionError("modulus " + std::to_string(poly) +
                            " is reducible: it has an irreducible factor of degree " +
                            std::to_string(factor));
  }

  Field f;
  f.m_ = m;
  f.q_ = 1u << m;
  f.modulus_ = poly;
  const std::uint32_t order = f.q_ - 1;

  auto slow_pow = [&](Element a, std::uint64_t e) {
    Element r = 1;
    while (e != 0) {
      if (e & 1u) r = f.mul_reference(r, a);
      a = f.mul_reference(a, a);
      e >>= 1;
    }
    return r;
  };
  const auto primes = prime_factors(order);
  for (Element a = 2; a < f.q_ && f.alpha_ == 0; ++a) {
    bool full = true;
    for (auto p : primes) full = full && slow_pow(a, order / p) != 1;
    if (full) f.alpha_ = a;
  }
  if (order == 1) f.alpha_ = 1;
  if (f.alpha_ == 0) throw InconsistencyError("no primitive element found");

  f.exp_.assign(2 * static_cast<std::size_t>(order), 0);
  f.log_.assign(f.q_, 0);
  Element x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    if (i != 0 && x == 1) throw InconsistencyError("primitive element has short order");
    f.exp_[i] = x;
    f.exp_[i + order] = x;
    f.log_[x] = i;
    x = f.mul_reference(x, f.alpha_);
  }
  if (x != 1) throw InconsistencyError("alpha^(q-1) != 1");
  for (Element y = 1; y < f.q_; ++y) {
    if (f.exp_[f.log_[y]] != y) throw InconsistencyError("exp/log tables are inconsistent");
  }
  return f;
}

Element Field::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Element Field::div(Element a, Element b) const {
  if (b == 0) throw std::domain_error("division by zero");
  if (a == 0) return 0;
  return exp_[log_[a] + (q_ - 1 - log_[b])];
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

std::uint32_t Field::log(Element a) const {
  if (a == 0) throw std::domain_error("logarithm of zero");
  return log_[a];
}

int Field::trace(Element a) const noexcept {
  Element acc = a;
  Element t = a;
  for (int i = 1; i < m_; ++i) {
    t = mul(t, t);
    acc ^= t;
  }
  return static_cast<int>(acc);
}

std::uint64_t gcd_power_plus_one_formula(int h, int m) {
  if (h < 1 || m < 1) throw PreconditionError("h and m must be positive");
  const int ell = std::gcd(h, m);
  if ((m / ell) % 2 == 1) return 1;
  return (std::uint64_t{1} << ell) + 1;
}

std::uint64_t gcd_power_plus_one(int h, int m) {
  if (m < 2 || m > 62) throw PreconditionError("m must lie in [2, 62]");
  const std::uint64_t direct = std::gcd(two_pow_plus_one(h), (std::uint64_t{1} << m) - 1);
  if (direct != gcd_power_plus_one_formula(h, m)) {
    throw InconsistencyError("gcd(2^h+1, 2^m-1) disagrees with the case formula");
  }
  return direct;
}

int count_binomial_roots(const Field& f, int h, Element c) {
  if (c == 0 || !f.contains(c)) throw PreconditionError("c must be a nonzero field element");
  const std::uint64_t d = two_pow_plus_one(h);
  int count = 0;
  for (Element x = 0; x < f.q(); ++x) count += f.pow(x, d) == c;

  const std::uint64_t g = std::gcd(d, std::uint64_t{f.order()});
  const bool is_power = f.log(c) % g == 0;
  const int predicted = is_power ? static_cast<int>(g) : 0;
  if (count != predicted) {
    throw InconsistencyError("binomial root count disagrees with the gcd prediction");
  }
  return count;
}

int quadratic_root_scan(const Field& f, Element a, Element b, Element c) {
  int count = 0;
  for (Element x = 0; x < f.q(); ++x) {
    count += (f.mul(a, f.mul(x, x)) ^ f.mul(b, x) ^ c) == 0;
  }
  return count;
}

int quadratic_root_count(const Field& f, Element a, Element b, Element c) {
  if (a == 0) throw std::domain_error("leading coefficient must be nonzero");
  int predicted;
  if (b == 0) {
    predicted = 1;
  } else {
    predicted = f.trace(f.div(f.mul(a, c), f.mul(b, b))) == 0 ? 2 : 0;
  }
  if (predicted != quadratic_root_scan(f, a, b, c)) {
    throw InconsistencyError("trace criterion disagrees with the root scan");
  }
  return predicted;
}

int scan_trinomial_f(const Field& f, int h, Element a, Element b, Element c) {
  const std::uint64_t d = two_pow_plus_one(h);
  int count = 0;
  for (Element x = 1; x < f.q(); ++x) {
    count += (f.mul(a, f.pow(x, d)) ^ f.mul(b, x) ^ c) == 0;
  }
  return count;
}

int scan_trinomial_g(const Field& f, int h, Element a, Element b, Element c) {
  const std::uint64_t d = two_pow_plus_one(h);
  const std::uint64_t e = d - 1;
  int count = 0;
  for (Element x = 1; x < f.q(); ++x) {
    count += (f.mul(a, f.pow(x, d)) ^ f.mul(b, f.pow(x, e)) ^ c) == 0;
  }
  return count;
}

namespace {

void check_trinomial_membership(int count, Element a, const char* name) {
  const bool ok = a != 0 ? (count == 0 || count == 1 || count == 3) : (count == 0 || count == 1);
  if (!ok) {
    throw InconsistencyError(std::string(name) + " root count " + std::to_string(count) +
                             " outside the admissible set");
  }
}

}  // namespace

int count_trinomial_roots_f(const Field& f, int h, Element a, Element b, Element c) {
  require_coprime(f, h);
  if (a == 0 && b == 0 && c == 0) throw PreconditionError("(a, b, c) must not be all zero");
  const int count = scan_trinomial_f(f, h, a, b, c);
  check_trinomial_membership(count, a, "f");
  return count;
}

int count_trinomial_roots_g(const Field& f, int h, Element a, Element b, Element c) {
  require_coprime(f, h);
  if (a == 0 && b == 0 && c == 0) throw PreconditionError("(a, b, c) must not be all zero");
  const int count = scan_trinomial_g(f, h, a, b, c);
  check_trinomial_membership(count, a, "g");
  if (a != 0 && b != 0 && c != 0) {
    // g(v x) = a v^(2^h+1) U_l(x) with v = b/a and l = c / (a v^(2^h+1));
    // P_l(x + 1) = U_l(x) links U_l to the f-form.
    const Element v = f.div(b, a);
    const Element ell = f.div(c, f.mul(a, f.pow(v, two_pow_plus_one(h))));
    const int u_count = scan_trinomial_g(f, h, 1, 1, ell);
    const int p_count = scan_trinomial_f(f, h, 1, 1, ell);
    if (u_count != count || p_count != count) {
      throw InconsistencyError("g-form root count disagrees with its reduced forms");
    }
  }
  return count;
}

FieldPolynomial FieldPolynomial::monomial(std::uint64_t exponent) {
  FieldPolynomial p;
  p.repr_ = exponent;
  return p;
}

FieldPolynomial FieldPolynomial::from_coefficients(std::vector<Element> coefficients) {
  while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
  FieldPolynomial p;
  p.repr_ = std::move(coefficients);
  return p;
}

std::uint64_t FieldPolynomial::degree() const noexcept {
  if (const auto* e = std::get_if<std::uint64_t>(&repr_)) return *e;
  const auto& c = std::get<std::vector<Element>>(repr_);
  return c.empty() ? 0 : c.size() - 1;
}

Element FieldPolynomial::evaluate(const Field& f, Element x) const noexcept {
  if (const auto* e = std::get_if<std::uint64_t>(&repr_)) return f.pow(x, *e);
  const auto& c = std::get<std::vector<Element>>(repr_);
  Element acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = f.mul(acc, x) ^ *it;
  return acc;
}

namespace {

std::vector<Element> tabulate(const Field& f, const FieldPolynomial& poly) {
  if (poly.degree() >= f.q()) throw PreconditionError("polynomial degree must be below q");
  std::vector<Element> values(f.q());
  for (Element x = 0; x < f.q(); ++x) values[x] = poly.evaluate(f, x);
  return values;
}

bool is_permutation(const std::vector<Element>& values) {
  std::vector<bool> seen(values.size(), false);
  for (auto v : values) {
    if (v >= values.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool normalized_permutation(const std::vector<Element>& v) {
  return v.size() >= 2 && v[0] == 0 && v[1] == 1 && is_permutation(v);
}

}  // namespace

bool oval_by_definition(const Field& f, const FieldPolynomial& poly) {
  const auto v = tabulate(f, poly);
  if (!normalized_permutation(v)) return false;
  std::vector<Element> g(f.q());
  for (Element a = 0; a < f.q(); ++a) {
    for (Element x = 0; x < f.q(); ++x) {
      g[x] = f.mul(v[x ^ a] ^ v[a], f.pow(x, f.q() - 2));
    }
    if (!is_permutation(g)) return false;
  }
  return true;
}

bool oval_by_slopes(const Field& f, const FieldPolynomial& poly) {
  const auto v = tabulate(f, poly);
  if (!normalized_permutation(v)) return false;
  std::vector<bool> seen(f.q());
  for (Element x = 0; x < f.q(); ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (Element y = 0; y < f.q(); ++y) {
      if (y == x) continue;
      const Element slope = f.div(v[x] ^ v[y], x ^ y);
      if (seen[slope]) return false;
      seen[slope] = true;
    }
  }
  return true;
}

bool is_oval_polynomial(const Field& f, const FieldPolynomial& poly) {
  const bool by_definition = oval_by_definition(f, poly);
  if (by_definition != oval_by_slopes(f, poly)) {
    throw InconsistencyError("oval definition and slope criterion disagree");
  }
  return by_definition;
}

}  // namespace nmds
