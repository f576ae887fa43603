#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace nmds {

// Elements of GF(2^m) are packed polynomial-basis coordinates: bit i is the
// coefficient of x^i. 0 is the additive and 1 the multiplicative identity.
using Element = std::uint32_t;

inline constexpr int kMinDegree = 2;
inline constexpr int kMaxDegree = 16;

// Lexicographically least irreducible polynomial of degree m over GF(2),
// bit-encoded (0b1011 for x^3 + x + 1).
std::uint32_t default_modulus(int m);

// Degree of the smallest irreducible factor of a bit-encoded polynomial over
// GF(2), or 0 when the polynomial is irreducible. Polynomials of degree < 1
// are rejected.
int smallest_factor_degree(std::uint64_t poly);

// Immutable GF(2^m) with exp/log tables relative to a primitive element.
// Shareable across threads once built.
class Field {
 public:
  // m in [2, 16]. When `modulus` is omitted the default_modulus(m) is used.
  // Throws PreconditionError for m out of range, a modulus of the wrong
  // degree, or a reducible modulus (the message names the factor degree).
  static Field build(int m, std::optional<std::uint32_t> modulus = std::nullopt);

  int m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t order() const noexcept { return q_ - 1; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  // Smallest encoded element of multiplicative order q - 1.
  Element alpha() const noexcept { return alpha_; }

  Element add(Element a, Element b) const noexcept { return a ^ b; }
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  // Throws std::domain_error for a == 0.
  Element inv(Element a) const;
  // a / b; throws std::domain_error for b == 0.
  Element div(Element a, Element b) const;
  // a^e for e >= 0 with 0^0 = 1; the exponent is reduced mod q-1 for a != 0.
  Element pow(Element a, std::uint64_t e) const noexcept;
  Element square(Element a) const noexcept { return mul(a, a); }
  // Unique square root (Frobenius is bijective in characteristic 2).
  Element sqrt(Element a) const noexcept { return pow(a, q_ / 2); }

  // alpha^e, e taken mod q-1.
  Element exp(std::uint64_t e) const noexcept { return exp_[e % (q_ - 1)]; }
  // Discrete log base alpha; throws std::domain_error for 0.
  std::uint32_t log(Element a) const;

  // Absolute trace sum_{i<m} a^(2^i), which always lies in {0, 1}.
  int trace(Element a) const noexcept;

  bool contains(Element a) const noexcept { return a < q_; }

  std::span<const Element> exp_table() const noexcept { return {exp_.data(), q_ - 1}; }
  std::span<const std::uint32_t> log_table() const noexcept { return log_; }

  // Polynomial-basis product reduced by the modulus, independent of the
  // tables. Used to build and to cross-check them.
  Element mul_reference(Element a, Element b) const noexcept;

 private:
  Field() = default;

  int m_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t modulus_ = 0;
  Element alpha_ = 0;
  std::vector<Element> exp_;        // length 2(q-1) so log sums need no reduction
  std::vector<std::uint32_t> log_;  // log_[0] unused
};

// Number-theoretic checks and root counts over GF(2^m).

// gcd(2^h + 1, 2^m - 1), cross-checked against the closed case formula
// (1 when m/gcd(h,m) is odd, 2^gcd(h,m) + 1 otherwise). Throws
// InconsistencyError if the two disagree.
std::uint64_t gcd_power_plus_one(int h, int m);

// The case formula alone.
std::uint64_t gcd_power_plus_one_formula(int h, int m);

// |{x in GF(q) : x^(2^h+1) = c}| for c != 0, cross-checked against the
// prediction "0 unless c is a (2^h+1)-th power, then gcd(2^h+1, q-1)".
int count_binomial_roots(const Field& f, int h, Element c);

// Roots of a x^2 + b x + c in GF(q) for a != 0 from the trace criterion,
// cross-checked by a full scan. Throws std::domain_error when a == 0.
int quadratic_root_count(const Field& f, Element a, Element b, Element c);

// Brute-force root count of a x^2 + b x + c over GF(q).
int quadratic_root_scan(const Field& f, Element a, Element b, Element c);

// Zeros in GF(q)^* of a x^(2^h+1) + b x + c. Requires gcd(h, m) = 1 and
// (a, b, c) != 0; asserts the count lies in {0, 1, 3} ({0, 1} when a = 0).
int count_trinomial_roots_f(const Field& f, int h, Element a, Element b, Element c);

// Zeros in GF(q)^* of a x^(2^h+1) + b x^(2^h) + c with the same contract.
// When a, b, c are all nonzero the count is also matched against the reduced
// forms U_l(x) = x^(2^h+1) + x^(2^h) + l and P_l(x) = x^(2^h+1) + x + l.
int count_trinomial_roots_g(const Field& f, int h, Element a, Element b, Element c);

// Raw scans without the membership assertions; used by the lemma suites so a
// violation becomes a counterexample instead of an exception.
int scan_trinomial_f(const Field& f, int h, Element a, Element b, Element c);
int scan_trinomial_g(const Field& f, int h, Element a, Element b, Element c);

// A polynomial over GF(q) given either as a monomial x^e or by coefficients
// (index i holds the coefficient of x^i).
class FieldPolynomial {
 public:
  static FieldPolynomial monomial(std::uint64_t exponent);
  static FieldPolynomial from_coefficients(std::vector<Element> coefficients);

  // Degree; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept;
  Element evaluate(const Field& f, Element x) const noexcept;

 private:
  std::variant<std::uint64_t, std::vector<Element>> repr_;
};

// True iff f permutes GF(q), f(0) = 0, f(1) = 1 and every
// g_a(x) = (f(x+a) + f(a)) x^(q-2) permutes GF(q). The distinct-slope
// characterisation is evaluated as well and must agree (InconsistencyError
// otherwise). Throws PreconditionError when deg f >= q.
bool is_oval_polynomial(const Field& f, const FieldPolynomial& poly);

// The two characterisations separately.
bool oval_by_definition(const Field& f, const FieldPolynomial& poly);
bool oval_by_slopes(const Field& f, const FieldPolynomial& poly);

}  // namespace nmds
