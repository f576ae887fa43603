#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace nmds {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt pow_big(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

// Exact binomial coefficient; zero when k > n.
BigInt binomial_big(std::uint64_t n, std::uint64_t k);

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline BigInt as_integer(const Rational& r) { return boost::multiprecision::numerator(r); }

}  // namespace nmds
