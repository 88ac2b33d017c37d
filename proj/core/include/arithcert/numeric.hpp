#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace arithcert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Deterministic primality for machine-sized integers.
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than `n`.
std::uint64_t next_prime(std::uint64_t n);

/// Distinct prime divisors of |n| in ascending order. |n| <= 1 gives {}.
std::vector<Integer> prime_factors(const Integer& n);

/// Distinct primes dividing the numerator or denominator of `q`.
std::vector<std::uint64_t> prime_support(const Rational& q);

/// p-adic valuation. Zero arguments are rejected.
long valuation(const Integer& n, std::uint64_t p);
long valuation(const Rational& q, std::uint64_t p);

/// The squarefree integer in the class q * (Q^x)^2. Zero is rejected.
Integer squarefree_class(const Rational& q);

/// Parses "a", "-a" or "a/b". Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals, e.g. "1,-1/2,3".
std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace arithcert
