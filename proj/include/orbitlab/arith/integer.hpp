#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace orbitlab::arith {

using Integer = mpz_class;
using Rational = mpq_class;

/// prime -> exponent, ordered by prime.
using Factorization = std::map<Integer, unsigned long>;

/// Deterministic Miller-Rabin below 3.3e24, BPSW above.
bool is_prime(const Integer& n);

/// Largest e with p^e | x.  Throws UndefinedValuation for x = 0, InputError for composite p.
unsigned long padic_valuation(const Integer& x, const Integer& p);

/// Divides all powers of p out of |x|; returns the exponent removed.  No primality check.
unsigned long remove_factor(Integer& x, const Integer& p);

/// Primes up to `bound` (sieve, cached for bound <= 10^6).
const std::vector<std::uint32_t>& small_primes();

/// Complete factorization of |x|: trial division to 10^6, then Pollard-Brent rho.
/// Throws FactorizationTooHard once a single split needs more than `rho_budget` iterations.
Factorization factor_integer(const Integer& x, unsigned long rho_budget = 1'000'000);

/// Natural log of |x| from bit length and the leading 64 bits.  Throws InputError for x = 0.
double log_abs(const Integer& x);

/// Same, in extended precision.
long double log_abs_ld(const Integer& x);

/// Exact number of decimal digits of |x| (1 for x = 0).
std::size_t decimal_digits(const Integer& x);

Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);
Integer pow(const Integer& base, unsigned long exponent);

/// Parses an optionally signed decimal integer; throws InputError on anything else.
Integer parse_integer(const std::string& text);

/// Parses "p/q", "p", or a signed decimal; throws InputError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& q);

}  // namespace orbitlab::arith
