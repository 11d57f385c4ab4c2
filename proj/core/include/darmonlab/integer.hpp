#pragma once

// Exact integer and rational helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace darmonlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Factorization of |n| into (prime, exponent) pairs, primes increasing. n != 0.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);
/// As factor_integer, but gives up after max_steps Pollard-rho iterations, or at once when the
/// part left after trial division is composite and longer than max_bits.
std::optional<std::vector<std::pair<Integer, unsigned>>> factor_integer_bounded(
    const Integer& n, long max_steps, std::size_t max_bits = SIZE_MAX);

bool is_probable_prime(const Integer& n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Exponent of the prime p in n != 0.
unsigned valuation_p(const Integer& n, const Integer& p);

/// p-adic valuation of a nonzero rational.
long valuation_p(const Rational& q, const Integer& p);

/// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

/// Always "num/den", den > 0.
std::string to_string(const Rational& q);

/// Exact k-th root of n when it exists (n >= 0 for even k).
std::optional<Integer> exact_root(const Integer& n, unsigned k);

std::uint64_t to_u64(const Integer& n);

/// Least nonnegative residue.
Integer mod_floor(const Integer& a, const Integer& m);

/// Residue in (-m/2, m/2].
Integer mod_symmetric(const Integer& a, const Integer& m);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Inverse modulo m; throws std::domain_error when gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Divisors of |n| (positive), n != 0. Intended for small n.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace darmonlab
