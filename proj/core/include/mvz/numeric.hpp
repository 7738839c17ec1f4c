#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mvz {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Always "p/q", with q = 1 written out.
std::string to_fraction_string(const Rational& q);
/// Accepts "p", "p/q" and leading sign; throws InvalidInput.
Rational parse_rational(std::string_view text);
/// Accepts an optional sign followed by decimal digits; throws InvalidInput.
Integer parse_integer(std::string_view text);

Integer binomial(long n, long k);

/// Primes p <= limit in increasing order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Smallest prime factor table for [0, limit]; entries 0 and 1 are 0.
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit);

/// Mobius function table for [0, limit].
std::vector<int> mobius_table(std::uint32_t limit);

Rational dot(const RationalVector& a, const std::vector<long>& b);

}  // namespace mvz
