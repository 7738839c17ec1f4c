#include "mvz/numeric.hpp"

#include <cctype>

#include "mvz/errors.hpp"

namespace mvz {

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool is_decimal(std::string_view text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

Integer decimal(std::string_view text) {
  if (!is_decimal(text)) throw InvalidInput("not a decimal integer: '" + std::string(text) + "'");
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

Integer parse_integer(std::string_view text) { return decimal(text); }

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(decimal(text));
  Integer num = decimal(text.substr(0, slash));
  Integer den = decimal(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<int> mobius_table(std::uint32_t limit) {
  auto spf = smallest_prime_factors(limit);
  std::vector<int> mu(static_cast<std::size_t>(limit) + 1, 0);
  if (limit >= 1) mu[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    std::uint64_t p = spf[i];
    std::uint64_t rest = i / p;
    mu[i] = (rest % p == 0) ? 0 : -mu[rest];
  }
  return mu;
}

Rational dot(const RationalVector& a, const std::vector<long>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

}  // namespace mvz
