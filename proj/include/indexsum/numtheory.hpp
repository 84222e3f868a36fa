#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace indexsum {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Returns (p, e) with n = p^e when n is a prime power, e >= 1.
std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t n);

/// base^exp, or nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit = UINT64_MAX);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Smallest non-negative representative of v mod m (m > 0).
inline std::uint64_t reduce_mod(std::int64_t v, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  std::int64_t r = v % sm;
  if (r < 0) r += sm;
  return static_cast<std::uint64_t>(r);
}

}  // namespace indexsum
