#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Small integer helpers shared by the geometry and group modules.
namespace skelsig {

bool is_prime(std::int64_t n);

/// Positive divisors of n (n >= 1), ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// (prime, exponent) pairs, ascending by prime. n >= 1.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Largest exponent in the prime factorization of n; 0 for n = 1.
int max_prime_exponent(std::int64_t n);

/// lcm(a, b); throws std::overflow_error if the result exceeds int64.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace skelsig
