#include "skelsig/arith.hpp"

#include "skelsig/rational.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace skelsig {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int max_prime_exponent(std::int64_t n) {
  int best = 0;
  for (const auto& [p, e] : factorize(n)) best = std::max(best, e);
  return best;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = std::gcd(a, b);
  int128 l = static_cast<int128>(a / g) * b;
  if (l < 0) l = -l;
  if (l > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("lcm overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace skelsig
