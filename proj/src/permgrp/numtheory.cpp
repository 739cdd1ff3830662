#include "carterlab/numtheory.hpp"

#include <limits>
#include <stdexcept>

namespace carterlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) { return n != 0 && p_part(n, p) == n; }

std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / i)
      throw std::overflow_error("factorial overflows 64 bits");
    r *= i;
  }
  return r;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("power overflows 64 bits");
    r *= base;
  }
  return r;
}

bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& k) {
  auto ps = prime_divisors(q);
  if (ps.size() != 1) return false;
  p = ps[0];
  k = 0;
  while (q > 1) {
    q /= p;
    ++k;
  }
  return true;
}

}  // namespace carterlab
