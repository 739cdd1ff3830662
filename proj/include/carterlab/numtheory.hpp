#pragma once

#include <cstdint>
#include <vector>

namespace carterlab {

bool is_prime(std::uint64_t n);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
/// True iff n is 1 or a power of p.
bool is_power_of(std::uint64_t n, std::uint64_t p);
std::uint64_t factorial(unsigned n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Decomposes q = p^k; returns false if q is not a prime power.
bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& k);

}  // namespace carterlab
