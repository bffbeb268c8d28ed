#pragma once

#include <cstdint>
#include <vector>

namespace solchar {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part_of(std::uint64_t n, std::uint64_t p);

/// True iff n = p^a for some prime p and a >= 0 (so 1 counts, for every p).
bool is_power_of(std::uint64_t n, std::uint64_t p);

/// The prime p with n = p^a, a >= 1; 0 if n is not a nontrivial prime power.
std::uint64_t prime_of_prime_power(std::uint64_t n);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t invmod(std::uint64_t a, std::uint64_t mod);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

} // namespace solchar
