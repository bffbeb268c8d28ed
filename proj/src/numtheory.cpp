#include "solchar/numtheory.hpp"

#include <numeric>

#include "solchar/error.hpp"

namespace solchar {

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q)
      return true;
    if (n % q == 0)
      return false;
  }
  // Miller-Rabin with these witnesses is deterministic below 3.3e24.
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>((unsigned __int128)x * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::uint64_t p_part_of(std::uint64_t n, std::uint64_t p)
{
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(std::uint64_t n, std::uint64_t p)
{
  return n >= 1 && p_part_of(n, p) == n;
}

std::uint64_t prime_of_prime_power(std::uint64_t n)
{
  auto ps = prime_divisors(n);
  return ps.size() == 1 ? ps[0] : 0;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
  unsigned __int128 r = 1 % mod, b = base % mod;
  while (exp) {
    if (exp & 1)
      r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t mod)
{
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(mod), nr = static_cast<std::int64_t>(a % mod);
  while (nr) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (r != 1)
    throw Error(ErrorKind::NotPrime, "element is not invertible modulo " + std::to_string(mod));
  if (t < 0)
    t += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(t);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "64-bit multiplication overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "64-bit addition overflow");
  return r;
}

} // namespace solchar
