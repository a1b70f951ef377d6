#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace hg {

inline bool is_prime(long n) {
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Prime factorisation as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e)
      out.emplace_back(d, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

inline long euler_phi(long n) {
  long r = n;
  for (auto [p, e] : factorize(n))
    r = r / p * (p - 1);
  return r;
}

/// Exponent of p in n (n > 0).
inline int ord_p(long n, long p) {
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

inline long ipow(long base, int exp) {
  long r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

inline long mod_pow(long base, long exp, long mod) {
  __int128 r = 1, b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1)
      r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<long>(r % mod);
}

inline long mod_inverse(long a, long mod) { return mod_pow(a, mod - 2, mod); }

inline long positive_mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace hg
