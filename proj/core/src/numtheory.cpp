#include "hypexp/numtheory.hpp"

#include <algorithm>
#include <limits>

#include "hypexp/error.hpp"

namespace hypexp {

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  if (n < 2) return out;
  for (u64 f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f != 0) continue;
    unsigned e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    out.emplace_back(f, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto [prime, exp] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 gcd(u64 a, u64 b) noexcept {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 result = 1;
  constexpr u64 limit = std::numeric_limits<u64>::max() >> 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) {
      raise(ErrorKind::InvalidArgument, "integer power overflows 63 bits");
    }
    result *= base;
  }
  return result;
}

u64 multiplicative_order(u64 a, u64 n) {
  if (n == 0) raise(ErrorKind::InvalidArgument, "order modulo 0");
  if (n == 1) return 1;
  if (gcd(a % n, n) != 1) raise(ErrorKind::InvalidArgument, "order of a non-unit");
  // Carmichael-free approach: the order divides phi(n); strip prime factors.
  u64 phi = n;
  for (auto [prime, exp] : factorize(n)) {
    (void)exp;
    phi = phi / prime * (prime - 1);
  }
  u64 order = phi;
  for (auto [prime, exp] : factorize(phi)) {
    for (unsigned e = 0; e < exp; ++e) {
      if (pow_mod(a, order / prime, n) == 1) {
        order /= prime;
      } else {
        break;
      }
    }
  }
  return order;
}

bool is_square_mod_prime(u64 a, u64 p) noexcept {
  if (p == 2) return true;
  return pow_mod(a % p, (p - 1) / 2, p) == 1;
}

}  // namespace hypexp
