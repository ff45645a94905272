#pragma once

// Small integer helpers shared by the field and digit modules.

#include <cstdint>
#include <utility>
#include <vector>

namespace hypexp {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

bool is_prime(u64 n) noexcept;

/// Prime factorisation by trial division; pairs (prime, exponent), ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

std::vector<u64> divisors(u64 n);

u64 gcd(u64 a, u64 b) noexcept;
u64 lcm(u64 a, u64 b);

/// Floor-free residue of a signed value, always in [0, m).
inline u64 mod_floor(i64 a, u64 m) noexcept {
  const i64 r = a % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

inline u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept;

/// base^exp; throws InvalidArgument when the result would not fit in 63 bits.
u64 checked_pow(u64 base, unsigned exp);

/// Multiplicative order of a modulo n (requires gcd(a, n) = 1, n >= 1).
u64 multiplicative_order(u64 a, u64 n);

/// Legendre-style quadratic residuosity of a mod an odd prime p (a != 0 mod p).
bool is_square_mod_prime(u64 a, u64 p) noexcept;

}  // namespace hypexp
