#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hypexp/numtheory.hpp"

namespace hypexp {

/// Element of GF(p^r), packed as the integer sum c_i * p^i of its
/// polynomial-basis coefficients. Packing is canonical, so equality and
/// ordering are those of the coefficient vectors (highest degree first).
struct FieldElement {
  u64 value = 0;

  friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^r) = F_p[X]/(modulus) with a verified primitive element.
///
/// Construction verifies irreducibility of the modulus (Rabin's test) and the
/// exact order of the generator. Fields with at most 2^25 elements carry
/// exp/log tables; larger fields compute logarithms by baby-step/giant-step.
/// Instances are immutable and cheap to copy (shared state).
class FiniteField {
 public:
  static constexpr u64 kLogTableLimit = u64{1} << 25;

  /// Builds GF(p^r). Without a modulus the lexicographically smallest monic
  /// irreducible (comparing coefficients from X^(r-1) down) is used; without
  /// a generator the smallest element of full order is used.
  static FiniteField build(u64 p, unsigned r, std::optional<std::vector<u64>> modulus = std::nullopt,
                           std::optional<FieldElement> generator = std::nullopt);

  u64 characteristic() const noexcept;
  unsigned degree() const noexcept;
  u64 size() const noexcept;
  u64 unit_count() const noexcept { return size() - 1; }
  /// r + 1 coefficients, constant term first; the last one is 1.
  std::span<const u64> modulus() const noexcept;
  FieldElement generator() const noexcept;
  bool has_log_table() const noexcept;

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  /// Image of an integer in the prime field.
  FieldElement from_int(i64 a) const noexcept;
  FieldElement from_coeffs(std::span<const u64> coeffs) const;
  std::vector<u64> coeffs(FieldElement x) const;
  bool contains(FieldElement x) const noexcept { return x.value < size(); }

  FieldElement add(FieldElement a, FieldElement b) const noexcept;
  FieldElement sub(FieldElement a, FieldElement b) const noexcept;
  FieldElement neg(FieldElement a) const noexcept;
  /// Multiplication by an element of the prime field.
  FieldElement scale(FieldElement a, u64 c) const noexcept;
  FieldElement mul(FieldElement a, FieldElement b) const noexcept;
  FieldElement pow(FieldElement a, u64 e) const noexcept;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;

  /// Tr_{K/F_p}(x) as an integer in [0, p).
  u64 trace(FieldElement x) const noexcept;
  /// Exponent of zeta_p in psi_K(x) for the fixed psi with psi(1) = zeta_p.
  u64 additive_char_index(FieldElement x) const noexcept { return trace(x); }
  /// Trace of every element, indexed by packed value. O(q r).
  std::vector<std::uint32_t> trace_table() const;

  /// k with generator^k = x, in [0, q - 1). Throws ZeroArgument for x = 0.
  u64 dlog(FieldElement x) const;
  /// generator^k.
  FieldElement exp(u64 k) const noexcept;
  /// e * dlog(x) mod (q - 1): the exponent of zeta_{q-1} in chi_e(x).
  u64 mult_char_value(u64 e, FieldElement x) const;

  bool same_model(const FiniteField& other) const noexcept;

 private:
  struct Impl;
  explicit FiniteField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  FieldElement poly_mul(FieldElement a, FieldElement b) const noexcept;

  std::shared_ptr<const Impl> impl_;
};

FiniteField build_field(u64 p, unsigned r, std::optional<std::vector<u64>> modulus = std::nullopt);
u64 trace_to_base(const FiniteField& field, FieldElement x);
u64 additive_char_index(const FiniteField& field, FieldElement x);
u64 discrete_log(const FiniteField& field, FieldElement x);
u64 mult_char_value(const FiniteField& field, u64 e, FieldElement x);

/// Rabin irreducibility test for a monic polynomial over F_p (constant term first).
bool is_irreducible(std::span<const u64> monic, u64 p);

/// The first `count` monic irreducibles of degree r in the order build() scans them.
std::vector<std::vector<u64>> monic_irreducibles(u64 p, unsigned r, std::size_t count);

/// Image of x in `to` under the embedding sending X to the smallest root of
/// from.modulus() in `to`. Requires degree(from) | degree(to), same p.
FieldElement embed(const FiniteField& from, const FiniteField& to, FieldElement x);

}  // namespace hypexp
