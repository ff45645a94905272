#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "hypexp/field.hpp"
#include "hypexp/numtheory.hpp"
#include "hypexp/rational.hpp"

namespace hypexp {

/// Exact element of Z[zeta_p] stored as signed multiplicities of each p-th
/// root of unity. The representation is redundant (sum of all roots is 0);
/// equality compares canonical forms, where counts[p-1] is forced to 0.
class RouCounts {
 public:
  RouCounts() = default;
  explicit RouCounts(u64 p) : p_(p), counts_(p, 0) {}
  RouCounts(u64 p, std::vector<i64> counts);

  static RouCounts integer(u64 p, i64 value);
  /// mult * zeta_p^i.
  static RouCounts root(u64 p, u64 i, i64 mult = 1);

  u64 p() const noexcept { return p_; }
  std::span<const i64> counts() const noexcept { return counts_; }
  i64 operator[](std::size_t i) const noexcept { return counts_[i]; }
  void add_root(u64 i, i64 mult = 1) noexcept { counts_[i] += mult; }

  RouCounts canonical() const;
  bool is_rational() const;
  /// Image under zeta_p -> zeta_p^a (a prime to p).
  RouCounts galois(u64 a) const;
  /// Sum of |counts|; bounds the number of unit terms in the value.
  i64 weight() const noexcept;

  RouCounts operator-() const;
  RouCounts& operator+=(const RouCounts& o);
  RouCounts& operator-=(const RouCounts& o);
  friend RouCounts operator+(RouCounts a, const RouCounts& b) { return a += b; }
  friend RouCounts operator-(RouCounts a, const RouCounts& b) { return a -= b; }
  /// Product in Z[zeta_p] (cyclic convolution of counts).
  friend RouCounts operator*(const RouCounts& a, const RouCounts& b);
  friend RouCounts operator*(i64 c, RouCounts a);

  /// Equality of represented values.
  friend bool operator==(const RouCounts& a, const RouCounts& b);

 private:
  void check_same(const RouCounts& o) const;

  u64 p_ = 0;
  std::vector<i64> counts_;
};

/// The rational integer represented by v. Throws NotRational otherwise.
i64 to_exact_integer(const RouCounts& v);

/// Element of the group ring Z[mu_p x mu_n] (gcd(p, n) = 1), coefficient of
/// zeta_p^i zeta_n^j stored at i * n + j. Products are plain convolutions; the
/// cyclotomic relations are only applied by canonical().
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(u64 p, u64 n);

  static GroupRingElement integer(u64 p, u64 n, i64 value);
  static GroupRingElement monomial(u64 p, u64 n, u64 i, u64 j, i64 coeff = 1);
  static GroupRingElement from_rou(const RouCounts& v, u64 n);

  u64 p() const noexcept { return p_; }
  u64 n() const noexcept { return n_; }
  i64 coeff(u64 i, u64 j) const noexcept { return coeffs_[i * n_ + j]; }
  void add(u64 i, u64 j, i64 c) noexcept { coeffs_[i * n_ + j] += c; }
  std::span<const i64> coeffs() const noexcept { return coeffs_; }
  bool is_zero_array() const noexcept;

  /// Same value viewed in Z[mu_p x mu_{n_new}], n | n_new.
  GroupRingElement lift(u64 n_new) const;
  /// Image under zeta_p -> zeta_p^a, zeta_n -> zeta_n^b.
  GroupRingElement galois(u64 a, u64 b) const;
  /// Unique representative in the basis zeta_p^i zeta_n^j, i < p-1,
  /// j < phi(n). Cost grows with n; intended for n up to a few thousand.
  GroupRingElement canonical() const;
  bool represents_zero() const;
  /// Equality of represented cyclotomic values.
  bool same_value(const GroupRingElement& o) const;

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(i64 c, GroupRingElement a);

  /// Raw array equality (not value equality).
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  void check_same(const GroupRingElement& o) const;

  u64 p_ = 0;
  u64 n_ = 1;
  std::vector<i64> coeffs_;
};

/// Exact convolution product. Throws MismatchedRing when (p, n) differ.
GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);

/// Product of several elements (1 for an empty list).
GroupRingElement gr_product(u64 p, u64 n, std::span<const GroupRingElement> factors);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<i64> cyclotomic_polynomial(u64 n);

struct ComplexValue {
  std::complex<double> value;
  double error_bound = 0.0;
};

/// Evaluates with zeta_p = exp(2 pi i a / p) and zeta_n = exp(2 pi i b / n).
ComplexValue complex_embed(const RouCounts& v, u64 a = 1);
ComplexValue complex_embed(const GroupRingElement& v, u64 a = 1, u64 b = 1);

/// Valuation normalised by ord(#K) = 1 at the place over p singled out by the
/// Teichmueller lift of K's generator: zeta_n is sent to Teich(g)^((q-1)/n),
/// so chi_1 becomes the Teichmueller character. Requires n | #K - 1 and v != 0.
/// Throws ZeroValue for v = 0 and PrecisionExhausted if the valuation exceeds
/// the 62-bit working precision.
Rational p_adic_ord(const GroupRingElement& v, const FiniteField& K);

}  // namespace hypexp
