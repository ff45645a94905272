#pragma once

#include <vector>

#include "hypexp/cyclo.hpp"
#include "hypexp/field.hpp"
#include "hypexp/sheaf.hpp"
#include "hypexp/trace_table.hpp"

namespace hypexp {

/// Order of chi_e on K^x: (q - 1) / gcd(e, q - 1).
u64 character_order(const FiniteField& K, u64 e);

/// sum over x in K^x of psi^(+-1)(x) chi_e(x), in Z[mu_p x mu_n]. n = 0 picks
/// the order of chi_e; otherwise chi_e must take values in mu_n.
GroupRingElement gauss_sum(const FiniteField& K, u64 e, bool conjugate_psi, u64 n = 0);

/// Product over rho with rho^M = 1 (rho != 1 if exclude_trivial) of
/// -Gauss(psi^(+-1), rho). n = 0 picks M. Throws OrderNotSplit unless M | q - 1.
GroupRingElement twisting_factor(const FiniteField& K, u64 M, bool conjugate_psi, bool exclude_trivial, u64 n = 0);

/// sum over t in K^x of table(t) chi_e(t). n = 0 picks q - 1. Tables must be
/// of kind H with root order p; throws IncompleteTable on missing points.
GroupRingElement mellin_value(const TraceTable& table, u64 e, u64 n = 0);

/// (-1)^(N-D) prod_{rho^N=1} Gauss(psi, chi rho) * prod_{sigma^D=1, sigma!=1}
/// Gauss(conj psi, conj(chi sigma)), chi = chi_e. n = 0 picks q - 1.
/// Throws OrderNotSplit unless ND | q - 1.
GroupRingElement mellin_product_formula(const FiniteField& K, const SheafParams& P, u64 e, u64 n = 0);

/// Frobenius eigenvalues at t = 0 over GF(p^d): numerators[i] / scale.
struct EigenvalueList {
  u64 p = 0;
  u64 n = 0;
  u64 scale = 1;
  std::vector<GroupRingElement> numerators;
  /// Exponent of zeta_N for each entry (-1 for the trivial one).
  std::vector<i64> rho;

  std::vector<ComplexValue> complex_values() const;
  /// Product of all eigenvalues as a complex number.
  ComplexValue complex_product() const;
};

/// 1 and rho^D(D) Gauss(conj psi, conj rho^D) Gauss(psi, rho) / p^d for the
/// N - 1 nontrivial rho with rho^N = 1. Throws OrderNotSplit unless N | p^d - 1.
EigenvalueList frob_zero_eigenvalues(const SheafParams& P, unsigned d);

/// Same, over an explicit field of degree d.
EigenvalueList frob_zero_eigenvalues(const SheafParams& P, const FiniteField& K);

enum class DetSign { Plus, Minus, NotCovered };

struct DeterminantResult {
  DetSign sign = DetSign::NotCovered;
  /// Degree of F_p(mu_N); A^d is what `sign` reports.
  unsigned d = 0;
};

std::string_view to_string(DetSign s) noexcept;

/// Case table for A^d, valid when D = N + 1 mod p - 1: Lambda(D), trivial for
/// N odd and the quadratic character of GF(p^d) for N even.
DeterminantResult determinant_sign(const SheafParams& P);

}  // namespace hypexp
