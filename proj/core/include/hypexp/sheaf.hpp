#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypexp/cyclo.hpp"
#include "hypexp/field.hpp"
#include "hypexp/rational.hpp"
#include "hypexp/trace_table.hpp"

namespace hypexp {

/// (p, N, D) with N > D > 1, gcd(N, D) = 1, gcd(ND, p) = 1.
struct SheafParams {
  u64 p = 0;
  u64 N = 0;
  u64 D = 0;

  /// Throws InvalidParams (NonPrime for p) with the violated condition.
  static SheafParams make(u64 p, u64 N, u64 D);
};

/// The first violated condition, verbatim, or nullopt when (p, N, D) is admissible.
std::optional<std::string> params_violation(u64 p, u64 N, u64 D);

/// psi_K(x) = zeta_p^(psi_scale * Tr(x)); psi_scale = 1 is the fixed psi.
struct SumOptions {
  u64 psi_scale = 1;
  unsigned workers = 1;
};

/// sum over x in K, y in K^x of psi(t x^D / y^N - D x + N y), by direct
/// double loop. Throws ZeroPoint for t = 0.
RouCounts trace_H(const FiniteField& K, const SheafParams& P, FieldElement t, const SumOptions& opt = {});

/// sum over x in K, y in K^x of psi(x^D / y^N - D x + u N y), u = 0 allowed.
RouCounts trace_F(const FiniteField& K, const SheafParams& P, FieldElement u, const SumOptions& opt = {});

/// Second route to trace_H: caches S(w) = sum_x psi(w x^D - D x) for all w,
/// then trace_H(t) = sum_y psi(N y) S(t / y^N).
class HTraceEngine {
 public:
  HTraceEngine(FiniteField K, SheafParams P, SumOptions opt = {});

  RouCounts trace(FieldElement t) const;
  TraceTable table() const;

  const FiniteField& field() const noexcept { return K_; }

 private:
  FiniteField K_;
  SheafParams P_;
  SumOptions opt_;
  std::vector<std::uint32_t> tr_;        // trace by packed element
  std::vector<std::uint32_t> tr_exp_;    // trace of g^k
  std::vector<std::vector<i64>> s_;      // S(g^k)
};

/// Builds a full kind-F table (all of K) from the direct double sum.
TraceTable trace_F_table(const FiniteField& K, const SheafParams& P, const SumOptions& opt = {});

struct NormalizedTrace {
  Rational value;
  bool integral = false;
};

/// to_exact_integer(v) / q^twists. Throws NotRational.
NormalizedTrace normalized_trace(const RouCounts& v, u64 q, unsigned twists);

/// Field factory used for the extension tower; defaults to build_field.
using FieldFactory = std::function<FiniteField(u64 p, unsigned r)>;

/// Entry k (1-based) is trace_H over GF(p^(m k)) at t, divided by p^(m k),
/// where t lies in the degree-m field `base`.
std::vector<Rational> frobenius_trace_sequence(const SheafParams& P, const FiniteField& base, FieldElement t,
                                               unsigned kmax, const SumOptions& opt = {},
                                               const FieldFactory& make_field = {});

/// sum over y with y^N = t of psi(N y). Throws ZeroPoint.
RouCounts kloosterman_A0_trace(const FiniteField& K, u64 N, FieldElement t, const SumOptions& opt = {});
/// -sum over x in K of psi(x^D / t - D x). Throws ZeroPoint.
RouCounts kloosterman_B0_trace(const FiniteField& K, u64 D, FieldElement t, const SumOptions& opt = {});

TraceTable kloosterman_A0_table(const FiniteField& K, u64 N, const SumOptions& opt = {});
TraceTable kloosterman_B0_table(const FiniteField& K, u64 D, const SumOptions& opt = {});

/// -(A0 * inv^* B0)(u) = -sum over s t = u of A0(s) B0(1/t), built from the
/// two Kloosterman tables. Equals trace_H(u).
class ConvolutionEngine {
 public:
  ConvolutionEngine(const FiniteField& K, const SheafParams& P, const SumOptions& opt = {});

  RouCounts trace(FieldElement u) const;
  TraceTable table() const;

 private:
  FiniteField K_;
  SheafParams P_;
  TraceTable a0_;
  TraceTable b0_;
};

RouCounts convolution_trace(const FiniteField& K, const SheafParams& P, FieldElement u, const SumOptions& opt = {});

}  // namespace hypexp
