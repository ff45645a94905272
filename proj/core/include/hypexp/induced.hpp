#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

#include "hypexp/field.hpp"
#include "hypexp/trace_table.hpp"

namespace hypexp {

/// Explicit induced constructions for D = 3 and D = 4:
///   D3:  N = q0 + 1,  pi(x) = 1/(x^q0 (x-1)),   value chi3^a(x) chi3^b(x-1)
///   D4a: N = 2 q0 + 1, pi(x) = 1/(x^(2 q0) (x-1)), value chi2(x(x-1))
///   D4b: N = q0 + 2,  pi(x) = 1/(x^q0 (x-1)^2), value chi2(x(x-1))
enum class InducedCase { D3, D4a, D4b };

std::string_view to_string(InducedCase c) noexcept;
InducedCase induced_case_from_string(std::string_view name);

struct InducedSpec {
  InducedCase which = InducedCase::D4a;
  u64 q0 = 0;  // power of p
  // Cubic character exponents for D3 (each in {1, 2}); ignored for D4.
  unsigned a = 1;
  unsigned b = 2;

  u64 N() const noexcept;
  u64 D() const noexcept;
  u64 root_order() const noexcept { return which == InducedCase::D3 ? 3 : 2; }
};

/// Throws BadCaseParameters unless q0 is a power of p and (N, D) fit the case,
/// and unless K carries the needed character (3 | q - 1 for D3).
void validate(const FiniteField& K, const InducedSpec& spec);

/// sum over u not in {0, 1} with pi(u) = t of the case's character value at u.
/// Throws ZeroPoint for t = 0.
RouCounts induced_pushforward_trace(const FiniteField& K, const InducedSpec& spec, FieldElement t);

/// Full table on K^x in one pass over u.
TraceTable induced_pushforward_table(const FiniteField& K, const InducedSpec& spec);

struct TranslateMatch {
  FieldElement s;
  std::complex<double> alpha;
  double residual = 0.0;
};

/// First s in K^x (by discrete log) with A(t) = alpha B(s t) for all t in K^x,
/// alpha fitted at the first t where both sides are nonzero and checked to
/// |A(t) - alpha B(s t)| <= tol (1 + |A(t)|) in the complex embedding.
std::optional<TranslateMatch> match_up_to_translate_twist(const TraceTable& A, const TraceTable& B,
                                                          double tol = 1e-6);

/// Table on K^x with uniformly random counts in [-bound, bound], for negative controls.
TraceTable random_table(const FiniteField& K, u64 root_order, i64 bound, std::uint64_t seed);

}  // namespace hypexp
