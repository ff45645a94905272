#include "hypexp/induced.hpp"

#include <random>
#include <vector>

#include "hypexp/error.hpp"

namespace hypexp {

std::string_view to_string(InducedCase c) noexcept {
  switch (c) {
    case InducedCase::D3: return "D3";
    case InducedCase::D4a: return "D4a";
    case InducedCase::D4b: return "D4b";
  }
  return "?";
}

InducedCase induced_case_from_string(std::string_view name) {
  for (auto c : {InducedCase::D3, InducedCase::D4a, InducedCase::D4b}) {
    if (to_string(c) == name) return c;
  }
  raise(ErrorKind::BadCaseParameters, "unknown induced case '" + std::string(name) + "'");
}

u64 InducedSpec::N() const noexcept {
  switch (which) {
    case InducedCase::D3: return q0 + 1;
    case InducedCase::D4a: return 2 * q0 + 1;
    case InducedCase::D4b: return q0 + 2;
  }
  return 0;
}

u64 InducedSpec::D() const noexcept { return which == InducedCase::D3 ? 3 : 4; }

namespace {

// Exponents (x-power, (x-1)-power) of the denominator of pi.
std::pair<u64, u64> map_exponents(const InducedSpec& spec) {
  switch (spec.which) {
    case InducedCase::D3: return {spec.q0, 1};
    case InducedCase::D4a: return {2 * spec.q0, 1};
    case InducedCase::D4b: return {spec.q0, 2};
  }
  return {0, 0};
}

}  // namespace

void validate(const FiniteField& K, const InducedSpec& spec) {
  const u64 p = K.characteristic();
  u64 q0 = spec.q0;
  if (q0 < p) raise(ErrorKind::BadCaseParameters, "q0 must be a power of p");
  while (q0 % p == 0) q0 /= p;
  if (q0 != 1) raise(ErrorKind::BadCaseParameters, "q0 must be a power of p");
  if (spec.which == InducedCase::D3) {
    if (spec.q0 % 3 != 1) raise(ErrorKind::BadCaseParameters, "case D3 needs q0 = 1 mod 3");
    if (spec.a < 1 || spec.a > 2 || spec.b < 1 || spec.b > 2) {
      raise(ErrorKind::BadCaseParameters, "case D3 character exponents must be 1 or 2");
    }
    if ((K.size() - 1) % 3 != 0) raise(ErrorKind::BadCaseParameters, "K has no cubic character");
  } else if (p == 2) {
    raise(ErrorKind::BadCaseParameters, "case D4 needs odd characteristic");
  }
}

RouCounts induced_pushforward_trace(const FiniteField& K, const InducedSpec& spec, FieldElement t) {
  if (t.value == 0) raise(ErrorKind::ZeroPoint, "pushforward traces are taken on K^x");
  const auto table = induced_pushforward_table(K, spec);
  return table.at(t);
}

TraceTable induced_pushforward_table(const FiniteField& K, const InducedSpec& spec) {
  validate(K, spec);
  const u64 q1 = K.size() - 1;
  const u64 order = spec.root_order();
  const auto [ea, eb] = map_exponents(spec);
  TraceTable table(K, TraceKind::Pushforward, spec.N(), spec.D(), order);
  std::vector<std::vector<i64>> acc(K.size(), std::vector<i64>(order, 0));
  for (u64 v = 2; v < K.size(); ++v) {
    const FieldElement u{v};
    const FieldElement um1 = K.sub(u, K.one());
    if (um1.value == 0) continue;
    const u64 lu = K.dlog(u);
    const u64 lum1 = K.dlog(um1);
    // t = 1 / (u^ea (u-1)^eb)
    const u64 lt = (q1 - (mul_mod(lu, ea % q1, q1) + mul_mod(lum1, eb % q1, q1)) % q1) % q1;
    const FieldElement t = K.exp(lt);
    u64 phase = 0;
    if (spec.which == InducedCase::D3) {
      // chi3(g^k) = zeta_3^k.
      phase = (spec.a * (lu % order) + spec.b * (lum1 % order)) % order;
    } else {
      phase = (lu + lum1) % 2;
    }
    ++acc[t.value][phase];
  }
  for (u64 k = 0; k < q1; ++k) {
    const FieldElement t = K.exp(k);
    table.set(t, RouCounts(order, std::move(acc[t.value])));
  }
  return table;
}

std::optional<TranslateMatch> match_up_to_translate_twist(const TraceTable& A, const TraceTable& B, double tol) {
  if (!A.field.same_model(B.field)) raise(ErrorKind::InvalidArgument, "tables over different field models");
  const auto& K = A.field;
  const u64 q1 = K.size() - 1;
  std::vector<std::complex<double>> a(q1), b(q1);
  for (u64 k = 0; k < q1; ++k) {
    a[k] = complex_embed(A.at(K.exp(k))).value;
    b[k] = complex_embed(B.at(K.exp(k))).value;
  }
  for (u64 ls = 0; ls < q1; ++ls) {
    std::optional<std::complex<double>> alpha;
    for (u64 k = 0; k < q1 && !alpha; ++k) {
      const auto bk = b[(k + ls) % q1];
      if (std::abs(a[k]) > tol && std::abs(bk) > tol) alpha = a[k] / bk;
    }
    if (!alpha) continue;
    double residual = 0.0;
    bool ok = true;
    for (u64 k = 0; k < q1; ++k) {
      const double diff = std::abs(a[k] - *alpha * b[(k + ls) % q1]);
      residual = std::max(residual, diff);
      if (diff > tol * (1.0 + std::abs(a[k]))) {
        ok = false;
        break;
      }
    }
    if (ok) return TranslateMatch{K.exp(ls), *alpha, residual};
  }
  return std::nullopt;
}

TraceTable random_table(const FiniteField& K, u64 root_order, i64 bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<i64> dist(-bound, bound);
  TraceTable table(K, TraceKind::H, 0, 0, root_order);
  const u64 q1 = K.size() - 1;
  for (u64 k = 0; k < q1; ++k) {
    std::vector<i64> counts(root_order);
    for (auto& c : counts) c = dist(rng);
    table.set(K.exp(k), RouCounts(root_order, std::move(counts)));
  }
  return table;
}

}  // namespace hypexp
