#include "hypexp/gauss.hpp"

#include <cmath>
#include <limits>

#include "hypexp/error.hpp"

namespace hypexp {

namespace {

std::vector<std::uint32_t> traces_of_powers(const FiniteField& K) {
  const auto tr = K.trace_table();
  const u64 n = K.size() - 1;
  std::vector<std::uint32_t> out(n);
  for (u64 k = 0; k < n; ++k) out[k] = tr[K.exp(k).value];
  return out;
}

// Exponent multiplier c with chi_e(g^k) = zeta_n^(c k).
u64 character_step(u64 q1, u64 e, u64 n) {
  if (n == 0 || q1 % n != 0) raise(ErrorKind::OrderNotSplit, "mu_" + std::to_string(n) + " is not in K");
  const u64 block = q1 / n;
  if (e % block != 0) {
    raise(ErrorKind::InvalidArgument, "character exponent " + std::to_string(e) + " does not take values in mu_" +
                                          std::to_string(n));
  }
  return (e / block) % n;
}

GroupRingElement gauss_from_traces(const FiniteField& K, const std::vector<std::uint32_t>& tr_exp, u64 e, bool conj,
                                   u64 n) {
  const u64 p = K.characteristic();
  const u64 q1 = K.size() - 1;
  e %= q1;
  if (n == 0) n = character_order(K, e);
  const u64 c = character_step(q1, e, n);
  GroupRingElement out(p, n);
  u64 j = 0;
  for (u64 k = 0; k < q1; ++k) {
    const u64 i = conj ? (p - tr_exp[k]) % p : tr_exp[k];
    out.add(i, j, 1);
    j += c;
    if (j >= n) j -= n;
  }
  return out;
}

}  // namespace

u64 character_order(const FiniteField& K, u64 e) {
  const u64 q1 = K.size() - 1;
  return q1 / gcd(e % q1, q1);
}

GroupRingElement gauss_sum(const FiniteField& K, u64 e, bool conjugate_psi, u64 n) {
  return gauss_from_traces(K, traces_of_powers(K), e, conjugate_psi, n);
}

GroupRingElement twisting_factor(const FiniteField& K, u64 M, bool conjugate_psi, bool exclude_trivial, u64 n) {
  const u64 q1 = K.size() - 1;
  if (M == 0 || q1 % M != 0) raise(ErrorKind::OrderNotSplit, std::to_string(M) + " does not divide q - 1");
  if (n == 0) n = M;
  if (n % M != 0) raise(ErrorKind::InvalidArgument, "ring order must be a multiple of M");
  const auto tr_exp = traces_of_powers(K);
  GroupRingElement acc = GroupRingElement::integer(K.characteristic(), n, 1);
  for (u64 j = exclude_trivial ? 1 : 0; j < M; ++j) {
    acc = gr_mul(acc, -gauss_from_traces(K, tr_exp, j * (q1 / M), conjugate_psi, n));
  }
  return acc;
}

GroupRingElement mellin_value(const TraceTable& table, u64 e, u64 n) {
  const auto& K = table.field;
  if (table.kind != TraceKind::H) raise(ErrorKind::InvalidArgument, "Mellin transform expects an H table");
  if (table.root_order != K.characteristic()) raise(ErrorKind::MismatchedRing, "table values are not in Z[zeta_p]");
  const u64 q1 = K.size() - 1;
  e %= q1;
  if (n == 0) n = q1;
  const u64 c = character_step(q1, e, n);
  const u64 p = K.characteristic();
  GroupRingElement out(p, n);
  u64 j = 0;
  for (u64 k = 0; k < q1; ++k) {
    const RouCounts& v = table.at(K.exp(k));
    for (u64 i = 0; i < p; ++i) {
      if (v[i] != 0) out.add(i, j, v[i]);
    }
    j += c;
    if (j >= n) j -= n;
  }
  return out;
}

GroupRingElement mellin_product_formula(const FiniteField& K, const SheafParams& P, u64 e, u64 n) {
  const u64 q1 = K.size() - 1;
  if (K.characteristic() != P.p) raise(ErrorKind::InvalidArgument, "field characteristic differs from p");
  if (q1 % (P.N * P.D) != 0) raise(ErrorKind::OrderNotSplit, "K does not contain the ND-th roots of unity");
  if (n == 0) n = q1;
  e %= q1;
  const auto tr_exp = traces_of_powers(K);
  GroupRingElement acc = GroupRingElement::integer(P.p, n, (P.N - P.D) % 2 == 0 ? 1 : -1);
  for (u64 j = 0; j < P.N; ++j) {
    acc = gr_mul(acc, gauss_from_traces(K, tr_exp, (e + j * (q1 / P.N)) % q1, false, n));
  }
  for (u64 j = 1; j < P.D; ++j) {
    const u64 chi_sigma = (e + j * (q1 / P.D)) % q1;
    acc = gr_mul(acc, gauss_from_traces(K, tr_exp, (q1 - chi_sigma) % q1, true, n));
  }
  return acc;
}

std::vector<ComplexValue> EigenvalueList::complex_values() const {
  std::vector<ComplexValue> out;
  out.reserve(numerators.size());
  const double s = static_cast<double>(scale);
  for (const auto& num : numerators) {
    const auto v = complex_embed(num);
    out.push_back({v.value / s, v.error_bound / s});
  }
  return out;
}

ComplexValue EigenvalueList::complex_product() const {
  ComplexValue acc{{1.0, 0.0}, 0.0};
  for (const auto& v : complex_values()) {
    const double err = std::abs(acc.value) * v.error_bound + std::abs(v.value) * acc.error_bound +
                       acc.error_bound * v.error_bound;
    acc.value *= v.value;
    acc.error_bound = err + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(acc.value);
  }
  return acc;
}

EigenvalueList frob_zero_eigenvalues(const SheafParams& P, unsigned d) {
  return frob_zero_eigenvalues(P, build_field(P.p, d));
}

EigenvalueList frob_zero_eigenvalues(const SheafParams& P, const FiniteField& K) {
  const u64 p = P.p;
  const u64 N = P.N;
  const u64 q = K.size();
  const u64 q1 = q - 1;
  if (K.characteristic() != p) raise(ErrorKind::InvalidArgument, "field characteristic differs from p");
  if (q1 % N != 0) raise(ErrorKind::OrderNotSplit, "N does not divide p^d - 1");
  EigenvalueList out;
  out.p = p;
  out.n = N;
  out.scale = q;
  out.numerators.push_back(GroupRingElement::integer(p, N, static_cast<i64>(q)));
  out.rho.push_back(-1);
  const auto tr_exp = traces_of_powers(K);
  const u64 log_d = K.dlog(K.from_int(static_cast<i64>(P.D % p)));
  const u64 block = q1 / N;
  for (u64 j = 1; j < N; ++j) {
    const u64 e = j * block;
    // rho(x) = zeta_N^(j log x), so rho^D(D) = zeta_N^(j D log D).
    const u64 phase = mul_mod(mul_mod(j, P.D % N, N), log_d % N, N);
    const u64 e_conj_d = (q1 - mul_mod(e, P.D, q1)) % q1;
    GroupRingElement num = GroupRingElement::monomial(p, N, 0, phase);
    num = gr_mul(num, gauss_from_traces(K, tr_exp, e_conj_d, true, N));
    num = gr_mul(num, gauss_from_traces(K, tr_exp, e, false, N));
    out.numerators.push_back(std::move(num));
    out.rho.push_back(static_cast<i64>(j));
  }
  return out;
}

std::string_view to_string(DetSign s) noexcept {
  switch (s) {
    case DetSign::Plus: return "+1";
    case DetSign::Minus: return "-1";
    case DetSign::NotCovered: return "not-covered";
  }
  return "?";
}

DeterminantResult determinant_sign(const SheafParams& P) {
  DeterminantResult out;
  out.d = static_cast<unsigned>(multiplicative_order(P.p % P.N, P.N));
  const u64 pm1 = P.p - 1;
  if (pm1 > 1 && mod_floor(static_cast<i64>(P.D) - static_cast<i64>(P.N) - 1, pm1) != 0) {
    out.sign = DetSign::NotCovered;
    return out;
  }
  if (P.N % 2 == 1) {
    out.sign = DetSign::Plus;
    return out;
  }
  // Euler's criterion in GF(p^d) for D in F_p: D^((p^d - 1)/2), exponent taken mod p - 1.
  const u64 two_pm1 = 2 * pm1;
  const u64 half = ((pow_mod(P.p % two_pm1, out.d, two_pm1) + two_pm1 - 1) % two_pm1) / 2;
  out.sign = pow_mod(P.D % P.p, half, P.p) == 1 ? DetSign::Plus : DetSign::Minus;
  return out;
}

}  // namespace hypexp
