#include "hypexp/sheaf.hpp"

#include "hypexp/error.hpp"
#include "hypexp/parallel.hpp"

namespace hypexp {

std::optional<std::string> params_violation(u64 p, u64 N, u64 D) {
  if (!is_prime(p)) return "p prime violated";
  if (!(N > D && D > 1)) return "N > D > 1 violated";
  if (gcd(N, D) != 1) return "gcd(N,D)=1 violated";
  if (gcd(N % p, p) != 1 || gcd(D % p, p) != 1) return "gcd(ND,p)=1 violated";
  return std::nullopt;
}

SheafParams SheafParams::make(u64 p, u64 N, u64 D) {
  if (auto why = params_violation(p, N, D)) {
    raise(is_prime(p) ? ErrorKind::InvalidParams : ErrorKind::NonPrime, *why);
  }
  return {p, N, D};
}

namespace {

// Per-field lookup tables shared by the sum kernels.
struct Kernel {
  u64 p;
  u64 q;
  u64 n;
  std::vector<std::uint32_t> tr;      // Tr(x) by packed value
  std::vector<std::uint32_t> tr_exp;  // Tr(g^k)

  explicit Kernel(const FiniteField& K) : p(K.characteristic()), q(K.size()), n(K.size() - 1), tr(K.trace_table()) {
    tr_exp.resize(n);
    for (u64 k = 0; k < n; ++k) tr_exp[k] = tr[K.exp(k).value];
  }

  u64 mod_n(i64 a) const { return mod_floor(a, n); }
};

void check_char(const FiniteField& K, const SheafParams& P) {
  if (K.characteristic() != P.p) raise(ErrorKind::InvalidArgument, "field characteristic differs from p");
}

RouCounts scaled(std::vector<i64> counts, u64 p, u64 psi_scale) {
  RouCounts out(p);
  const u64 a = psi_scale % p;
  if (a == 0) raise(ErrorKind::InvalidArgument, "psi scale must be prime to p");
  for (u64 i = 0; i < p; ++i) out.add_root(mul_mod(i, a, p), counts[i]);
  return out;
}

// Sums per-chunk count vectors in chunk order.
template <class Body>
std::vector<i64> chunked_counts(u64 range, u64 p, unsigned workers, Body&& body) {
  const std::size_t chunks = chunk_count(range, workers);
  std::vector<std::vector<i64>> partial(chunks, std::vector<i64>(p, 0));
  parallel_chunks(range, workers, [&](std::size_t begin, std::size_t end, unsigned c) { body(begin, end, partial[c]); });
  std::vector<i64> total(p, 0);
  for (const auto& part : partial) {
    for (u64 i = 0; i < p; ++i) total[i] += part[i];
  }
  return total;
}

// sum over x in K, y = g^k of psi(c x^D y^-N - D x + N b y), where
// c = g^lc and b = g^lb (or b = 0 when lb is empty).
std::vector<i64> double_sum(const Kernel& kr, u64 N, u64 D, u64 lc, std::optional<u64> lb,
                            unsigned workers) {
  const u64 p = kr.p;
  const u64 n = kr.n;
  const u64 minus_d = (p - D % p) % p;
  const u64 n_mod_p = N % p;
  const u64 d_mod_n = D % n;
  const u64 N_mod_n = N % n;
  return chunked_counts(n, p, workers, [&](std::size_t begin, std::size_t end, std::vector<i64>& counts) {
    for (u64 k = begin; k < end; ++k) {
      const u64 by = lb ? (n_mod_p * kr.tr_exp[(*lb + k) % n]) % p : 0;
      ++counts[by];  // x = 0
      const u64 base = (lc + n - mul_mod(N_mod_n, k, n)) % n;
      u64 idx = base;
      for (u64 j = 0; j < n; ++j) {
        ++counts[(kr.tr_exp[idx] + minus_d * kr.tr_exp[j] + by) % p];
        idx += d_mod_n;
        if (idx >= n) idx -= n;
      }
    }
  });
}

}  // namespace

RouCounts trace_H(const FiniteField& K, const SheafParams& P, FieldElement t, const SumOptions& opt) {
  check_char(K, P);
  if (t.value == 0) raise(ErrorKind::ZeroPoint, "trace_H is defined on K^x only");
  const Kernel kr(K);
  auto counts = double_sum(kr, P.N, P.D, K.dlog(t), u64{0}, opt.workers);
  return scaled(std::move(counts), kr.p, opt.psi_scale);
}

RouCounts trace_F(const FiniteField& K, const SheafParams& P, FieldElement u, const SumOptions& opt) {
  check_char(K, P);
  const Kernel kr(K);
  const std::optional<u64> lb = u.value == 0 ? std::nullopt : std::optional<u64>(K.dlog(u));
  auto counts = double_sum(kr, P.N, P.D, u64{0}, lb, opt.workers);
  return scaled(std::move(counts), kr.p, opt.psi_scale);
}

TraceTable trace_F_table(const FiniteField& K, const SheafParams& P, const SumOptions& opt) {
  check_char(K, P);
  const Kernel kr(K);
  TraceTable table(K, TraceKind::F, P.N, P.D, P.p);
  table.set(K.zero(), scaled(double_sum(kr, P.N, P.D, u64{0}, std::nullopt, opt.workers), kr.p, opt.psi_scale));
  for (u64 k = 0; k < kr.n; ++k) {
    table.set(K.exp(k), scaled(double_sum(kr, P.N, P.D, u64{0}, k, opt.workers), kr.p, opt.psi_scale));
  }
  return table;
}

HTraceEngine::HTraceEngine(FiniteField K, SheafParams P, SumOptions opt)
    : K_(std::move(K)), P_(P), opt_(opt) {
  check_char(K_, P_);
  const Kernel kr(K_);
  tr_ = kr.tr;
  tr_exp_ = kr.tr_exp;
  const u64 p = kr.p;
  const u64 n = kr.n;
  const u64 minus_d = (p - P_.D % p) % p;
  const u64 d_mod_n = P_.D % n;
  s_.assign(n, std::vector<i64>(p, 0));
  parallel_chunks(n, opt_.workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (u64 w = begin; w < end; ++w) {
      auto& counts = s_[w];
      ++counts[0];
      u64 idx = w;
      for (u64 j = 0; j < n; ++j) {
        ++counts[(tr_exp_[idx] + minus_d * tr_exp_[j]) % p];
        idx += d_mod_n;
        if (idx >= n) idx -= n;
      }
    }
  });
}

RouCounts HTraceEngine::trace(FieldElement t) const {
  if (t.value == 0) raise(ErrorKind::ZeroPoint, "trace_H is defined on K^x only");
  const u64 p = P_.p;
  const u64 n = K_.size() - 1;
  const u64 lt = K_.dlog(t);
  const u64 n_mod_p = P_.N % p;
  const u64 N_mod_n = P_.N % n;
  std::vector<i64> counts(p, 0);
  for (u64 k = 0; k < n; ++k) {
    const u64 by = (n_mod_p * tr_exp_[k]) % p;
    const auto& s = s_[(lt + n - mul_mod(N_mod_n, k, n)) % n];
    for (u64 i = 0; i < p; ++i) {
      u64 j = i + by;
      if (j >= p) j -= p;
      counts[j] += s[i];
    }
  }
  return scaled(std::move(counts), p, opt_.psi_scale);
}

TraceTable HTraceEngine::table() const {
  const u64 n = K_.size() - 1;
  TraceTable out(K_, TraceKind::H, P_.N, P_.D, P_.p);
  std::vector<std::optional<RouCounts>> by_log(n);
  parallel_chunks(n, opt_.workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (u64 k = begin; k < end; ++k) by_log[k] = trace(K_.exp(k));
  });
  for (u64 k = 0; k < n; ++k) out.set(K_.exp(k), std::move(*by_log[k]));
  return out;
}

NormalizedTrace normalized_trace(const RouCounts& v, u64 q, unsigned twists) {
  const i64 value = to_exact_integer(v);
  const u64 den = checked_pow(q, twists);
  const Rational r(value, static_cast<i64>(den));
  return {r, r.is_integer()};
}

std::vector<Rational> frobenius_trace_sequence(const SheafParams& P, const FiniteField& base, FieldElement t,
                                               unsigned kmax, const SumOptions& opt, const FieldFactory& make_field) {
  if (t.value == 0) raise(ErrorKind::ZeroPoint, "Frobenius traces are taken at t != 0");
  if (base.characteristic() != P.p) raise(ErrorKind::InvalidArgument, "field characteristic differs from p");
  std::vector<Rational> out;
  out.reserve(kmax);
  for (unsigned k = 1; k <= kmax; ++k) {
    const unsigned r = base.degree() * k;
    const FiniteField K = make_field ? make_field(P.p, r) : build_field(P.p, r);
    const FieldElement tk = embed(base, K, t);
    out.push_back(normalized_trace(trace_H(K, P, tk, opt), K.size(), 1).value);
  }
  return out;
}

RouCounts kloosterman_A0_trace(const FiniteField& K, u64 N, FieldElement t, const SumOptions& opt) {
  if (t.value == 0) raise(ErrorKind::ZeroPoint, "A0 is defined on K^x only");
  const Kernel kr(K);
  const u64 lt = K.dlog(t);
  std::vector<i64> counts(kr.p, 0);
  for (u64 k = 0; k < kr.n; ++k) {
    if (mul_mod(N % kr.n, k, kr.n) == lt) ++counts[mul_mod(N % kr.p, kr.tr_exp[k], kr.p)];
  }
  return scaled(std::move(counts), kr.p, opt.psi_scale);
}

RouCounts kloosterman_B0_trace(const FiniteField& K, u64 D, FieldElement t, const SumOptions& opt) {
  if (t.value == 0) raise(ErrorKind::ZeroPoint, "B0 is defined on K^x only");
  const Kernel kr(K);
  const u64 p = kr.p;
  const u64 n = kr.n;
  const u64 lt = K.dlog(t);
  const u64 minus_d = (p - D % p) % p;
  std::vector<i64> counts(p, 0);
  --counts[0];  // x = 0
  for (u64 j = 0; j < n; ++j) {
    const u64 idx = (mul_mod(D % n, j, n) + n - lt) % n;
    --counts[(kr.tr_exp[idx] + minus_d * kr.tr_exp[j]) % p];
  }
  return scaled(std::move(counts), p, opt.psi_scale);
}

TraceTable kloosterman_A0_table(const FiniteField& K, u64 N, const SumOptions& opt) {
  const Kernel kr(K);
  TraceTable table(K, TraceKind::A0, N, 0, kr.p);
  std::vector<std::vector<i64>> acc(kr.n, std::vector<i64>(kr.p, 0));
  for (u64 k = 0; k < kr.n; ++k) ++acc[mul_mod(N % kr.n, k, kr.n)][mul_mod(N % kr.p, kr.tr_exp[k], kr.p)];
  for (u64 l = 0; l < kr.n; ++l) table.set(K.exp(l), scaled(std::move(acc[l]), kr.p, opt.psi_scale));
  return table;
}

TraceTable kloosterman_B0_table(const FiniteField& K, u64 D, const SumOptions& opt) {
  const u64 n = K.size() - 1;
  TraceTable table(K, TraceKind::B0, 0, D, K.characteristic());
  std::vector<std::optional<RouCounts>> by_log(n);
  SumOptions inner = opt;
  inner.workers = 1;
  parallel_chunks(n, opt.workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (u64 l = begin; l < end; ++l) by_log[l] = kloosterman_B0_trace(K, D, K.exp(l), inner);
  });
  for (u64 l = 0; l < n; ++l) table.set(K.exp(l), std::move(*by_log[l]));
  return table;
}

ConvolutionEngine::ConvolutionEngine(const FiniteField& K, const SheafParams& P, const SumOptions& opt)
    : K_(K), P_(P), a0_(kloosterman_A0_table(K, P.N, opt)), b0_(kloosterman_B0_table(K, P.D, opt)) {
  check_char(K, P);
}

RouCounts ConvolutionEngine::trace(FieldElement u) const {
  if (u.value == 0) raise(ErrorKind::ZeroPoint, "convolution is defined on K^x only");
  const u64 n = K_.size() - 1;
  const u64 lu = K_.dlog(u);
  RouCounts acc(P_.p);
  for (u64 k = 0; k < n; ++k) {
    const FieldElement s = K_.exp(k);
    const RouCounts& a = a0_.at(s);
    if (a.weight() == 0) continue;
    // t = u / s, so 1/t = s / u.
    acc += a * b0_.at(K_.exp(k + n - lu));
  }
  return -acc;
}

TraceTable ConvolutionEngine::table() const {
  TraceTable out(K_, TraceKind::Convolution, P_.N, P_.D, P_.p);
  const u64 n = K_.size() - 1;
  for (u64 k = 0; k < n; ++k) out.set(K_.exp(k), trace(K_.exp(k)));
  return out;
}

RouCounts convolution_trace(const FiniteField& K, const SheafParams& P, FieldElement u, const SumOptions& opt) {
  return ConvolutionEngine(K, P, opt).trace(u);
}

}  // namespace hypexp
