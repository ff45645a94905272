#include <algorithm>
#include <limits>
#include <optional>

#include "hypexp/cyclo.hpp"
#include "hypexp/error.hpp"

namespace hypexp {

namespace {

// Z/p^M [X]/(H) with H the integer lift of K's modulus: the unramified
// extension of Z_p of degree f, truncated at precision M.
class Unramified {
 public:
  using Elem = std::vector<u64>;

  Unramified(const FiniteField& K, u64 pm) : pm_(pm), f_(K.degree()) {
    const auto m = K.modulus();
    h_.assign(m.begin(), m.end());
  }

  Elem zero() const { return Elem(f_, 0); }
  Elem one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<u64> prod(2 * f_ - 1, 0);
    for (unsigned i = 0; i < f_; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < f_; ++j) prod[i + j] = add(prod[i + j], mul_mod(a[i], b[j], pm_));
    }
    for (unsigned d = 2 * f_ - 2; d >= f_; --d) {
      const u64 c = prod[d];
      if (c == 0) continue;
      for (unsigned i = 0; i < f_; ++i) prod[d - f_ + i] = sub(prod[d - f_ + i], mul_mod(c, h_[i], pm_));
    }
    prod.resize(f_);
    return prod;
  }

  Elem pow(Elem a, u64 e) const {
    Elem r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e > 0) a = mul(a, a);
    }
    return r;
  }

  void axpy(Elem& acc, i64 c, const Elem& x) const {
    const u64 cm = mod_signed(c);
    for (unsigned i = 0; i < f_; ++i) acc[i] = add(acc[i], mul_mod(cm, x[i], pm_));
  }

  void axpy_u(Elem& acc, u64 c, const Elem& x) const {
    for (unsigned i = 0; i < f_; ++i) acc[i] = add(acc[i], mul_mod(c, x[i], pm_));
  }

  Elem negate(const Elem& a) const {
    Elem out(a);
    for (auto& c : out) c = c == 0 ? 0 : pm_ - c;
    return out;
  }

  u64 add(u64 a, u64 b) const { return static_cast<u64>((static_cast<u128>(a) + b) % pm_); }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : pm_ - (b - a); }
  u64 mod_signed(i64 c) const {
    const i128 r = static_cast<i128>(c) % static_cast<i128>(pm_);
    return static_cast<u64>(r < 0 ? r + pm_ : r);
  }

 private:
  u64 pm_;
  unsigned f_;
  std::vector<u64> h_;
};

}  // namespace

Rational p_adic_ord(const GroupRingElement& v, const FiniteField& K) {
  const u64 p = K.characteristic();
  const unsigned f = K.degree();
  const u64 q = K.size();
  const u64 n = v.n();
  if (v.p() != p) raise(ErrorKind::MismatchedRing, "element and field have different p");
  if ((q - 1) % n != 0) raise(ErrorKind::OrderNotSplit, "mu_n is not contained in K");
  if (v.is_zero_array()) raise(ErrorKind::ZeroValue, "valuation of zero");

  unsigned M = 0;
  u64 pm = 1;
  while (pm <= (std::numeric_limits<u64>::max() >> 2) / p) {
    pm *= p;
    ++M;
  }
  const Unramified W(K, pm);

  Unramified::Elem teich(f, 0);
  {
    const auto g = K.coeffs(K.generator());
    std::copy(g.begin(), g.end(), teich.begin());
  }
  for (unsigned it = 0; it < M; ++it) teich = W.pow(teich, q);
  const auto zeta_n = W.pow(teich, (q - 1) / n);

  // b_i = sum_j c_ij zeta_n^j.
  std::vector<Unramified::Elem> b(p, W.zero());
  auto zj = W.one();
  for (u64 j = 0; j < n; ++j) {
    for (u64 i = 0; i < p; ++i) {
      if (const i64 c = v.coeff(i, j); c != 0) W.axpy(b[i], c, zj);
    }
    zj = W.mul(zj, zeta_n);
  }
  for (u64 i = 0; i + 1 < p; ++i) W.axpy(b[i], -1, b[p - 1]);

  // Rewrite in the basis pi^k, pi = 1 - zeta_p, k < p - 1.
  std::vector<std::vector<u64>> binom(p - 1, std::vector<u64>(p - 1, 0));
  for (u64 i = 0; i + 1 < p; ++i) {
    binom[i][0] = 1;
    for (u64 k = 1; k <= i; ++k) binom[i][k] = W.add(binom[i - 1][k - 1], k <= i - 1 ? binom[i - 1][k] : 0);
  }
  std::optional<u64> best;
  for (u64 k = 0; k + 1 < p; ++k) {
    auto ck = W.zero();
    for (u64 i = k; i + 1 < p; ++i) W.axpy_u(ck, binom[i][k], b[i]);
    unsigned ordp = M;
    for (u64 c : ck) {
      if (c == 0) continue;
      unsigned e = 0;
      while (c % p == 0) {
        c /= p;
        ++e;
      }
      ordp = std::min(ordp, e);
    }
    if (ordp == M) continue;
    const u64 ord_pi = (p - 1) * ordp + k;
    if (!best || ord_pi < *best) best = ord_pi;
  }
  if (!best) {
    if (n <= 4096 && v.represents_zero()) raise(ErrorKind::ZeroValue, "valuation of zero");
    raise(ErrorKind::PrecisionExhausted, "valuation exceeds working precision p^" + std::to_string(M));
  }
  return Rational(static_cast<i64>(*best), static_cast<i64>((p - 1) * f));
}

}  // namespace hypexp
