#include "hypexp/field.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "hypexp/error.hpp"

namespace hypexp {

namespace {

using Poly = std::vector<u64>;  // constant term first, no trailing zeros except for the zero poly

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const u64 lead_inv = pow_mod(f.back(), p - 2, p);
  while (a.size() > df) {
    const u64 c = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - mul_mod(c, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// X^(p^k) mod f for k = 0..kmax.
std::vector<Poly> frobenius_powers_of_x(const Poly& f, u64 p, unsigned kmax) {
  std::vector<Poly> out;
  out.reserve(kmax + 1);
  out.push_back(poly_mod(Poly{0, 1}, f, p));
  for (unsigned k = 1; k <= kmax; ++k) out.push_back(poly_powmod(out.back(), p, f, p));
  return out;
}

}  // namespace

bool is_irreducible(std::span<const u64> monic, u64 p) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  Poly f(monic.begin(), monic.end());
  for (auto& c : f) c %= p;
  const auto r = static_cast<unsigned>(f.size() - 1);
  const auto xp = frobenius_powers_of_x(f, p, r);
  const Poly x = poly_mod(Poly{0, 1}, f, p);
  if (xp[r] != x) return false;
  for (auto [ell, _] : factorize(r)) {
    Poly h = xp[r / ell];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    const Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::vector<u64>> monic_irreducibles(u64 p, unsigned r, std::size_t count) {
  if (!is_prime(p)) raise(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  std::vector<std::vector<u64>> out;
  const u64 total = checked_pow(p, r);
  for (u64 m = 0; m < total && out.size() < count; ++m) {
    Poly f(r + 1, 0);
    u64 v = m;
    for (unsigned i = 0; i < r; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[r] = 1;
    if (is_irreducible(f, p)) out.push_back(std::move(f));
  }
  return out;
}

struct FiniteField::Impl {
  u64 p = 0;
  unsigned r = 0;
  u64 q = 0;
  std::vector<u64> modulus;
  std::vector<u64> place;  // p^i
  FieldElement gen;
  std::vector<u64> basis_trace;
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
  u64 bsgs_m = 0;
  std::unordered_map<u64, u64> baby;
  FieldElement giant;  // gen^(-bsgs_m)
};

u64 FiniteField::characteristic() const noexcept { return impl_->p; }
unsigned FiniteField::degree() const noexcept { return impl_->r; }
u64 FiniteField::size() const noexcept { return impl_->q; }
std::span<const u64> FiniteField::modulus() const noexcept { return impl_->modulus; }
FieldElement FiniteField::generator() const noexcept { return impl_->gen; }
bool FiniteField::has_log_table() const noexcept { return !impl_->log_table.empty(); }

FieldElement FiniteField::from_int(i64 a) const noexcept { return {mod_floor(a, impl_->p)}; }

FieldElement FiniteField::from_coeffs(std::span<const u64> coeffs) const {
  if (coeffs.size() > impl_->r) raise(ErrorKind::InvalidArgument, "too many coefficients for field degree");
  u64 v = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) v += (coeffs[i] % impl_->p) * impl_->place[i];
  return {v};
}

std::vector<u64> FiniteField::coeffs(FieldElement x) const {
  std::vector<u64> out(impl_->r);
  u64 v = x.value;
  for (auto& c : out) {
    c = v % impl_->p;
    v /= impl_->p;
  }
  return out;
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const noexcept {
  const u64 p = impl_->p;
  if (impl_->r == 1) return {(a.value + b.value) % p};
  u64 out = 0;
  for (unsigned i = 0; i < impl_->r; ++i) {
    out += ((a.value % p + b.value % p) % p) * impl_->place[i];
    a.value /= p;
    b.value /= p;
  }
  return {out};
}

FieldElement FiniteField::neg(FieldElement a) const noexcept {
  const u64 p = impl_->p;
  if (impl_->r == 1) return {(p - a.value) % p};
  u64 out = 0;
  for (unsigned i = 0; i < impl_->r; ++i) {
    out += ((p - a.value % p) % p) * impl_->place[i];
    a.value /= p;
  }
  return {out};
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

FieldElement FiniteField::scale(FieldElement a, u64 c) const noexcept {
  const u64 p = impl_->p;
  c %= p;
  u64 out = 0;
  for (unsigned i = 0; i < impl_->r; ++i) {
    out += mul_mod(a.value % p, c, p) * impl_->place[i];
    a.value /= p;
  }
  return {out};
}

FieldElement FiniteField::poly_mul(FieldElement a, FieldElement b) const noexcept {
  const u64 p = impl_->p;
  const unsigned r = impl_->r;
  if (r == 1) return {mul_mod(a.value, b.value, p)};
  u64 da[64];
  u64 db[64];
  u64 prod[128] = {};
  for (unsigned i = 0; i < r; ++i) {
    da[i] = a.value % p;
    a.value /= p;
    db[i] = b.value % p;
    b.value /= p;
  }
  for (unsigned i = 0; i < r; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + mul_mod(da[i], db[j], p)) % p;
  }
  const auto& f = impl_->modulus;
  for (unsigned d = 2 * r - 2; d >= r; --d) {
    const u64 c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < r; ++i) prod[d - r + i] = (prod[d - r + i] + p - mul_mod(c, f[i], p)) % p;
  }
  u64 out = 0;
  for (unsigned i = 0; i < r; ++i) out += prod[i] * impl_->place[i];
  return {out};
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const noexcept {
  if (a.value == 0 || b.value == 0) return {0};
  if (!impl_->log_table.empty()) {
    const u64 n = impl_->q - 1;
    u64 k = u64{impl_->log_table[a.value]} + impl_->log_table[b.value];
    if (k >= n) k -= n;
    return {impl_->exp_table[k]};
  }
  return poly_mul(a, b);
}

FieldElement FiniteField::pow(FieldElement a, u64 e) const noexcept {
  if (e == 0) return {1};
  if (a.value == 0) return {0};
  if (!impl_->log_table.empty()) {
    const u64 n = impl_->q - 1;
    return {impl_->exp_table[mul_mod(impl_->log_table[a.value], e % n, n)]};
  }
  FieldElement result{1};
  while (e > 0) {
    if (e & 1) result = poly_mul(result, a);
    e >>= 1;
    if (e > 0) a = poly_mul(a, a);
  }
  return result;
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.value == 0) raise(ErrorKind::ZeroArgument, "inverse of zero");
  return pow(a, impl_->q - 2);
}

FieldElement FiniteField::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

u64 FiniteField::trace(FieldElement x) const noexcept {
  const u64 p = impl_->p;
  u64 t = 0;
  for (unsigned i = 0; i < impl_->r; ++i) {
    t = (t + mul_mod(x.value % p, impl_->basis_trace[i], p)) % p;
    x.value /= p;
  }
  return t;
}

std::vector<std::uint32_t> FiniteField::trace_table() const {
  const u64 p = impl_->p;
  std::vector<std::uint32_t> tr(impl_->q, 0);
  for (unsigned k = 0; k < impl_->r; ++k) {
    const u64 block = impl_->place[k];
    for (u64 c = 1; c < p; ++c) {
      const u64 add = mul_mod(c, impl_->basis_trace[k], p);
      for (u64 w = 0; w < block; ++w) tr[c * block + w] = static_cast<std::uint32_t>((tr[w] + add) % p);
    }
  }
  return tr;
}

FieldElement FiniteField::exp(u64 k) const noexcept {
  const u64 n = impl_->q - 1;
  if (!impl_->exp_table.empty()) return {impl_->exp_table[k % n]};
  return pow(impl_->gen, k % n);
}

u64 FiniteField::dlog(FieldElement x) const {
  if (x.value == 0) raise(ErrorKind::ZeroArgument, "discrete log of zero");
  if (x.value >= impl_->q) raise(ErrorKind::InvalidArgument, "element not in field");
  if (!impl_->log_table.empty()) return impl_->log_table[x.value];
  const u64 n = impl_->q - 1;
  FieldElement y = x;
  for (u64 i = 0; i <= impl_->bsgs_m; ++i) {
    auto it = impl_->baby.find(y.value);
    if (it != impl_->baby.end()) return (i * impl_->bsgs_m + it->second) % n;
    y = poly_mul(y, impl_->giant);
  }
  raise(ErrorKind::InvariantViolation, "baby-step/giant-step failed; generator not primitive");
}

u64 FiniteField::mult_char_value(u64 e, FieldElement x) const {
  const u64 n = impl_->q - 1;
  return mul_mod(e % n, dlog(x), n);
}

bool FiniteField::same_model(const FiniteField& other) const noexcept {
  return impl_->p == other.impl_->p && impl_->r == other.impl_->r && impl_->modulus == other.impl_->modulus &&
         impl_->gen == other.impl_->gen;
}

FiniteField FiniteField::build(u64 p, unsigned r, std::optional<std::vector<u64>> modulus,
                               std::optional<FieldElement> generator) {
  if (!is_prime(p)) raise(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (r < 1 || r > 60) raise(ErrorKind::InvalidArgument, "field degree must be in [1, 60]");
  if (p >= (u64{1} << 31)) raise(ErrorKind::InvalidArgument, "characteristic must be below 2^31");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->r = r;
  impl->q = checked_pow(p, r);
  if (impl->q >= (u64{1} << 62)) raise(ErrorKind::InvalidArgument, "field too large");
  impl->place.resize(r + 1);
  impl->place[0] = 1;
  for (unsigned i = 1; i <= r; ++i) impl->place[i] = impl->place[i - 1] * p;

  if (modulus) {
    auto f = *modulus;
    if (f.size() != r + 1 || f.back() % p != 1) {
      raise(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(r));
    }
    for (auto& c : f) c %= p;
    if (!is_irreducible(f, p)) raise(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
    impl->modulus = std::move(f);
  } else {
    impl->modulus = monic_irreducibles(p, r, 1).front();
  }

  // Tr(X^i) = sum_j X^(i p^j); the result is a constant polynomial.
  const Poly f(impl->modulus.begin(), impl->modulus.end());
  impl->basis_trace.resize(r);
  for (unsigned i = 0; i < r; ++i) {
    Poly xi(i + 1, 0);
    xi[i] = 1;
    Poly term = poly_mod(xi, f, p);
    Poly acc;
    for (unsigned j = 0; j < r; ++j) {
      acc.resize(std::max(acc.size(), term.size()), 0);
      for (std::size_t k = 0; k < term.size(); ++k) acc[k] = (acc[k] + term[k]) % p;
      term = poly_powmod(term, p, f, p);
    }
    trim(acc);
    if (acc.size() > 1) raise(ErrorKind::InvariantViolation, "trace of basis element is not in the prime field");
    impl->basis_trace[i] = acc.empty() ? 0 : acc[0];
  }

  FiniteField field(impl);
  const u64 n = impl->q - 1;
  const auto n_factors = factorize(n);
  auto has_full_order = [&](FieldElement g) {
    if (g.value == 0 || g.value >= impl->q) return false;
    if (field.pow(g, n).value != 1) return false;
    for (auto [ell, _] : n_factors) {
      if (field.pow(g, n / ell).value == 1) return false;
    }
    return true;
  };
  if (generator) {
    if (!has_full_order(*generator)) raise(ErrorKind::InvalidArgument, "generator does not have full order");
    impl->gen = *generator;
  } else {
    u64 v = 1;
    while (!has_full_order({v})) ++v;
    impl->gen = {v};
  }

  if (impl->q <= kLogTableLimit) {
    impl->exp_table.resize(n);
    impl->log_table.assign(impl->q, 0);
    FieldElement x{1};
    for (u64 k = 0; k < n; ++k) {
      impl->exp_table[k] = static_cast<std::uint32_t>(x.value);
      impl->log_table[x.value] = static_cast<std::uint32_t>(k);
      x = field.poly_mul(x, impl->gen);
    }
    if (x.value != 1) raise(ErrorKind::InvariantViolation, "generator order check inconsistent");
  } else {
    impl->bsgs_m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(n))));
    impl->baby.reserve(impl->bsgs_m);
    FieldElement x{1};
    for (u64 j = 0; j < impl->bsgs_m; ++j) {
      impl->baby.emplace(x.value, j);
      x = field.poly_mul(x, impl->gen);
    }
    impl->giant = field.inv(x);
  }
  return field;
}

FiniteField build_field(u64 p, unsigned r, std::optional<std::vector<u64>> modulus) {
  return FiniteField::build(p, r, std::move(modulus));
}

u64 trace_to_base(const FiniteField& field, FieldElement x) { return field.trace(x); }
u64 additive_char_index(const FiniteField& field, FieldElement x) { return field.additive_char_index(x); }
u64 discrete_log(const FiniteField& field, FieldElement x) { return field.dlog(x); }
u64 mult_char_value(const FiniteField& field, u64 e, FieldElement x) { return field.mult_char_value(e, x); }

FieldElement embed(const FiniteField& from, const FiniteField& to, FieldElement x) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0) {
    raise(ErrorKind::InvalidArgument, "no embedding between these fields");
  }
  if (from.degree() == 1) return {x.value};
  const auto f = from.modulus();
  const u64 q_small = from.size();
  const u64 step = (to.size() - 1) / (q_small - 1);
  std::optional<FieldElement> root;
  for (u64 j = 0; j + 1 < q_small; ++j) {
    const FieldElement y = to.exp(j * step);
    FieldElement acc{0};
    for (std::size_t i = f.size(); i-- > 0;) acc = to.add(to.mul(acc, y), {f[i]});
    if (acc.value == 0 && (!root || y < *root)) root = y;
  }
  if (!root) raise(ErrorKind::InvariantViolation, "modulus has no root in the larger field");
  const auto c = from.coeffs(x);
  FieldElement out{0};
  for (std::size_t i = c.size(); i-- > 0;) out = to.add(to.mul(out, *root), {c[i]});
  return out;
}

}  // namespace hypexp
