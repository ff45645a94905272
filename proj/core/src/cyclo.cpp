#include "hypexp/cyclo.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hypexp/error.hpp"

namespace hypexp {

RouCounts::RouCounts(u64 p, std::vector<i64> counts) : p_(p), counts_(std::move(counts)) {
  if (counts_.size() != p_) raise(ErrorKind::InvalidArgument, "RouCounts needs exactly p counts");
}

RouCounts RouCounts::integer(u64 p, i64 value) {
  RouCounts v(p);
  v.counts_[0] = value;
  return v;
}

RouCounts RouCounts::root(u64 p, u64 i, i64 mult) {
  RouCounts v(p);
  v.counts_[i % p] = mult;
  return v;
}

void RouCounts::check_same(const RouCounts& o) const {
  if (p_ != o.p_) raise(ErrorKind::MismatchedRing, "RouCounts over different p");
}

RouCounts RouCounts::canonical() const {
  RouCounts out(*this);
  if (p_ == 0) return out;
  const i64 top = out.counts_[p_ - 1];
  for (auto& c : out.counts_) c -= top;
  return out;
}

bool RouCounts::is_rational() const {
  const auto c = canonical();
  for (u64 i = 1; i < p_; ++i) {
    if (c.counts_[i] != 0) return false;
  }
  return true;
}

RouCounts RouCounts::galois(u64 a) const {
  if (a % p_ == 0) raise(ErrorKind::InvalidArgument, "Galois exponent must be prime to p");
  RouCounts out(p_);
  for (u64 i = 0; i < p_; ++i) out.counts_[mul_mod(i, a, p_)] += counts_[i];
  return out;
}

i64 RouCounts::weight() const noexcept {
  i64 w = 0;
  for (auto c : counts_) w += c < 0 ? -c : c;
  return w;
}

RouCounts RouCounts::operator-() const {
  RouCounts out(*this);
  for (auto& c : out.counts_) c = -c;
  return out;
}

RouCounts& RouCounts::operator+=(const RouCounts& o) {
  check_same(o);
  for (u64 i = 0; i < p_; ++i) counts_[i] += o.counts_[i];
  return *this;
}

RouCounts& RouCounts::operator-=(const RouCounts& o) {
  check_same(o);
  for (u64 i = 0; i < p_; ++i) counts_[i] -= o.counts_[i];
  return *this;
}

RouCounts operator*(const RouCounts& a, const RouCounts& b) {
  a.check_same(b);
  RouCounts out(a.p_);
  for (u64 i = 0; i < a.p_; ++i) {
    if (a.counts_[i] == 0) continue;
    for (u64 j = 0; j < a.p_; ++j) {
      u64 k = i + j;
      if (k >= a.p_) k -= a.p_;
      out.counts_[k] += a.counts_[i] * b.counts_[j];
    }
  }
  return out;
}

RouCounts operator*(i64 c, RouCounts a) {
  for (auto& x : a.counts_) x *= c;
  return a;
}

bool operator==(const RouCounts& a, const RouCounts& b) {
  if (a.p_ != b.p_) return false;
  return a.canonical().counts_ == b.canonical().counts_;
}

i64 to_exact_integer(const RouCounts& v) {
  const auto c = v.canonical();
  for (u64 i = 1; i < v.p(); ++i) {
    if (c[i] != 0) raise(ErrorKind::NotRational, "sum of roots of unity is not rational");
  }
  return c[0];
}

GroupRingElement::GroupRingElement(u64 p, u64 n) : p_(p), n_(n), coeffs_(p * n, 0) {
  if (n == 0 || p == 0) raise(ErrorKind::InvalidArgument, "group ring needs p, n >= 1");
  if (gcd(p, n) != 1) raise(ErrorKind::InvalidArgument, "group ring needs gcd(p, n) = 1");
}

GroupRingElement GroupRingElement::integer(u64 p, u64 n, i64 value) {
  GroupRingElement v(p, n);
  v.coeffs_[0] = value;
  return v;
}

GroupRingElement GroupRingElement::monomial(u64 p, u64 n, u64 i, u64 j, i64 coeff) {
  GroupRingElement v(p, n);
  v.coeffs_[(i % p) * n + (j % n)] = coeff;
  return v;
}

GroupRingElement GroupRingElement::from_rou(const RouCounts& v, u64 n) {
  GroupRingElement out(v.p(), n);
  for (u64 i = 0; i < v.p(); ++i) out.coeffs_[i * n] = v[i];
  return out;
}

bool GroupRingElement::is_zero_array() const noexcept {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void GroupRingElement::check_same(const GroupRingElement& o) const {
  if (p_ != o.p_ || n_ != o.n_) {
    raise(ErrorKind::MismatchedRing, "group ring elements over (" + std::to_string(p_) + "," + std::to_string(n_) +
                                         ") and (" + std::to_string(o.p_) + "," + std::to_string(o.n_) + ")");
  }
}

GroupRingElement GroupRingElement::lift(u64 n_new) const {
  if (n_new % n_ != 0) raise(ErrorKind::InvalidArgument, "lift target must be a multiple of n");
  const u64 step = n_new / n_;
  GroupRingElement out(p_, n_new);
  for (u64 i = 0; i < p_; ++i) {
    for (u64 j = 0; j < n_; ++j) out.coeffs_[i * n_new + j * step] = coeffs_[i * n_ + j];
  }
  return out;
}

GroupRingElement GroupRingElement::galois(u64 a, u64 b) const {
  if (gcd(a, p_) != 1 || gcd(b, n_) != 1) raise(ErrorKind::InvalidArgument, "Galois exponents must be units");
  GroupRingElement out(p_, n_);
  for (u64 i = 0; i < p_; ++i) {
    for (u64 j = 0; j < n_; ++j) {
      const i64 c = coeffs_[i * n_ + j];
      if (c != 0) out.coeffs_[mul_mod(i, a, p_) * n_ + mul_mod(j, b, n_)] += c;
    }
  }
  return out;
}

std::vector<i64> cyclotomic_polynomial(u64 n) {
  if (n == 0) raise(ErrorKind::InvalidArgument, "cyclotomic polynomial of order 0");
  const auto factors = factorize(n);
  auto mobius = [&](u64 m) -> int {
    int mu = 1;
    for (auto [ell, _] : factors) {
      if (m % ell != 0) continue;
      m /= ell;
      if (m % ell == 0) return 0;
      mu = -mu;
    }
    return mu;
  };
  std::vector<i64> poly{1};
  std::vector<u64> divide_by;
  for (u64 d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 1) {
      std::vector<i64> next(poly.size() + d, 0);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + d] += poly[k];
        next[k] -= poly[k];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (u64 d : divide_by) {
    // Exact division by x^d - 1, from the top.
    std::vector<i64> quot(poly.size() - d, 0);
    for (std::size_t k = poly.size(); k-- > d;) {
      const i64 c = poly[k];
      quot[k - d] = c;
      poly[k - d] += c;
      poly[k] = 0;
    }
    poly = std::move(quot);
  }
  return poly;
}

GroupRingElement GroupRingElement::canonical() const {
  GroupRingElement out(*this);
  const u64 p = p_;
  const u64 n = n_;
  // zeta_p^(p-1) = -(1 + ... + zeta_p^(p-2)).
  for (u64 j = 0; j < n; ++j) {
    const i64 top = out.coeffs_[(p - 1) * n + j];
    if (top == 0) continue;
    for (u64 i = 0; i + 1 < p; ++i) out.coeffs_[i * n + j] -= top;
    out.coeffs_[(p - 1) * n + j] = 0;
  }
  if (n == 1) return out;
  const auto phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::pair<std::size_t, i64>> terms;
  for (std::size_t k = 0; k < deg; ++k) {
    if (phi[k] != 0) terms.emplace_back(k, phi[k]);
  }
  for (u64 i = 0; i + 1 < p; ++i) {
    i64* row = out.coeffs_.data() + i * n;
    for (std::size_t d = n - 1; d >= deg; --d) {
      const i64 c = row[d];
      if (c == 0) continue;
      row[d] = 0;
      for (auto [k, a] : terms) row[d - deg + k] -= c * a;
    }
  }
  return out;
}

bool GroupRingElement::represents_zero() const { return canonical().is_zero_array(); }

bool GroupRingElement::same_value(const GroupRingElement& o) const {
  check_same(o);
  return (*this - o).represents_zero();
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  check_same(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  check_same(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

GroupRingElement operator*(i64 c, GroupRingElement a) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.p() != b.p() || a.n() != b.n()) {
    raise(ErrorKind::MismatchedRing, "gr_mul over (" + std::to_string(a.p()) + "," + std::to_string(a.n()) + ") and (" +
                                         std::to_string(b.p()) + "," + std::to_string(b.n()) + ")");
  }
  const u64 p = a.p();
  const u64 n = a.n();
  struct Term {
    u64 i, j;
    i64 c;
  };
  auto nonzero = [&](const GroupRingElement& x) {
    std::vector<Term> out;
    for (u64 i = 0; i < p; ++i) {
      for (u64 j = 0; j < n; ++j) {
        if (const i64 c = x.coeff(i, j); c != 0) out.push_back({i, j, c});
      }
    }
    return out;
  };
  const auto ta = nonzero(a);
  const auto tb = nonzero(b);
  GroupRingElement out(p, n);
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      u64 i = x.i + y.i;
      if (i >= p) i -= p;
      u64 j = x.j + y.j;
      if (j >= n) j -= n;
      i64 prod = 0;
      if (__builtin_mul_overflow(x.c, y.c, &prod)) raise(ErrorKind::InvalidArgument, "group ring coefficient overflow");
      out.add(i, j, prod);
    }
  }
  return out;
}

GroupRingElement gr_product(u64 p, u64 n, std::span<const GroupRingElement> factors) {
  GroupRingElement acc = GroupRingElement::integer(p, n, 1);
  for (const auto& f : factors) acc = gr_mul(acc, f);
  return acc;
}

namespace {

// Neumaier-compensated sum of c * exp(2 pi i k / m) terms.
class CompensatedSum {
 public:
  void add(double c, u64 k, u64 m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    push(re_, re_c_, c * std::cos(angle));
    push(im_, im_c_, c * std::sin(angle));
    abs_total_ += std::abs(c);
  }

  ComplexValue result() const {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const std::complex<double> v(re_ + re_c_, im_ + im_c_);
    return {v, 16.0 * eps * abs_total_ + 4.0 * eps * std::abs(v)};
  }

 private:
  static void push(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0, abs_total_ = 0;
};

}  // namespace

ComplexValue complex_embed(const RouCounts& v, u64 a) {
  CompensatedSum sum;
  const u64 p = v.p();
  for (u64 i = 0; i < p; ++i) {
    if (v[i] != 0) sum.add(static_cast<double>(v[i]), mul_mod(i, a, p), p);
  }
  return sum.result();
}

ComplexValue complex_embed(const GroupRingElement& v, u64 a, u64 b) {
  CompensatedSum sum;
  const u64 p = v.p();
  const u64 n = v.n();
  const u64 m = p * n;
  for (u64 i = 0; i < p; ++i) {
    for (u64 j = 0; j < n; ++j) {
      const i64 c = v.coeff(i, j);
      if (c == 0) continue;
      const u64 k = (mul_mod(mul_mod(i, a, p), n, m) + mul_mod(mul_mod(j, b, n), p, m)) % m;
      sum.add(static_cast<double>(c), k, m);
    }
  }
  return sum.result();
}

}  // namespace hypexp
