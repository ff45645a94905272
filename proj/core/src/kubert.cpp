#include "hypexp/kubert.hpp"

#include <algorithm>
#include <optional>

#include "hypexp/error.hpp"
#include "hypexp/parallel.hpp"
#include "hypexp/sheaf.hpp"

namespace hypexp {

u64 digit_sum(u64 n, u64 p) noexcept {
  u64 s = 0;
  while (n > 0) {
    s += n % p;
    n /= p;
  }
  return s;
}

namespace {

// Digit sums by table lookup on blocks of base-p digits.
class DigitSums {
 public:
  explicit DigitSums(u64 p) : p_(p) {
    block_ = 1;
    while (block_ * p <= (u64{1} << 16)) block_ *= p;
    table_.resize(block_);
    for (u64 i = 0; i < block_; ++i) table_[i] = static_cast<std::uint16_t>(digit_sum(i, p));
  }

  u64 operator()(u64 n) const noexcept {
    u64 s = 0;
    while (n > 0) {
      s += table_[n % block_];
      n /= block_;
    }
    return s;
  }

 private:
  u64 p_;
  u64 block_;
  std::vector<std::uint16_t> table_;
};

u64 level_modulus(u64 p, unsigned r) {
  const u64 q = checked_pow(p, r);
  if (q > (u64{1} << 42)) raise(ErrorKind::InvalidArgument, "level too large for exhaustive checks");
  return q - 1;
}

// k is the least element of its multiplication-by-p orbit mod m, and the
// orbit has exactly r elements.
bool is_orbit_representative(u64 k, u64 p, unsigned r, u64 m) {
  u64 x = k;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, p, m);
    if (x <= k) return false;
  }
  return true;
}

bool is_power_of(u64 x, u64 p) {
  if (x < p) return false;
  while (x % p == 0) x /= p;
  return x == 1;
}

void require_params(u64 p, u64 N, u64 D) {
  if (auto why = params_violation(p, N, D)) raise(ErrorKind::InvalidParams, *why);
}

// sum of V(Nx) + V(-Dx) + V(x), scaled by r(p - 1); the criterion is >= r(p - 1).
u64 scaled_v_sum(const DigitSums& s, u64 N, u64 D, u64 k, u64 m) {
  const u64 nk = mul_mod(N % m, k, m);
  const u64 dk = mul_mod(D % m, k, m);
  return s(nk) + s(dk == 0 ? 0 : m - dk) + s(k);
}

u64 bracket_mod(const DigitSums& s, u64 x, u64 m) { return s(x % m == 0 ? m : x % m); }

}  // namespace

u64 bracket_r(i64 x, u64 p, unsigned r) {
  if (r < 1) raise(ErrorKind::InvalidArgument, "bracket level must be >= 1");
  const u64 m = checked_pow(p, r) - 1;
  const u64 rep = mod_floor(x, m);
  return digit_sum(rep == 0 ? m : rep, p);
}

QZElement QZElement::reduced() const {
  const u64 m = checked_pow(p, r) - 1;
  const u64 kk = k % m;
  for (unsigned rr = 1; rr <= r; ++rr) {
    if (r % rr != 0) continue;
    const u64 mm = checked_pow(p, rr) - 1;
    const u64 factor = m / mm;
    if (kk % factor == 0) return {p, rr, kk / factor};
  }
  return {p, r, kk};
}

bool operator==(const QZElement& a, const QZElement& b) {
  const auto ra = a.reduced();
  const auto rb = b.reduced();
  return ra.p == rb.p && ra.r == rb.r && ra.k == rb.k;
}

Rational kubert_V(const QZElement& x) {
  const u64 m = checked_pow(x.p, x.r) - 1;
  const u64 k = x.k % m;
  if (k == 0) return Rational(0);
  const i64 scale = static_cast<i64>(x.r * (x.p - 1));
  const i64 br = static_cast<i64>(bracket_r(-static_cast<i64>(k), x.p, x.r));
  return Rational(scale - br, scale);
}

bool criterion_holds_at(u64 p, u64 N, u64 D, unsigned r, u64 k) {
  const u64 m = level_modulus(p, r);
  const DigitSums s(p);
  if (k % m == 0) return true;
  return scaled_v_sum(s, N, D, k % m, m) >= r * (p - 1);
}

CriterionReport check_criterion(u64 p, u64 N, u64 D, unsigned r_max, unsigned workers) {
  require_params(p, N, D);
  CriterionReport rep;
  rep.p = p;
  rep.N = N;
  rep.D = D;
  rep.r_max = r_max;
  rep.bracket_form_checked = (p == 3 && N == 23 && D == 4);
  const DigitSums s(p);
  for (unsigned r = 1; r <= r_max; ++r) {
    const u64 m = level_modulus(p, r);
    const u64 need = r * (p - 1);
    const u64 h = m / 2;
    struct Chunk {
      std::vector<Violation> violations;
      std::vector<Violation> disagreements;
      u64 tested = 0;
      u64 bracket = 0;
    };
    std::vector<Chunk> chunks(chunk_count(m, workers));
    parallel_chunks(m, workers, [&](std::size_t begin, std::size_t end, unsigned c) {
      auto& out = chunks[c];
      for (u64 k = std::max<u64>(begin, 1); k < end; ++k) {
        if (!is_orbit_representative(k, p, r, m)) continue;
        ++out.tested;
        const bool v_ok = scaled_v_sum(s, N, D, k, m) >= need;
        if (!v_ok) out.violations.push_back({r, k});
        if (!rep.bracket_form_checked) continue;
        // The bracket form at X corresponds to x = k/m through X = -k - h mod m.
        const u64 X = (2 * m - k - h) % m;
        const u64 two_x_h = (mul_mod(2, X, m) + h) % m;
        if (X == 0 || two_x_h == 0) continue;
        ++out.bracket;
        const u64 lhs = bracket_mod(s, mul_mod(23, X, m) + h, m);
        const bool b_ok = lhs <= bracket_mod(s, X, m) + bracket_mod(s, two_x_h, m);
        if (b_ok != v_ok) out.disagreements.push_back({r, k});
      }
    });
    for (auto& c : chunks) {
      rep.points_tested += c.tested;
      rep.bracket_points += c.bracket;
      rep.violations.insert(rep.violations.end(), c.violations.begin(), c.violations.end());
      rep.bracket_disagreements.insert(rep.bracket_disagreements.end(), c.disagreements.begin(), c.disagreements.end());
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

bool lemma_strong_exempt(unsigned r, u64 x) {
  if (r == 1) return x == 1;
  if (r == 2) return x == 3;
  const u64 top = x / checked_pow(3, r - 3);
  return top == 9 || top == 20;  // 100_3, 202_3
}

namespace {

template <class Test>
std::vector<LemmaViolation> scan_levels(unsigned r_min, unsigned r_max, unsigned workers, Test&& test) {
  std::vector<LemmaViolation> out;
  for (unsigned r = r_min; r <= r_max; ++r) {
    const u64 size = checked_pow(3, r);
    std::vector<std::vector<LemmaViolation>> parts(chunk_count(size, workers));
    parallel_chunks(size, workers, [&](std::size_t begin, std::size_t end, unsigned c) {
      for (u64 x = begin; x < end; ++x) test(r, x, parts[c]);
    });
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

std::vector<LemmaViolation> check_lemma_bound(unsigned r_max, unsigned workers) {
  const DigitSums s(3);
  return scan_levels(1, r_max, workers, [&](unsigned r, u64 x, std::vector<LemmaViolation>& out) {
    const u64 h = (checked_pow(3, r) - 1) / 2;
    const u64 lhs = s(23 * x + h);
    const u64 rhs = s(x) + s(2 * x + h);
    if (lhs > rhs + 2) {
      out.push_back({r, x, false});
    } else if (lhs > rhs && !lemma_strong_exempt(r, x)) {
      out.push_back({r, x, true});
    }
  });
}

std::vector<LemmaViolation> check_corollary(unsigned r_max, unsigned workers) {
  const DigitSums s(3);
  return scan_levels(2, r_max, workers, [&](unsigned r, u64 x, std::vector<LemmaViolation>& out) {
    if (x % 9 == 2 || x % 9 == 6) return;
    const u64 h = (checked_pow(3, r) - 1) / 2;
    if (s(23 * x + h) > s(x) + s(2 * x + 2 + h) + 2) out.push_back({r, x, false});
  });
}

std::vector<unsigned> check_corollary_special_points(unsigned r_max) {
  std::vector<unsigned> bad;
  for (unsigned r = 2; r <= r_max; r += 2) {
    const u64 m = checked_pow(3, r) - 1;
    const u64 h = m / 2;
    for (u64 k : {m / 4, 3 * (m / 4)}) {
      const u64 lhs_k = (2 * m - mul_mod(23, k, m) - h) % m;
      const Rational lhs = Rational(1) - kubert_V({3, r, lhs_k});
      const Rational rhs = kubert_V({3, r, (2 * k + h) % m}) + kubert_V({3, r, k});
      if (lhs != rhs) {
        bad.push_back(r);
        break;
      }
    }
  }
  return bad;
}

DuplicationReport duplication_check(u64 p, unsigned r_max) {
  if (p % 2 == 0) raise(ErrorKind::InvalidArgument, "duplication check needs odd p");
  DuplicationReport rep;
  const DigitSums s(p);
  for (unsigned r = 1; r <= r_max; ++r) {
    const u64 m = level_modulus(p, r);
    const u64 h = m / 2;
    const u64 scale = r * (p - 1);
    for (u64 k = 0; k < m; ++k) {
      ++rep.points;
      // 2 scale (V(x) + V(x + 1/2)) = 2 scale V(2x) + scale
      const u64 lhs = 2 * (s(k) + s((k + h) % m));
      const u64 rhs = 2 * s(mul_mod(2, k, m)) + scale;
      if (lhs != rhs) rep.violations.push_back({r, k});
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

std::string_view to_string(CandidateLabel l) noexcept {
  switch (l) {
    case CandidateLabel::FamilyDqMinus1: return "family Dq-1";
    case CandidateLabel::InducedD3: return "induced D=3";
    case CandidateLabel::InducedD4: return "induced D=4";
    case CandidateLabel::Unexplained: return "UNEXPLAINED";
  }
  return "?";
}

Candidate classify_candidate(u64 p, u64 N, u64 D) {
  Candidate c{N, D, CandidateLabel::Unexplained, 0};
  if ((N + 1) % D == 0 && is_power_of((N + 1) / D, p)) {
    c.label = CandidateLabel::FamilyDqMinus1;
    c.q = (N + 1) / D;
  } else if (D == 3 && is_power_of(N - 1, p) && (N - 1) % 3 == 1) {
    c.label = CandidateLabel::InducedD3;
    c.q = N - 1;
  } else if (D == 4 && N > 2 && is_power_of(N - 2, p)) {
    c.label = CandidateLabel::InducedD4;
    c.q = N - 2;
  } else if (D == 4 && N % 2 == 1 && is_power_of((N - 1) / 2, p)) {
    c.label = CandidateLabel::InducedD4;
    c.q = (N - 1) / 2;
  }
  return c;
}

namespace {

std::optional<Violation> first_violation(const DigitSums& s, u64 p, u64 N, u64 D, unsigned r_max) {
  for (unsigned r = 1; r <= r_max; ++r) {
    const u64 m = level_modulus(p, r);
    const u64 need = r * (p - 1);
    for (u64 k = 1; k < m; ++k) {
      if (!is_orbit_representative(k, p, r, m)) continue;
      if (scaled_v_sum(s, N, D, k, m) < need) return Violation{r, k};
    }
  }
  return std::nullopt;
}

}  // namespace

SearchReport search_candidates(u64 p, u64 N_max, u64 D_max, unsigned r_max, unsigned workers) {
  if (!is_prime(p)) raise(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  SearchReport rep;
  rep.p = p;
  rep.N_max = N_max;
  rep.D_max = D_max;
  rep.r_max = r_max;
  std::vector<std::pair<u64, u64>> pairs;
  for (u64 D = 2; D <= D_max; ++D) {
    for (u64 N = D + 1; N <= N_max; ++N) {
      if (!params_violation(p, N, D)) pairs.emplace_back(N, D);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  const DigitSums s(p);
  std::vector<std::optional<Violation>> result(pairs.size());
  parallel_chunks(pairs.size(), workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t i = begin; i < end; ++i) result[i] = first_violation(s, p, pairs[i].first, pairs[i].second, r_max);
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [N, D] = pairs[i];
    if (result[i]) {
      rep.excluded.push_back({N, D, *result[i]});
    } else {
      rep.candidates.push_back(classify_candidate(p, N, D));
    }
  }
  return rep;
}

}  // namespace hypexp
