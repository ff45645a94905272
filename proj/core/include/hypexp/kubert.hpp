#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypexp/numtheory.hpp"
#include "hypexp/rational.hpp"

namespace hypexp {

/// Sum of the base-p digits of n.
u64 digit_sum(u64 n, u64 p) noexcept;

/// Digit sum of the representative of x mod p^r - 1 in [1, p^r - 1].
u64 bracket_r(i64 x, u64 p, unsigned r);

/// x = k / (p^r - 1) in (Q/Z) prime to p.
struct QZElement {
  u64 p = 0;
  unsigned r = 1;
  u64 k = 0;

  /// Same point at the smallest level r' | r.
  QZElement reduced() const;
  friend bool operator==(const QZElement& a, const QZElement& b);
};

/// Kubert's V: V(0) = 0, otherwise 1 - bracket_r(-k) / (r (p - 1)).
Rational kubert_V(const QZElement& x);

struct Violation {
  unsigned r = 0;
  u64 k = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CriterionReport {
  u64 p = 0;
  u64 N = 0;
  u64 D = 0;
  unsigned r_max = 0;
  bool pass = true;
  std::vector<Violation> violations;
  /// Points tested (orbit representatives of exact level r).
  u64 points_tested = 0;
  /// For (3, 23, 4): points where the bracket form was also evaluated, and
  /// those where its verdict differed from the V form.
  bool bracket_form_checked = false;
  u64 bracket_points = 0;
  std::vector<Violation> bracket_disagreements;
};

/// Tests V(Nx) + V(-Dx) + V(x) >= 1 for every x = k/(p^r - 1), 0 < k < p^r - 1,
/// r <= r_max, one representative per multiplication-by-p orbit.
/// Throws InvalidParams when (p, N, D) are not admissible.
CriterionReport check_criterion(u64 p, u64 N, u64 D, unsigned r_max, unsigned workers = 1);

/// Same test at a single point x = k/(p^r - 1).
bool criterion_holds_at(u64 p, u64 N, u64 D, unsigned r, u64 k);

struct LemmaViolation {
  unsigned r = 0;
  u64 x = 0;
  bool strong = false;  // false: the +2 bound failed
  friend bool operator==(const LemmaViolation&, const LemmaViolation&) = default;
};

/// [23x + h] <= [x] + [2x + h] + 2 for 0 <= x < 3^r, h = (3^r - 1)/2, plain
/// digit sums; the +0 bound outside the stated exceptions.
std::vector<LemmaViolation> check_lemma_bound(unsigned r_max, unsigned workers = 1);

/// True when the strong bound is exempt at (r, x).
bool lemma_strong_exempt(unsigned r, u64 x);

/// [23x + h] <= [x] + [2x + 2 + h] + 2 for 2 <= r <= r_max, x mod 9 not in {2, 6}.
std::vector<LemmaViolation> check_corollary(unsigned r_max, unsigned workers = 1);

/// At x = (3^r - 1)/4 and 3(3^r - 1)/4 (r even): 1 - V(-23x - 1/2) = V(2x + 1/2) + V(x).
/// Returns the levels where the equality fails.
std::vector<unsigned> check_corollary_special_points(unsigned r_max);

struct DuplicationReport {
  bool pass = true;
  u64 points = 0;
  std::vector<Violation> violations;
};

/// V(x) + V(x + 1/2) = V(2x) + 1/2 for every x of level r <= r_max (p odd).
DuplicationReport duplication_check(u64 p, unsigned r_max);

enum class CandidateLabel { FamilyDqMinus1, InducedD3, InducedD4, Unexplained };

std::string_view to_string(CandidateLabel l) noexcept;

struct Candidate {
  u64 N = 0;
  u64 D = 0;
  CandidateLabel label = CandidateLabel::Unexplained;
  /// The power q of p used by the label (0 when unexplained).
  u64 q = 0;
};

struct Excluded {
  u64 N = 0;
  u64 D = 0;
  Violation witness;
};

struct SearchReport {
  u64 p = 0;
  u64 N_max = 0;
  u64 D_max = 0;
  unsigned r_max = 0;
  std::vector<Candidate> candidates;
  std::vector<Excluded> excluded;
};

/// Label for an admissible (N, D) in characteristic p.
Candidate classify_candidate(u64 p, u64 N, u64 D);

SearchReport search_candidates(u64 p, u64 N_max, u64 D_max, unsigned r_max, unsigned workers = 1);

}  // namespace hypexp
