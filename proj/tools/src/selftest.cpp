#include "hypexp_cli/selftest.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "hypexp/fingerprint.hpp"
#include "hypexp/gauss.hpp"
#include "hypexp/kubert.hpp"
#include "hypexp/sheaf.hpp"

namespace hypexp::cli {

namespace {

using Check = std::function<std::string()>;  // empty string: pass

std::string field_axioms(u64 seed) {
  const auto K = build_field(3, 2);
  for (u64 a = 0; a < 9; ++a) {
    for (u64 b = 0; b < 9; ++b) {
      for (u64 c = 0; c < 9; ++c) {
        const FieldElement x{a}, y{b}, z{c};
        if (K.mul(x, K.add(y, z)) != K.add(K.mul(x, y), K.mul(x, z))) return "distributivity fails in GF(9)";
      }
    }
    if (a != 0 && K.mul(FieldElement{a}, K.inv(FieldElement{a})) != K.one()) return "bad inverse in GF(9)";
  }
  std::mt19937_64 rng(seed);
  const auto L = build_field(5, 7);
  for (int i = 0; i < 200; ++i) {
    const FieldElement x{rng() % (L.size() - 1) + 1};
    if (L.exp(L.dlog(x)) != x) return "dlog/exp mismatch in GF(5^7)";
  }
  return {};
}

std::string v_symmetry() {
  for (unsigned r = 1; r <= 6; ++r) {
    const u64 m = checked_pow(3, r) - 1;
    for (u64 k = 1; k < m; ++k) {
      if (kubert_V({3, r, k}) + kubert_V({3, r, m - k}) != Rational(1)) {
        return "V(x) + V(-x) != 1 at r=" + std::to_string(r) + " k=" + std::to_string(k);
      }
    }
  }
  const auto dup = duplication_check(3, 6);
  if (!dup.pass) return "duplication formula fails at " + std::to_string(dup.violations.size()) + " points";
  return {};
}

std::string stickelberger() {
  for (unsigned r : {1u, 2u}) {
    const auto K = build_field(3, r);
    const u64 q1 = K.size() - 1;
    for (u64 k = 0; k < q1; ++k) {
      const auto g = gauss_sum(K, (q1 - k) % q1, false, q1);
      if (kubert_V({3, r, k}) != p_adic_ord(g, K)) {
        return "V != ord Gauss over GF(3^" + std::to_string(r) + ") at k=" + std::to_string(k);
      }
    }
  }
  return {};
}

std::string pullback_and_rationality() {
  const auto K = build_field(3, 3);
  const auto P = SheafParams::make(3, 23, 4);
  for (u64 k = 0; k < K.size() - 1; ++k) {
    const auto u = K.exp(k);
    const auto h = trace_H(K, P, K.pow(u, P.N));
    if (!(trace_F(K, P, u) == h)) return "trace_F(u) != trace_H(u^N) at dlog " + std::to_string(k);
    if (!trace_H(K, P, u).is_rational()) return "trace_H not rational at dlog " + std::to_string(k);
  }
  return {};
}

std::string weil_moduli() {
  for (unsigned r : {2u, 3u}) {
    const auto K = build_field(3, r);
    const double root_q = std::sqrt(static_cast<double>(K.size()));
    for (u64 e = 1; e < K.size() - 1; ++e) {
      const double m = std::abs(complex_embed(gauss_sum(K, e, false)).value);
      if (std::abs(m - root_q) > 1e-9) return "|Gauss| != sqrt(q) over GF(3^" + std::to_string(r) + ")";
    }
  }
  return {};
}

std::string engines_agree() {
  for (auto [p, N, D, r] : {std::tuple{3u, 5u, 2u, 4u}, std::tuple{3u, 23u, 4u, 3u}}) {
    const auto K = build_field(p, r);
    const auto P = SheafParams::make(p, N, D);
    const HTraceEngine H(K, P);
    const ConvolutionEngine C(K, P);
    for (u64 k = 0; k < K.size() - 1; ++k) {
      const auto t = K.exp(k);
      const auto direct = trace_H(K, P, t);
      if (!(H.trace(t) == direct)) return "cached H engine disagrees at dlog " + std::to_string(k);
      if (!(C.trace(t) == direct)) return "convolution disagrees at dlog " + std::to_string(k);
    }
  }
  return {};
}

std::string frobenius_invariance(unsigned workers) {
  const auto P = SheafParams::make(3, 23, 4);
  const auto base = build_field(3, 1);
  const std::vector<Rational> expect = {0, -2, 0, 2, 0};
  if (frobenius_trace_sequence(P, base, base.from_int(-1), 5) != expect) return "trace sequence differs";
  if (frobenius_trace_sequence(P, base, base.from_int(-1), 5, {2, workers}) != expect) {
    return "sequence changes under psi -> psi(2 x)";
  }
  const FieldFactory other = [](u64 p, unsigned r) {
    const auto mods = monic_irreducibles(p, r, 2);
    return build_field(p, r, mods.back());
  };
  if (frobenius_trace_sequence(P, base, base.from_int(-1), 5, {1, workers}, other) != expect) {
    return "sequence changes with the field model";
  }
  return {};
}

std::string criterion(unsigned workers) {
  const auto a = check_criterion(3, 23, 4, 8, 1);
  const auto b = check_criterion(3, 23, 4, 8, std::max(2u, workers));
  if (!a.pass) return "criterion fails for (3, 23, 4)";
  if (a.violations != b.violations || a.points_tested != b.points_tested) return "result depends on worker count";
  if (!a.bracket_disagreements.empty()) return "bracket form disagrees with the V form";
  if (check_criterion(3, 11, 2, 5).pass) return "criterion unexpectedly passes for (3, 11, 2)";
  if (!check_lemma_bound(9, workers).empty()) return "digit-sum lemma fails below r = 10";
  return {};
}

std::string determinant() {
  const auto P = SheafParams::make(3, 23, 4);
  const auto ev = frob_zero_eigenvalues(P, 11u);
  for (const auto& v : ev.complex_values()) {
    if (std::abs(std::abs(v.value) - 1.0) > 1e-9) return "eigenvalue off the unit circle";
  }
  if (std::abs(ev.complex_product().value - 1.0) > 1e-6) return "eigenvalue product is not 1";
  if (determinant_sign(P).sign != DetSign::Plus) return "determinant sign is not +1";
  return {};
}

std::string fingerprint() {
  const auto rep = identify(load_candidate_tables(chartable_dir()), {0, -2, 0, 2, 0, -2, 7});
  if (rep.admitting_groups() != std::vector<std::string>{"Co2"}) return "identification is not {Co2}";
  return {};
}

}  // namespace

std::vector<CheckResult> run_selftest(unsigned workers, unsigned long long seed) {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"field axioms and logarithms", [&] { return field_axioms(seed); }},
      {"V(x) + V(-x) = 1 and duplication, r <= 6", v_symmetry},
      {"Stickelberger over GF(3), GF(9)", stickelberger},
      {"pullback and rationality over GF(27)", pullback_and_rationality},
      {"Weil moduli over GF(9), GF(27)", weil_moduli},
      {"H engines and convolution agree", engines_agree},
      {"trace sequence invariance", [&] { return frobenius_invariance(workers); }},
      {"finiteness criterion (3, 23, 4), r <= 8", [&] { return criterion(workers); }},
      {"determinant at 0 for (3, 23, 4)", determinant},
      {"fingerprint identifies Co2", fingerprint},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.detail = fn();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hypexp::cli
