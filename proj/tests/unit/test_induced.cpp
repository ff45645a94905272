#include <cmath>

#include "doctest.h"
#include "hypexp/error.hpp"
#include "hypexp/induced.hpp"
#include "hypexp/sheaf.hpp"

using namespace hypexp;

namespace {

bool rejected(const FiniteField& K, const InducedSpec& s) {
  try {
    validate(K, s);
  } catch (const Error& e) {
    return e.kind() == ErrorKind::BadCaseParameters;
  }
  return false;
}

std::optional<TranslateMatch> match_with_H(const FiniteField& K, const InducedSpec& s) {
  const auto H = HTraceEngine(K, SheafParams::make(K.characteristic(), s.N(), s.D())).table();
  return match_up_to_translate_twist(induced_pushforward_table(K, s), H);
}

}  // namespace

TEST_CASE("case parameters") {
  CHECK(InducedSpec{InducedCase::D3, 7}.N() == 8);
  CHECK(InducedSpec{InducedCase::D4a, 3}.N() == 7);
  CHECK(InducedSpec{InducedCase::D4b, 3}.N() == 5);
  CHECK(InducedSpec{InducedCase::D4b, 3}.D() == 4);
  CHECK(induced_case_from_string("D4a") == InducedCase::D4a);
  CHECK(to_string(InducedCase::D3) == "D3");
  CHECK_THROWS_AS(induced_case_from_string("D5"), Error);
  const auto K9 = build_field(3, 2);
  CHECK(rejected(K9, {InducedCase::D4a, 6}));
  CHECK(rejected(build_field(7, 1), {InducedCase::D3, 7, 3, 1}));
  CHECK(rejected(build_field(5, 1), {InducedCase::D3, 5}));  // 5 != 1 mod 3
  CHECK(rejected(build_field(2, 3), {InducedCase::D3, 4}));  // no cubic character on GF(8)
  CHECK(rejected(build_field(2, 2), {InducedCase::D4a, 2}));
  CHECK_NOTHROW(validate(K9, {InducedCase::D4a, 3}));
}

TEST_CASE("pushforward sums over fibres") {
  const auto K = build_field(3, 2);
  const InducedSpec s{InducedCase::D4a, 3};
  CHECK_THROWS_AS(induced_pushforward_trace(K, s, K.zero()), Error);
  // Naive fibre count: the q - 2 points u not in {0, 1} are spread over K^x.
  u64 total = 0;
  for (u64 a = 1; a < K.size(); ++a) {
    const FieldElement t{a};
    u64 fibre = 0;
    for (u64 b = 2; b < K.size(); ++b) {
      const FieldElement u{b};
      if (u == K.one()) continue;
      const auto den = K.mul(K.pow(u, 2 * s.q0), K.sub(u, K.one()));
      if (K.inv(den) == t) ++fibre;
    }
    total += fibre;
    CHECK(induced_pushforward_trace(K, s, t).weight() <= static_cast<i64>(fibre));
  }
  CHECK(total == K.size() - 2);
  const auto table = induced_pushforward_table(K, s);
  for (u64 a = 1; a < K.size(); ++a) CHECK(table.at(FieldElement{a}) == induced_pushforward_trace(K, s, FieldElement{a}));
}

TEST_CASE("translate-twist matcher") {
  const auto K = build_field(3, 3);
  const auto A = random_table(K, 3, 5, 1);
  const auto same = match_up_to_translate_twist(A, A);
  REQUIRE(same.has_value());
  CHECK(same->s == K.one());
  CHECK(std::abs(same->alpha - 1.0) < 1e-12);
  TraceTable shifted(K, A.kind, A.N, A.D, A.root_order);
  const auto s = K.exp(7);
  for (u64 k = 0; k < K.size() - 1; ++k) shifted.set(K.mul(s, K.exp(k)), A.at(K.exp(k)));
  // shifted(s t) = A(t), so A(t) = shifted(s t).
  const auto m = match_up_to_translate_twist(A, shifted);
  REQUIRE(m.has_value());
  CHECK(m->s == s);
  CHECK_FALSE(match_up_to_translate_twist(A, random_table(K, 3, 5, 2)).has_value());
}

TEST_CASE("D4 pushforwards match trace_H up to translation with alpha = 1/q") {
  for (auto [p, r, q0] : {std::tuple{3ull, 2u, 3ull}, std::tuple{3ull, 4u, 3ull}, std::tuple{5ull, 2u, 5ull}}) {
    const auto K = build_field(p, r);
    for (auto c : {InducedCase::D4a, InducedCase::D4b}) {
      const auto m = match_with_H(K, {c, q0});
      REQUIRE_MESSAGE(m.has_value(), "p=" << p << " r=" << r << " " << to_string(c));
      CHECK(std::abs(m->alpha - 1.0 / static_cast<double>(K.size())) < 1e-9);
    }
  }
}

TEST_CASE("D3 pushforward matches for mixed cubic exponents only") {
  for (auto [p, r, q0] : {std::tuple{7ull, 1u, 7ull}, std::tuple{7ull, 2u, 7ull}, std::tuple{2ull, 4u, 4ull},
                          std::tuple{2ull, 6u, 4ull}}) {
    const auto K = build_field(p, r);
    for (unsigned a : {1u, 2u}) {
      for (unsigned b : {1u, 2u}) {
        const auto m = match_with_H(K, {InducedCase::D3, q0, a, b});
        CHECK_MESSAGE(m.has_value() == (a != b), "p=" << p << " r=" << r << " a=" << a << " b=" << b);
        if (m) CHECK(std::abs(m->alpha - 1.0 / static_cast<double>(K.size())) < 1e-9);
      }
    }
  }
}
