#include <cmath>

#include "doctest.h"
#include "hypexp/error.hpp"
#include "hypexp/gauss.hpp"

using namespace hypexp;
using cd = std::complex<double>;

TEST_CASE("gauss_sum examples") {
  const auto F3 = build_field(3, 1);
  const auto g = gauss_sum(F3, 1, false);
  CHECK(g.n() == 2);
  const auto expect = GroupRingElement::monomial(3, 2, 1, 0) - GroupRingElement::monomial(3, 2, 2, 0);
  CHECK(g.same_value(expect));
  CHECK(gauss_sum(F3, 0, false, 2).same_value(GroupRingElement::integer(3, 2, -1)));
  CHECK(character_order(build_field(3, 4), 20) == 4);
  CHECK_THROWS_AS(gauss_sum(build_field(3, 2), 1, false, 3), Error);
}

TEST_CASE("twisting_factor examples") {
  const auto F3 = build_field(3, 1);
  CHECK(twisting_factor(F3, 1, false, false).same_value(GroupRingElement::integer(3, 1, 1)));
  const auto t2 = twisting_factor(F3, 2, false, false);
  const auto expect = GroupRingElement::monomial(3, 2, 2, 0) - GroupRingElement::monomial(3, 2, 1, 0);
  CHECK(t2.same_value(expect));
  try {
    twisting_factor(F3, 4, false, false);
    FAIL("expected OrderNotSplit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderNotSplit);
  }
  // |prod over nontrivial rho of -g(rho)| = q^((M-1)/2).
  const auto K = build_field(3, 4);
  for (u64 M : {2ull, 4ull, 5ull, 8ull, 10ull}) {
    const double m = std::abs(complex_embed(twisting_factor(K, M, false, true)).value);
    CHECK(std::abs(m - std::pow(81.0, (static_cast<double>(M) - 1) / 2)) < 1e-6 * m);
  }
}

TEST_CASE("mellin_value of a constant table") {
  const auto K = build_field(3, 2);
  TraceTable ones(K, TraceKind::H, 5, 2, 3);
  for (u64 k = 0; k < 8; ++k) ones.set(K.exp(k), RouCounts::integer(3, 1));
  CHECK(mellin_value(ones, 0).same_value(GroupRingElement::integer(3, 8, 8)));
  for (u64 e = 1; e < 8; ++e) CHECK(mellin_value(ones, e).represents_zero());
  TraceTable partial(K, TraceKind::H, 5, 2, 3);
  partial.set(K.one(), RouCounts::integer(3, 1));
  CHECK_THROWS_AS(mellin_value(partial, 1), Error);
}

TEST_CASE("Mellin transform of trace_H against the Gauss product formula") {
  const auto K = build_field(3, 4);
  const auto P = SheafParams::make(3, 5, 2);
  const auto table = HTraceEngine(K, P).table();
  const auto AN = twisting_factor(K, 5, false, false, 80);
  const auto AD = twisting_factor(K, 2, true, false, 80);
  const auto AA = gr_mul(AN, AD);
  const Rational ord_AA = p_adic_ord(AA, K);
  CHECK(ord_AA == Rational(5, 2));
  for (u64 e = 0; e < 80; ++e) {
    const auto M = mellin_value(table, e);
    const auto F = mellin_product_formula(K, P, e);
    // Generic characters give |M| = q^(3/2); chi^5 = 1 or chi^2 = 1 gives |M| = q.
    const double m = std::abs(complex_embed(M).value);
    CHECK(std::abs(m - ((e % 16 == 0 || e % 40 == 0) ? 81.0 : 729.0)) < 1e-6);
    const double f = std::abs(complex_embed(F).value);
    CHECK(std::abs(m * std::abs(complex_embed(AA).value) / 81.0 - f) < 1e-6 * f);
    const auto MAA = gr_mul(M, AA);
    CHECK(p_adic_ord(MAA, K) - Rational(1) == p_adic_ord(F, K));
    CHECK(p_adic_ord(MAA, K) - Rational(1) >= ord_AA);
    CHECK_MESSAGE(MAA.same_value(81 * F), "e=" << e);
  }
}

TEST_CASE("determinant sign examples") {
  const auto a = determinant_sign(SheafParams::make(3, 23, 4));
  CHECK(a.sign == DetSign::Plus);
  CHECK(a.d == 11);
  const auto b = determinant_sign(SheafParams::make(3, 26, 5));
  CHECK(b.sign == DetSign::Minus);
  CHECK(b.d == 3);
  CHECK(determinant_sign(SheafParams::make(5, 4, 3)).sign == DetSign::NotCovered);
  CHECK(to_string(DetSign::Plus) == "+1");
  CHECK(to_string(DetSign::Minus) == "-1");
}

TEST_CASE("eigenvalues at 0: unit circle, count, and product against the sign table") {
  for (auto [p, N, D] : {std::tuple{3ull, 23ull, 4ull}, std::tuple{3ull, 26ull, 5ull}, std::tuple{3ull, 5ull, 2ull},
                         std::tuple{5ull, 7ull, 3ull}, std::tuple{3ull, 8ull, 5ull}}) {
    const auto P = SheafParams::make(p, N, D);
    const auto det = determinant_sign(P);
    const unsigned d = static_cast<unsigned>(multiplicative_order(p, N));
    const auto ev = frob_zero_eigenvalues(P, d);
    CHECK(ev.numerators.size() == N);
    for (const auto& v : ev.complex_values()) CHECK(std::abs(std::abs(v.value) - 1.0) < 1e-9);
    const cd prod = ev.complex_product().value;
    if (det.sign == DetSign::Plus) CHECK(std::abs(prod - 1.0) < 1e-6);
    if (det.sign == DetSign::Minus) CHECK(std::abs(prod + 1.0) < 1e-6);
  }
  CHECK_THROWS_AS(frob_zero_eigenvalues(SheafParams::make(3, 23, 4), 2u), Error);
}
