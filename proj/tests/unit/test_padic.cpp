#include <random>

#include "doctest.h"
#include "hypexp/cyclo.hpp"
#include "hypexp/error.hpp"
#include "hypexp/gauss.hpp"
#include "hypexp/kubert.hpp"

using namespace hypexp;

TEST_CASE("p_adic_ord examples") {
  for (u64 p : {3, 5, 7}) {
    const auto K = build_field(p, 1);
    CHECK(p_adic_ord(GroupRingElement::integer(p, p - 1, static_cast<i64>(p)), K) == Rational(1));
    CHECK(p_adic_ord(GroupRingElement::integer(p, p - 1, -1), K) == Rational(0));
    CHECK(p_adic_ord(GroupRingElement::integer(p, p - 1, static_cast<i64>(p * p * 2)), K) == Rational(2));
  }
  const auto F3 = build_field(3, 1);
  CHECK(p_adic_ord(gauss_sum(F3, 1, false, 2), F3) == Rational(1, 2));
  // 1 - zeta_p has valuation 1/(p-1).
  const auto one_minus = GroupRingElement::integer(5, 4, 1) - GroupRingElement::monomial(5, 4, 1, 0);
  CHECK(p_adic_ord(one_minus, build_field(5, 1)) == Rational(1, 4));
  const auto K9 = build_field(3, 2);
  CHECK(p_adic_ord(GroupRingElement::integer(3, 8, 9), K9) == Rational(1));
  CHECK(p_adic_ord(GroupRingElement::integer(3, 8, 3), K9) == Rational(1, 2));
  try {
    p_adic_ord(GroupRingElement::integer(3, 2, 0), F3);
    FAIL("expected ZeroValue");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroValue);
  }
  try {
    p_adic_ord(GroupRingElement(3, 8) , K9);
    FAIL("expected ZeroValue");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroValue);
  }
}

TEST_CASE("Stickelberger: ord of Gauss sums equals Kubert's V") {
  for (auto [p, r] : {std::pair{3ull, 1u}, std::pair{3ull, 2u}, std::pair{3ull, 3u}, std::pair{3ull, 4u},
                      std::pair{5ull, 1u}, std::pair{5ull, 2u}, std::pair{7ull, 2u}, std::pair{2ull, 4u}}) {
    const auto K = build_field(p, r);
    const u64 q1 = K.size() - 1;
    for (u64 k = 0; k < q1; ++k) {
      const auto g = gauss_sum(K, (q1 - k) % q1, false, q1);
      CHECK_MESSAGE(kubert_V({p, r, k}) == p_adic_ord(g, K), "p=" << p << " r=" << r << " k=" << k);
    }
  }
}

TEST_CASE("ord(g(chi)) + ord(g(chi^-1)) = 1 for nontrivial chi") {
  for (unsigned r : {2u, 3u, 4u}) {
    const auto K = build_field(3, r);
    const u64 n = K.size() - 1;
    for (u64 e = 1; e < n; ++e) {
      const auto a = p_adic_ord(gauss_sum(K, e, false, n), K);
      const auto b = p_adic_ord(gauss_sum(K, n - e, false, n), K);
      CHECK(a + b == Rational(1));
      CHECK(Rational(0) <= a);
      CHECK(a <= Rational(1));
    }
  }
}

TEST_CASE("ord is additive on products and unchanged by psi -> conj psi") {
  const auto K = build_field(3, 3);
  const u64 n = K.size() - 1;
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    const u64 e1 = rng() % (n - 1) + 1, e2 = rng() % (n - 1) + 1;
    const auto g1 = gauss_sum(K, e1, false, n);
    const auto g2 = gauss_sum(K, e2, false, n);
    CHECK(p_adic_ord(gr_mul(g1, g2), K) == p_adic_ord(g1, K) + p_adic_ord(g2, K));
    CHECK(p_adic_ord(gauss_sum(K, e1, true, n), K) == p_adic_ord(g1, K));
  }
}
