#include <random>
#include <set>

#include "doctest.h"
#include "hypexp/cyclo.hpp"
#include "hypexp/error.hpp"
#include "hypexp/field.hpp"

using namespace hypexp;

namespace {

// x + x^p + ... + x^(p^(r-1)) through repeated powering; the result lies in F_p.
u64 frobenius_trace(const FiniteField& K, FieldElement x) {
  FieldElement acc = K.zero();
  FieldElement y = x;
  for (unsigned i = 0; i < K.degree(); ++i) {
    acc = K.add(acc, y);
    y = K.pow(y, K.characteristic());
  }
  REQUIRE(acc.value < K.characteristic());
  return acc.value;
}

// Arithmetic in F_3[X]/(X^2 + 1) on coefficient pairs, written out by hand.
struct Gf9 {
  u64 a, b;  // a + b X
  Gf9 operator*(const Gf9& o) const { return {(a * o.a + 2 * b * o.b) % 3, (a * o.b + b * o.a) % 3}; }
  u64 packed() const { return a + 3 * b; }
};

}  // namespace

TEST_CASE("build_field examples") {
  const auto F3 = build_field(3, 1);
  CHECK(F3.size() == 3);
  CHECK(F3.generator().value == 2);
  CHECK(build_field(3, 11).size() == 177147);
  CHECK_THROWS_WITH_AS(build_field(4, 2), doctest::Contains("prime"), Error);
  try {
    build_field(3, 2, std::vector<u64>{2, 0, 1});  // X^2 - 1
    FAIL("reducible modulus accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleModulus);
  }
}

TEST_CASE("GF(9) model: smallest irreducible and smallest generator") {
  // Oracle: scan monic quadratics X^2 + c1 X + c0 by (c1, c0) and keep the first without a root.
  std::vector<u64> expect_mod;
  for (u64 c1 = 0; c1 < 3 && expect_mod.empty(); ++c1) {
    for (u64 c0 = 0; c0 < 3 && expect_mod.empty(); ++c0) {
      bool root = false;
      for (u64 x = 0; x < 3; ++x) root = root || (x * x + c1 * x + c0) % 3 == 0;
      if (!root) expect_mod = {c0, c1, 1};
    }
  }
  const auto K = build_field(3, 2);
  CHECK(std::vector<u64>(K.modulus().begin(), K.modulus().end()) == expect_mod);
  CHECK(expect_mod == std::vector<u64>{1, 0, 1});
  // Smallest packed value of multiplicative order 8 with the hand-written arithmetic.
  u64 gen = 0;
  for (u64 v = 1; v < 9 && gen == 0; ++v) {
    const Gf9 x{v % 3, v / 3};
    Gf9 y = x;
    unsigned order = 1;
    while (y.packed() != 1) {
      y = y * x;
      ++order;
    }
    if (order == 8) gen = v;
  }
  CHECK(gen == 4);
  CHECK(K.generator().value == gen);
  for (u64 a = 0; a < 9; ++a) {
    for (u64 b = 0; b < 9; ++b) {
      const Gf9 x{a % 3, a / 3}, y{b % 3, b / 3};
      CHECK(K.mul(FieldElement{a}, FieldElement{b}).value == (x * y).packed());
    }
  }
}

TEST_CASE("trace_to_base examples and properties") {
  const auto F3 = build_field(3, 1);
  CHECK(trace_to_base(F3, FieldElement{2}) == 2);
  const auto K9 = build_field(3, 2);
  CHECK(trace_to_base(K9, K9.one()) == 2);
  CHECK(trace_to_base(K9, K9.generator()) == frobenius_trace(K9, K9.generator()));
  for (auto [p, r] : {std::pair{3ull, 2u}, std::pair{3ull, 3u}, std::pair{5ull, 2u}, std::pair{2ull, 5u}, std::pair{7ull, 3u}}) {
    const auto K = build_field(p, r);
    std::set<u64> image;
    for (u64 a = 0; a < K.size(); ++a) {
      const FieldElement x{a};
      CHECK(K.trace(x) == frobenius_trace(K, x));
      image.insert(K.trace(x));
      const FieldElement y{(a * 7 + 3) % K.size()};
      CHECK(K.trace(K.add(x, y)) == (K.trace(x) + K.trace(y)) % p);
    }
    CHECK(image.size() == p);
    const auto tt = K.trace_table();
    for (u64 a = 0; a < K.size(); ++a) CHECK(tt[a] == K.trace(FieldElement{a}));
  }
}

TEST_CASE("additive character orthogonality") {
  CHECK(additive_char_index(build_field(3, 1), FieldElement{0}) == 0);
  CHECK(additive_char_index(build_field(3, 1), FieldElement{1}) == 1);
  const auto K9 = build_field(3, 2);
  for (u64 a = 0; a < 9; ++a) {
    if (K9.trace(FieldElement{a}) == 2) CHECK(additive_char_index(K9, FieldElement{a}) == 2);
  }
  for (auto [p, r] : {std::pair{3ull, 3u}, std::pair{5ull, 2u}, std::pair{2ull, 4u}}) {
    const auto K = build_field(p, r);
    RouCounts sum(p);
    for (u64 a = 0; a < K.size(); ++a) sum.add_root(K.additive_char_index(FieldElement{a}));
    CHECK(sum == RouCounts::integer(p, 0));
  }
}

TEST_CASE("discrete_log examples and homomorphism") {
  const auto F3 = build_field(3, 1);
  CHECK(discrete_log(F3, FieldElement{1}) == 0);
  CHECK(discrete_log(F3, F3.generator()) == 1);
  CHECK(discrete_log(F3, FieldElement{2}) == 1);
  CHECK_THROWS_AS(discrete_log(F3, FieldElement{0}), Error);
  const auto K = build_field(3, 5);
  const u64 n = K.size() - 1;
  std::vector<bool> seen(n, false);
  for (u64 a = 1; a < K.size(); ++a) {
    const u64 k = K.dlog(FieldElement{a});
    REQUIRE(k < n);
    CHECK_FALSE(seen[k]);
    seen[k] = true;
    CHECK(K.exp(k).value == a);
    const FieldElement b{(a * 31) % (K.size() - 1) + 1};
    CHECK(K.dlog(K.mul(FieldElement{a}, b)) == (k + K.dlog(b)) % n);
  }
}

TEST_CASE("baby-step giant-step logarithms above the table limit") {
  const auto K = build_field(3, 17);
  CHECK_FALSE(K.has_log_table());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const u64 k = rng() % (K.size() - 1);
    CHECK(K.dlog(K.exp(k)) == k);
  }
  CHECK(K.dlog(K.from_int(-1)) == (K.size() - 1) / 2);
}

TEST_CASE("mult_char_value examples and orthogonality") {
  const auto K9 = build_field(3, 2);
  const FieldElement g = K9.generator();
  CHECK(mult_char_value(K9, 0, g) == 0);
  CHECK(mult_char_value(K9, 4, g) == 4);
  CHECK(mult_char_value(K9, 4, K9.mul(g, g)) == 0);
  CHECK_THROWS_AS(mult_char_value(K9, 1, K9.zero()), Error);
  for (unsigned r : {1u, 2u, 3u, 4u, 5u}) {
    const auto K = build_field(3, r);
    const u64 n = K.size() - 1;
    for (u64 e = 1; e < n; ++e) {
      u64 ambient = 5;  // any prime coprime to n
      while (n % ambient == 0) ambient += 2;
      GroupRingElement sum(ambient, n);
      for (u64 a = 1; a < K.size(); ++a) sum.add(0, K.mult_char_value(e, FieldElement{a}), 1);
      CHECK(sum.represents_zero());
    }
  }
}

TEST_CASE("irreducibility test against root and factor search") {
  // Degree <= 3 polynomials are irreducible iff they have no root.
  for (u64 p : {2, 3, 5}) {
    for (unsigned deg : {2u, 3u}) {
      std::vector<u64> f(deg + 1, 0);
      f[deg] = 1;
      u64 total = 1;
      for (unsigned i = 0; i < deg; ++i) total *= p;
      for (u64 code = 0; code < total; ++code) {
        u64 c = code;
        for (unsigned i = 0; i < deg; ++i) {
          f[i] = c % p;
          c /= p;
        }
        bool root = false;
        for (u64 x = 0; x < p; ++x) {
          u64 v = 0;
          for (unsigned i = deg + 1; i-- > 0;) v = (v * x + f[i]) % p;
          root = root || v == 0;
        }
        CHECK(is_irreducible(f, p) == !root);
      }
    }
  }
  // X^4 + X^2 + 1 = (X^2 + X + 1)^2 over F_2 has no root but is reducible.
  CHECK_FALSE(is_irreducible(std::vector<u64>{1, 0, 1, 0, 1}, 2));
  CHECK(is_irreducible(std::vector<u64>{1, 1, 0, 0, 1}, 2));
}

TEST_CASE("monic_irreducibles are irreducible, distinct and start at the default modulus") {
  const auto mods = monic_irreducibles(3, 4, 5);
  REQUIRE(mods.size() == 5);
  const auto K = build_field(3, 4);
  CHECK(mods[0] == std::vector<u64>(K.modulus().begin(), K.modulus().end()));
  for (const auto& m : mods) CHECK(is_irreducible(m, 3));
  CHECK(std::set<std::vector<u64>>(mods.begin(), mods.end()).size() == 5);
}

TEST_CASE("embed is an injective ring homomorphism along the tower") {
  const auto K9 = build_field(3, 2);
  const auto K81 = build_field(3, 4);
  std::set<u64> image;
  for (u64 a = 0; a < 9; ++a) {
    const FieldElement x{a};
    image.insert(embed(K9, K81, x).value);
    for (u64 b = 0; b < 9; ++b) {
      const FieldElement y{b};
      CHECK(embed(K9, K81, K9.add(x, y)) == K81.add(embed(K9, K81, x), embed(K9, K81, y)));
      CHECK(embed(K9, K81, K9.mul(x, y)) == K81.mul(embed(K9, K81, x), embed(K9, K81, y)));
    }
  }
  CHECK(image.size() == 9);
  const auto F3 = build_field(3, 1);
  CHECK(embed(F3, K81, FieldElement{2}) == K81.from_int(2));
}

TEST_CASE("explicit modulus and generator are honoured") {
  const auto mods = monic_irreducibles(3, 3, 2);
  const auto K = FiniteField::build(3, 3, mods[1]);
  CHECK(std::vector<u64>(K.modulus().begin(), K.modulus().end()) == mods[1]);
  CHECK_FALSE(K.same_model(build_field(3, 3)));
  const auto K2 = FiniteField::build(3, 3, mods[1], K.exp(5));  // gcd(5, 26) = 1
  CHECK(K2.generator() == K.exp(5));
  CHECK_THROWS_AS(FiniteField::build(3, 3, mods[1], K.exp(2)), Error);
}
