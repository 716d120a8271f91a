#include "burgess/arith.hpp"

#include <doctest.h>

#include <numeric>

#include "oracles.hpp"

using namespace burgess::arith;

TEST_CASE("is_prime matches trial division up to 10^4") {
  for (u64 n = 0; n <= 10'000; ++n)
    CHECK(is_prime(n) == oracles::trial_division_is_prime(n));
}

TEST_CASE("is_prime examples") {
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  // 2^61 - 1: trial division below 10^6 plus an independent MR base set
  const u64 m61 = 2305843009213693951ull;
  for (u64 d = 2; d < 1'000'000; ++d) CHECK(m61 % d != 0);
  CHECK(oracles::mr7_is_prime(m61));
  CHECK(is_prime(m61));
}

TEST_CASE("is_prime agrees with the independent 7-base set on random 64-bit") {
  oracles::Rng rng(12345);
  for (int i = 0; i < 2000; ++i) {
    const u64 n = rng.next();
    CHECK(is_prime(n) == oracles::mr7_is_prime(n));
  }
}

TEST_CASE("factorize identity on [2, 10^5] and spot checks") {
  for (u64 n = 2; n <= 100'000; ++n) {
    const auto f = factorize(n);
    CHECK(f.value() == n);
    for (size_t i = 1; i < f.factors.size(); ++i)
      CHECK(f.factors[i - 1].first < f.factors[i].first);
  }
  // every listed prime passes the primality test, sampled across [2, 10^6]
  oracles::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const u64 n = 2 + rng.below(1'000'000);
    for (auto [q, k] : factorize(n).factors) {
      (void)k;
      CHECK(is_prime(q));
    }
  }
}

TEST_CASE("factorize examples") {
  auto f12 = factorize(12);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0] == std::pair<u64, u32>{2, 2});
  CHECK(f12.factors[1] == std::pair<u64, u32>{3, 1});
  auto f97 = factorize(97);
  REQUIRE(f97.factors.size() == 1);
  CHECK(f97.factors[0] == std::pair<u64, u32>{97, 1});
  // p - 1 for p = 1000003; 166667 verified prime by trial division
  CHECK(oracles::trial_division_is_prime(166667));
  auto f = factorize(1000002);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::pair<u64, u32>{2, 1});
  CHECK(f.factors[1] == std::pair<u64, u32>{3, 1});
  CHECK(f.factors[2] == std::pair<u64, u32>{166667, 1});
  CHECK_THROWS_AS(factorize(1), std::invalid_argument);
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize reaches Pollard rho on 64-bit semiprimes") {
  const u64 p1 = 1000003, p2 = 1000033;
  const u64 n = p1 * p2;
  auto f = factorize(n);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<u64, u32>{p1, 1});
  CHECK(f.factors[1] == std::pair<u64, u32>{p2, 1});
  // two large 31-bit primes, beyond the trial division cutoff
  const u64 q1 = 2147483647ull, q2 = 2147483629ull;
  auto f2 = factorize(q1 * q2);
  REQUIRE(f2.factors.size() == 2);
  CHECK(f2.factors[0].first == q2);
  CHECK(f2.factors[1].first == q1);
}

TEST_CASE("pow_mod examples and Fermat") {
  CHECK(pow_mod(3, 2, 7) == 2);
  CHECK(pow_mod(5, 0, 11) == 1);
  oracles::Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    u64 p = 3 + rng.below(100000);
    while (!is_prime(p)) ++p;
    const u64 a = 1 + rng.below(p - 1);
    CHECK(pow_mod(a, p - 1, p) == 1);
  }
  CHECK_THROWS_AS(pow_mod(2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(pow_mod(2, 3, 0), std::invalid_argument);
}

TEST_CASE("primitive_root: smallest, certified order") {
  CHECK(primitive_root(PrimeModulus(7)) == 3);
  CHECK(primitive_root(PrimeModulus(5)) == 2);
  CHECK(primitive_root(PrimeModulus(3)) == 2);
  for (u64 p = 3; p <= 2000; ++p) {
    if (!is_prime(p)) continue;
    const u64 g = primitive_root(PrimeModulus(p));
    for (auto [q, k] : factorize(p - 1).factors) {
      (void)k;
      CHECK(pow_mod(g, (p - 1) / q, p) != 1);
    }
    // smaller candidates all fail
    for (u64 c = 2; c < g; ++c) {
      bool generates = true;
      for (auto [q, k] : factorize(p - 1).factors) {
        (void)k;
        if (pow_mod(c, (p - 1) / q, p) == 1) generates = false;
      }
      CHECK_FALSE(generates);
    }
  }
}

TEST_CASE("discrete_log round-trips for all p <= 10^3") {
  for (u64 p = 3; p <= 1000; ++p) {
    if (!is_prime(p)) continue;
    const PrimeModulus pm(p);
    const u64 g = primitive_root(pm);
    for (u64 k = 0; k + 1 < p; ++k)
      CHECK(discrete_log(g, pow_mod(g, k, p), pm) == k);
  }
}

TEST_CASE("discrete_log examples and errors") {
  const PrimeModulus p7(7);
  CHECK(discrete_log(3, 2, p7) == 2);
  const PrimeModulus p(1000003);
  const u64 g = primitive_root(p);
  CHECK(discrete_log(g, 1, p) == 0);
  CHECK(discrete_log(g, g, p) == 1);
  CHECK_THROWS_AS(discrete_log(g, 0, p), std::domain_error);
}

TEST_CASE("legendre equals brute-force quadratic residues, p <= 10^4") {
  for (u64 p = 3; p <= 10'000; p += 2) {
    if (!is_prime(p)) continue;
    const PrimeModulus pm(p);
    const auto qrs = oracles::qr_set(p);
    for (u64 a = 0; a < p; ++a) {
      const int sym = legendre(a, pm);
      if (a == 0)
        CHECK(sym == 0);
      else
        CHECK(sym == (qrs.count(a) ? 1 : -1));
    }
  }
}

TEST_CASE("legendre examples") {
  const PrimeModulus p7(7);
  CHECK(legendre(2, p7) == 1);  // 3^2 = 2 mod 7
  CHECK(legendre(0, p7) == 0);
  CHECK(legendre(3, p7) == -1);
}

TEST_CASE("PrimeModulus validates") {
  CHECK_THROWS_AS(PrimeModulus(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(2), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(9), std::invalid_argument);
  CHECK(PrimeModulus(3).value() == 3);
}

TEST_CASE("ReducedFraction reduction, order, floor") {
  ReducedFraction a(6, 4);
  CHECK(a.num() == 3);
  CHECK(a.den() == 2);
  ReducedFraction b(-6, 4);
  CHECK(b.num() == -3);
  CHECK(b.den() == 2);
  ReducedFraction c(6, -4);
  CHECK(c.num() == -3);
  CHECK(c.den() == 2);
  CHECK(ReducedFraction(1, 3) < ReducedFraction(1, 2));
  CHECK(ReducedFraction(-1, 2) < ReducedFraction(0, 1));
  CHECK(ReducedFraction(7, 2).floor() == 3);
  CHECK(ReducedFraction(-7, 2).floor() == -4);
  CHECK(ReducedFraction(4, 2).floor() == 2);
  CHECK_THROWS_AS(ReducedFraction(1, 0), std::invalid_argument);
  // 128-bit construction reduces and detects overflow
  const i64 big = std::numeric_limits<i64>::max();
  CHECK_THROWS_AS(ReducedFraction::from_i128(i128(big) * 4, 2),
                  std::overflow_error);
  auto ok = ReducedFraction::from_i128(i128(big) * 3, 3);
  CHECK(ok.num() == big);
  CHECK(ok.den() == 1);
}
