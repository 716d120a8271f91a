#include "burgess/moments.hpp"

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"

using namespace burgess;
using namespace burgess::moments;
using characters::all_nonprincipal;
using characters::make_character;
using arith::u64;

TEST_CASE("moment examples") {
  const auto chi5 = make_character(5, 2);  // quadratic
  auto m = moment(chi5, {1, 1});
  CHECK(m.exact);
  CHECK(m.value == 4.0);  // p-1 nonzero unit terms

  const auto chi7 = make_character(7, 3);
  m = moment(chi7, {2, 1});
  CHECK(m.exact);
  CHECK(m.value == 10.0);

  // h = p gives exactly zero (full-period character sum)
  m = moment(chi7, {7, 1});
  CHECK(m.exact);
  CHECK(m.value == 0.0);
  // and h > p reduces mod p
  auto m2 = moment(chi7, {9, 1});
  CHECK(m2.value == moment(chi7, {2, 1}).value);

  CHECK_THROWS_AS(moment(chi7, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(moment(chi7, {2, 0}), std::invalid_argument);
}

TEST_CASE("moment_upper_bound examples") {
  // p=7,h=2,r=1: 14 + 4 sqrt(7)
  auto b = moment_upper_bound(7, {2, 1});
  oracles::MpReal expected =
      oracles::MpReal(14.0) + oracles::MpReal(4.0) * oracles::MpReal(7.0).sqrt();
  CHECK(expected.inside(b));
  CHECK(b.lo() == doctest::Approx(24.583005244).epsilon(1e-9));

  // p=5,h=1,r=1: 5 + sqrt(5)
  b = moment_upper_bound(5, {1, 1});
  expected = oracles::MpReal(5.0) + oracles::MpReal(5.0).sqrt();
  CHECK(expected.inside(b));

  // h=1, r=1: bound p + sqrt(p) always exceeds the moment p-1
  for (u64 p : {5ull, 13ull, 101ull}) {
    const auto chi = make_character(p, (p - 1) / 2);
    CHECK(moment(chi, {1, 1}).value <= moment_upper_bound(p, {1, 1}).hi());
  }
}

TEST_CASE("sliding window equals the naive double sum, p <= 200") {
  for (u64 p = 3; p <= 200; p += 2) {
    if (!arith::is_prime(p)) continue;
    const oracles::NaiveCharacterTable tab(p);
    for (const auto& chi : all_nonprincipal(p)) {
      for (u64 h : {1ull, 2ull, 5ull}) {
        for (u64 r : {1ull, 2ull}) {
          const auto got = moment(chi, {h, r});
          const long double want =
              oracles::naive_moment(tab, chi.index(), h % p, r);
          if (got.exact) {
            CHECK(double(want) == got.value);
          } else {
            const double tol = got.abs_error + 1e-9 * std::fabs(double(want));
            CHECK(std::fabs(got.value - double(want)) <= tol);
          }
        }
      }
    }
  }
}

TEST_CASE("moment invariant under conjugation") {
  for (u64 p : {13ull, 31ull, 61ull}) {
    for (const auto& chi : all_nonprincipal(p)) {
      const auto a = moment(chi, {3, 2});
      const auto b = moment(chi.conjugate(), {3, 2});
      CHECK(std::fabs(a.value - b.value) <=
            a.abs_error + b.abs_error + 1e-12 * std::max(a.value, 1.0));
    }
  }
}

TEST_CASE("the moment bound holds on a small exhaustive sweep") {
  const auto summary = verify_lemma2(300, 5, 2, 2);
  CHECK(summary.failures == 0);
  // cases = sum over primes of (p-2)*5*2
  u64 expect = 0;
  for (u64 p = 3; p <= 300; ++p)
    if (arith::is_prime(p)) expect += (p - 2) * 10;
  CHECK(summary.cases == expect);
}

TEST_CASE("sweep values match the standalone moment on samples") {
  std::vector<moments::Lemma2Case> cases;
  verify_lemma2(53, 3, 2, 1,
                [&](const Lemma2Case& c) { cases.push_back(c); });
  oracles::Rng rng(5);
  REQUIRE(!cases.empty());
  for (int i = 0; i < 200; ++i) {
    const auto& c = cases[rng.below(cases.size())];
    const auto chi = make_character(c.p, c.e);
    const auto m = moment(chi, {c.h, c.r});
    CHECK(std::fabs(m.value - c.value) <=
          m.abs_error + c.abs_error + 1e-12 * std::max(m.value, 1.0));
  }
}

TEST_CASE("count_repeated_tuples: examples and the (1/4)(4rh)^r bound") {
  CHECK(count_repeated_tuples(2, 1) == 2);  // (1,1) and (2,2)
  CHECK(count_repeated_tuples(1, 1) == 1);
  CHECK(count_repeated_tuples(3, 2) == 21);
  for (u64 h = 1; h <= 6; ++h) {
    for (u64 r = 1; r <= 3; ++r) {
      if (h <= r) continue;  // the proof assumes r < h < p
      const u64 count = count_repeated_tuples(h, r);
      const double bound = 0.25 * std::pow(4.0 * double(r) * double(h), double(r));
      CHECK(double(count) <= bound);
      if (r == 1) CHECK(double(count) == bound);  // equality at (1,1), (2,1), ...
    }
  }
  CHECK_THROWS_AS(count_repeated_tuples(10, 9, 1000), std::invalid_argument);
}

TEST_CASE("count_nth_power_exceptions examples") {
  const auto chi7 = make_character(7, 3);  // n = 2
  CHECK(count_nth_power_exceptions(chi7, 2, 1) == 2);
  const auto chi5 = make_character(5, 1);  // n = 4
  CHECK(count_nth_power_exceptions(chi5, 2, 1) == 2);
  // quadratic case: exceptions are contained in the repeated-tuple count
  for (u64 p : {7ull, 11ull, 13ull}) {
    const auto chi = make_character(p, (p - 1) / 2);
    for (u64 h = 2; h <= 4; ++h)
      for (u64 r = 1; r <= 2; ++r)
        CHECK(count_nth_power_exceptions(chi, h, r) <=
              count_repeated_tuples(h, r));
  }
  CHECK_THROWS_AS(count_nth_power_exceptions(chi7, 10, 9, 1000),
                  std::invalid_argument);
}

TEST_CASE("weil_check examples") {
  const auto chi7 = make_character(7, 3);
  auto w = weil_check(chi7, {{0, 1}, {1, 1}});  // f(x) = x(x+1)
  CHECK(w.exact);
  CHECK(w.magnitude == 1.0);  // the sum is -1
  CHECK(w.distinct_roots == 2);
  CHECK(w.ok);

  const auto chi11 = make_character(11, 5);
  w = weil_check(chi11, {{0, 1}});  // f(x) = x: plain orthogonality
  CHECK(w.magnitude == 0.0);
  CHECK(w.ok);

  const auto chi13 = make_character(13, 6);
  w = weil_check(chi13, {{0, 1}, {1, 1}, {2, 1}});
  CHECK(w.ok);
  CHECK(w.bound_hi == doctest::Approx(2.0 * std::sqrt(13.0)).epsilon(1e-12));

  // n-th power input: every multiplicity divisible by the order
  CHECK_THROWS_AS(weil_check(chi7, {{0, 2}}), std::domain_error);
  CHECK_THROWS_AS(weil_check(chi7, {{0, 1}, {0, 1}}), std::domain_error);
}

TEST_CASE("weil_check on randomized polynomials, p <= 500") {
  oracles::Rng rng(4242);
  for (u64 p = 5; p <= 500; p += 2) {
    if (!arith::is_prime(p)) continue;
    const auto chars = all_nonprincipal(p);
    for (int trial = 0; trial < 3; ++trial) {
      const auto& chi = chars[rng.below(chars.size())];
      const u64 m = 1 + rng.below(4);
      std::vector<std::pair<u64, u64>> factors;
      std::set<u64> used;
      for (u64 i = 0; i < m; ++i) {
        u64 c = rng.below(p);
        while (used.count(c)) c = rng.below(p);
        used.insert(c);
        factors.push_back({c, 1 + rng.below(chi.order())});
      }
      bool all_div = true;
      for (auto& [c, mult] : factors) {
        (void)c;
        if (mult % chi.order() != 0) all_div = false;
      }
      if (all_div) factors[0].second += 1;  // keep the bound applicable
      const auto w = weil_check(chi, factors);
      CHECK(w.ok);
    }
  }
}

TEST_CASE("budget guards") {
  CHECK_THROWS_AS(verify_lemma2(2'000'000, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_lemma2(100, 0, 1), std::invalid_argument);
}
