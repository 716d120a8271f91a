#include "burgess/approx.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"

using namespace burgess;
using namespace burgess::approx;
using arith::i128;
using arith::i64;
using arith::ReducedFraction;
using arith::u64;

TEST_CASE("distinct_fraction_count examples") {
  CHECK(distinct_fraction_count(1, 0, 2.0) == 2);  // {0, 1/2}
  CHECK(distinct_fraction_count(1, 0, 3.0) == 4);  // {0, 1/2, 1/3, 2/3}
  CHECK(distinct_fraction_count(1, 0, 1.0) == 1);
  CHECK(distinct_fraction_count(5, 3, 1.0) == 1);  // only q=1, t=0
  CHECK_THROWS_AS(distinct_fraction_count(0, 1, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(distinct_fraction_count(2, 4, 2.0), std::invalid_argument);
}

TEST_CASE("fraction_family members are the reduced values, pairwise distinct") {
  const auto fam = fraction_family(3, 2, 9.0);
  CHECK(fam.members.size() == distinct_fraction_count(3, 2, 9.0));
  for (size_t i = 1; i < fam.members.size(); ++i)
    CHECK(fam.members[i - 1] < fam.members[i]);
  // every member matches (3t+2)/q for some admissible pair
  for (const auto& m : fam.members) {
    bool found = false;
    for (u64 q = 1; q <= 9 && !found; ++q)
      for (u64 t = 0; t < q && !found; ++t)
        if (ReducedFraction::from_i128(i128(3) * t + 2, i128(q)) == m)
          found = true;
    CHECK(found);
  }
}

TEST_CASE("fraction_count_lower_bound values against the 256-bit reference") {
  auto lb7 = fraction_count_lower_bound(7.0);
  CHECK(oracles::mp_fraction_lb(oracles::MpReal(7.0)).inside(lb7));
  CHECK(lb7.lo() > 0.58);
  CHECK(lb7.hi() < 0.59);

  auto lb100 = fraction_count_lower_bound(100.0);
  CHECK(oracles::mp_fraction_lb(oracles::MpReal(100.0)).inside(lb100));
  CHECK(lb100.lo() == doctest::Approx(2708.877).epsilon(1e-6));

  // bound / X^2 approaches 3/pi^2
  auto lbbig = fraction_count_lower_bound(1e9);
  const double ratio = lbbig.mid() / 1e18;
  CHECK(ratio == doctest::Approx(3.0 / (M_PI * M_PI)).epsilon(1e-6));

  CHECK_THROWS_AS(fraction_count_lower_bound(6.999), std::invalid_argument);
}

TEST_CASE("fraction count dominates its lower bound, X in [7,200], random pairs") {
  oracles::Rng rng(2024);
  for (u64 X = 7; X <= 200; X += 13) {
    const auto lb = fraction_count_lower_bound(double(X));
    for (int pair = 0; pair < 8; ++pair) {
      i64 a = i64(1 + rng.below(1'000'000));
      i64 b = i64(rng.below(2'000'000)) - 1'000'000;
      const u64 g = std::gcd(u64(a), u64(b < 0 ? -b : b));
      a /= i64(g);
      b /= i64(g);
      if (a < 1) a = 1;
      CHECK(double(distinct_fraction_count(a, b, double(X))) >= lb.hi());
    }
  }
}

TEST_CASE("dirichlet_approx examples") {
  auto r = dirichlet_approx(ReducedFraction{1, 3}, 2.0);
  CHECK(r.a == 1);
  CHECK(r.b == 0);
  r = dirichlet_approx(ReducedFraction{5, 7}, 3.0);
  CHECK(r.a == 1);
  CHECK(r.b == 1);  // |5/7 - 1| = 2/7 <= 1/3
  // exact representation when the denominator is below A
  r = dirichlet_approx(ReducedFraction{5, 7}, 100.0);
  CHECK(r.a == 7);
  CHECK(r.b == 5);
  CHECK_THROWS_AS(dirichlet_approx(ReducedFraction{1, 3}, 1.0),
                  std::invalid_argument);
}

namespace {

void check_dirichlet_invariants(const ReducedFraction& theta, double A) {
  const auto res = dirichlet_approx(theta, A);
  CHECK(res.a >= 1);
  CHECK(double(res.a) < A);
  const u64 ga = u64(res.a);
  const u64 gb = res.b < 0 ? u64(-res.b) : u64(res.b);
  CHECK(std::gcd(ga, gb) == 1);
  // |a theta - b| <= 1/A  <=>  |a num - b den| * A <= den (A integral here)
  i128 diff = i128(res.a) * theta.num() - i128(res.b) * theta.den();
  if (diff < 0) diff = -diff;
  CHECK(diff * i128(u64(A)) <= i128(theta.den()));
}

}  // namespace

TEST_CASE("dirichlet approximation invariants on random theta = N/p, 63-bit p") {
  oracles::Rng rng(777);
  for (int i = 0; i < 1000; ++i) {
    u64 p = (rng.next() >> 1) | 1;  // odd, below 2^63
    while (!arith::is_prime(p)) p += 2;
    const u64 N = rng.below(p);
    const double A = double(2 + rng.below(1'000'000'000));
    check_dirichlet_invariants(ReducedFraction{i64(N), i64(p)}, A);
  }
  // theta with tiny denominator
  check_dirichlet_invariants(ReducedFraction{0, 1}, 5.0);
  check_dirichlet_invariants(ReducedFraction{2, 3}, 1000.0);
}

TEST_CASE("build_interval_family on a synthetic hypothesis-satisfying input") {
  // p = 2753, N = 1282, H = 14, h = 1 satisfies 14h <= H, H^3 <= (2h-1)p
  const u64 p = 2753, N = 1282, H = 14, h = 1;
  const auto fam = build_interval_family(p, N, H, h);
  CHECK(fam.X == 7.0);
  CHECK(!fam.chi_checked);
  CHECK(double(fam.intervals.size()) >= fam.count_lower_bound.hi());
  // sorted, pairwise disjoint, length H/q >= 2h, at least 2h integers
  for (size_t i = 0; i < fam.intervals.size(); ++i) {
    const auto& iv = fam.intervals[i];
    CHECK(iv.lo < iv.hi);
    CHECK(iv.last_integer - iv.first_integer + 1 >= i64(2 * h));
    // exact length H/q
    const auto len = ReducedFraction::from_i128(
        i128(iv.hi.num()) * iv.lo.den() - i128(iv.lo.num()) * iv.hi.den(),
        i128(iv.hi.den()) * iv.lo.den());
    CHECK(len == ReducedFraction(i64(H), i64(iv.q)));
    if (i > 0) CHECK(fam.intervals[i - 1].hi <= iv.lo);
  }
  // representative selection: the first (q,t) in lexicographic order
  CHECK(fam.intervals.size() > 0);
}

TEST_CASE("build_interval_family rejects hypothesis violations") {
  CHECK_THROWS_AS(build_interval_family(2753, 1282, 13, 1, nullptr),
                  std::invalid_argument);  // 14h > H
  CHECK_THROWS_AS(build_interval_family(2141, 100, 14, 1, nullptr),
                  std::invalid_argument);  // H^3 > (2h-1)p
  CHECK_THROWS_AS(build_interval_family(2753, 2750, 14, 1, nullptr),
                  std::invalid_argument);  // run leaves [1, p-1]
}

TEST_CASE("chi-validated family: every interval carries conj(chi(q)) zeta") {
  const u64 p = 2753, N = 1282, H = 14, h = 1;
  const auto chi = characters::make_character(p, (p - 1) / 2);
  const auto fam = build_interval_family(p, N, H, h, &chi);
  CHECK(fam.chi_checked);
  const auto zeta = chi.eval(N + 1);
  for (const auto& iv : fam.intervals) {
    const auto expected = chi.eval(iv.q).conjugate().times(zeta);
    CHECK(iv.value == expected);
    for (i64 z = iv.first_integer; z <= iv.last_integer; ++z) {
      CHECK(chi.eval(u64(z)) == expected);
      // qz - pt lands in the constant run (N, N+H]
      const i64 shifted = i64(iv.q) * z - i64(p) * i64(iv.t);
      CHECK(shifted > i64(N));
      CHECK(shifted <= i64(N + H));
    }
  }
}

TEST_CASE("family construction rejects a non-constant character") {
  // e = 1 mod 2753 has maximal order; it is not constant on (1282, 1296]
  const auto chi = characters::make_character(2753, 1);
  CHECK_THROWS_AS(build_interval_family(2753, 1282, 14, 1, &chi),
                  std::invalid_argument);
}
