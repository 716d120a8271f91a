#include "burgess/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace burgess::approx {

using arith::i128;
using arith::u128;

FractionFamily fraction_family(i64 a, i64 b, double X) {
  if (a < 1) throw std::invalid_argument("fraction_family: a must be >= 1");
  if (std::gcd(a < 0 ? u64(-a) : u64(a), b < 0 ? u64(-b) : u64(b)) != 1)
    throw std::invalid_argument("fraction_family: a, b must be coprime");
  if (!(X >= 1.0)) throw std::invalid_argument("fraction_family: X must be >= 1");
  const u64 xmax = u64(std::floor(X));
  std::vector<ReducedFraction> all;
  all.reserve(xmax * (xmax + 1) / 2);
  for (u64 q = 1; q <= xmax; ++q)
    for (u64 t = 0; t < q; ++t)
      all.push_back(ReducedFraction::from_i128(i128(a) * i128(t) + b, i128(q)));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  FractionFamily fam;
  fam.a = a;
  fam.b = b;
  fam.x_max = xmax;
  fam.members = std::move(all);
  return fam;
}

u64 distinct_fraction_count(i64 a, i64 b, double X) {
  return fraction_family(a, b, X).members.size();
}

Interval fraction_count_lower_bound(double X) {
  if (!(X >= 7.0))
    throw std::invalid_argument("fraction_count_lower_bound: requires X >= 7");
  const Interval x = Interval::exact(X);
  const Interval one = Interval::exact(1.0);
  const Interval two = Interval::exact(2.0);
  const Interval three_over_pi_sq =
      Interval::exact(3.0) / (Interval::pi() * Interval::pi());
  return x * x *
         (three_over_pi_sq - x.log() / (two * x) - one / x - one / (two * x * x));
}

ApproxResult dirichlet_approx(const ReducedFraction& theta, double A) {
  if (!(A > 1.0))
    throw std::invalid_argument("dirichlet_approx: requires A > 1");
  // continued-fraction convergents b_k/a_k of theta; long double compares
  // are exact for every 64-bit denominator
  i64 num = theta.num(), den = theta.den();
  i64 b_prev = 1, a_prev = 0;  // k = -1
  i64 b_cur, a_cur;            // k = 0
  {
    i64 q = num / den;
    if (num % den != 0 && num < 0) --q;
    b_cur = q;
    a_cur = 1;
    i64 rem = num - q * den;
    num = den;
    den = rem;
  }
  while (den != 0) {
    const i64 q = num / den;  // positive after the first step
    const i64 rem = num % den;
    const i128 a_next = i128(q) * a_cur + a_prev;
    const i128 b_next = i128(q) * b_cur + b_prev;
    if (a_next > std::numeric_limits<i64>::max() ||
        b_next > std::numeric_limits<i64>::max() ||
        b_next < std::numeric_limits<i64>::min())
      throw std::overflow_error("dirichlet_approx: convergent overflow");
    if ((long double)(i64)a_next >= (long double)A) break;
    a_prev = a_cur;
    b_prev = b_cur;
    a_cur = i64(a_next);
    b_cur = i64(b_next);
    num = den;
    den = rem;
  }
  return {a_cur, b_cur};
}

namespace {

ReducedFraction endpoint(u64 base, u64 p, u64 t, u64 q) {
  return ReducedFraction::from_i128(i128(base) + i128(p) * t, i128(q));
}

}  // namespace

IntervalFamily build_interval_family(u64 p, u64 N, u64 H, u64 h,
                                     const Character* chi) {
  if (h < 1) throw std::invalid_argument("build_interval_family: h must be >= 1");
  if (14 * h > H)
    throw std::invalid_argument(
        "build_interval_family: hypothesis 14h <= H violated");
  if (u128(H) * H * H > u128(2 * h - 1) * p)
    throw std::invalid_argument(
        "build_interval_family: hypothesis H <= (2h-1)^(1/3) p^(1/3) violated");
  if (N + H > p - 1)
    throw std::invalid_argument(
        "build_interval_family: run (N, N+H] must lie inside [1, p-1]");

  IntervalFamily fam;
  fam.p = p;
  fam.N = N;
  fam.H = H;
  fam.h = h;
  fam.X = double(H) / (2.0 * double(h));

  const auto ab = dirichlet_approx(ReducedFraction(i64(N), i64(p)), double(H));
  fam.a = ab.a;
  fam.b = ab.b;
  // X^2(3/pi^2 - ...) coincides with (3/pi^2) X^2 f(X)
  fam.count_lower_bound = fraction_count_lower_bound(fam.X);

  CharValue zeta = CharValue::zero();
  if (chi) {
    if (chi->modulus() != p)
      throw std::invalid_argument("build_interval_family: modulus mismatch");
    zeta = chi->eval(N + 1);
    for (u64 j = 2; j <= H; ++j)
      if (!(chi->eval(N + j) == zeta))
        throw std::invalid_argument(
            "build_interval_family: character not constant on (N, N+H]");
  }

  // one representative (q, t) per distinct fraction (a t + b)/q;
  // ascending (q, t) makes the pick the lexicographically smallest
  const u64 xmax = u64(std::floor(fam.X));
  std::set<ReducedFraction, std::less<>> seen;
  for (u64 q = 1; q <= xmax; ++q) {
    for (u64 t = 0; t < q; ++t) {
      const auto key =
          ReducedFraction::from_i128(i128(fam.a) * t + fam.b, i128(q));
      if (!seen.insert(key).second) continue;
      FamilyInterval iv;
      iv.q = q;
      iv.t = t;
      iv.lo = endpoint(N, p, t, q);
      iv.hi = endpoint(N + H, p, t, q);
      iv.first_integer = iv.lo.floor() + 1;
      iv.last_integer = iv.hi.floor();
      fam.intervals.push_back(iv);
    }
  }

  std::sort(fam.intervals.begin(), fam.intervals.end(),
            [](const FamilyInterval& u, const FamilyInterval& v) {
              return u.lo < v.lo;
            });
  for (size_t i = 1; i < fam.intervals.size(); ++i) {
    if (!(fam.intervals[i - 1].hi <= fam.intervals[i].lo))
      throw std::logic_error(
          "build_interval_family: intervals overlap; the disjointness "
          "argument has been falsified");
  }
  for (const auto& iv : fam.intervals) {
    if (iv.last_integer - iv.first_integer + 1 < i64(2 * h))
      throw std::logic_error(
          "build_interval_family: interval shorter than 2h integers");
  }
  if (double(fam.intervals.size()) < fam.count_lower_bound.lo())
    throw std::logic_error(
        "build_interval_family: family smaller than the guaranteed count");

  if (chi) {
    for (auto& iv : fam.intervals) {
      const CharValue expected = chi->eval(iv.q).conjugate().times(zeta);
      for (i64 z = iv.first_integer; z <= iv.last_integer; ++z) {
        if (!(chi->eval(u64(z)) == expected))
          throw std::logic_error(
              "build_interval_family: character not constant on I(q,t)");
      }
      iv.value = expected;
    }
    fam.chi_checked = true;
  }
  return fam;
}

}  // namespace burgess::approx
