#pragma once

#include <optional>
#include <vector>

#include "burgess/characters.hpp"
#include "burgess/interval.hpp"

namespace burgess::approx {

using arith::i64;
using arith::ReducedFraction;
using arith::u64;
using characters::Character;
using characters::CharValue;

// The distinct reduced values (a t + b)/q over 0 <= t < q <= X, sorted.
struct FractionFamily {
  i64 a;
  i64 b;
  u64 x_max;
  std::vector<ReducedFraction> members;
};

// Requires a >= 1, gcd(a, b) = 1, X >= 1.
FractionFamily fraction_family(i64 a, i64 b, double X);
u64 distinct_fraction_count(i64 a, i64 b, double X);

// X^2 (3/pi^2 - log X/(2X) - 1/X - 1/(2X^2)), lower-rounded; a guaranteed
// undercount of the family size.  Rejects X < 7, where the estimate can
// go non-positive.
Interval fraction_count_lower_bound(double X);

struct ApproxResult {
  i64 a;  // 0 < a < A, gcd(a, b) = 1
  i64 b;  // |a theta - b| <= 1/A
};

// Dirichlet approximation via continued-fraction convergents: the last
// convergent denominator below A.  Requires A > 1.
ApproxResult dirichlet_approx(const ReducedFraction& theta, double A);

// One interval I(q,t) = ((N + p t)/q, (N + H + p t)/q] of the family,
// with its integer span and (when a character was supplied) the constant
// character value on it.
struct FamilyInterval {
  u64 q, t;
  ReducedFraction lo, hi;
  i64 first_integer, last_integer;  // the integers in (lo, hi]
  CharValue value;                  // zero when no character was checked
};

struct IntervalFamily {
  u64 p, N, H, h;
  double X;        // H/(2h)
  i64 a, b;        // the Dirichlet approximation used
  Interval count_lower_bound;  // (3/pi^2) X^2 f(X)
  bool chi_checked = false;
  std::vector<FamilyInterval> intervals;  // sorted, pairwise disjoint
};

// Builds the disjoint interval family.  Requires 14h <= H and
// H^3 <= (2h-1) p; picks one representative (smallest q, then t) per
// distinct fraction (a t + b)/q; verifies disjointness by exact rational
// comparison and, when chi is given (and constant on (N, N+H]), verifies
// chi is constant on every interval's integers.
IntervalFamily build_interval_family(u64 p, u64 N, u64 H, u64 h,
                                     const Character* chi = nullptr);

}  // namespace burgess::approx
