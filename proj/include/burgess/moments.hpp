#pragma once

#include <functional>
#include <vector>

#include "burgess/characters.hpp"
#include "burgess/interval.hpp"

namespace burgess::moments {

using arith::u64;
using characters::Character;

struct MomentParams {
  u64 h;
  u64 r;
};

struct MomentResult {
  double value;      // S(chi, h, r)
  bool exact;        // integer arithmetic throughout (real characters)
  double abs_error;  // 0 when exact; conservative float bound otherwise
};

// S(chi,h,r) = sum_{x=0}^{p-1} |sum_{m=1}^{h} chi(x+m)|^(2r), computed by
// a sliding window (O(1) update per x).  h is reduced mod p first, which
// preserves the value; h = p gives exactly 0.  Characters of order <= 2
// take an exact integer path.
MomentResult moment(const Character& chi, MomentParams prm);

// (1/4)(4r)^r p h^r + (2r-1) p^(1/2) h^(2r), upper-rounded.  Throws
// overflow_error when the value exceeds the double range.
Interval moment_upper_bound(u64 p, MomentParams prm);

// Number of vectors m in [1,h]^(2r) in which every occurring value occurs
// at least twice (the exception over-count used against Weil's bound).
// Rejects enumerations beyond the budget (h^(2r) tuples).
u64 count_repeated_tuples(u64 h, u64 r, u64 budget = 100'000'000);

// Number of m in [1,h]^(2r) for which
//   f_m(x) = prod (x+m_i) * prod (x+m_j)^(n-1)   (i <= r < j)
// is an n-th power mod p, decided by root-multiplicity accounting mod n.
u64 count_nth_power_exceptions(const Character& chi, u64 h, u64 r,
                               u64 budget = 100'000'000);

struct WeilCheckResult {
  double magnitude;   // |sum_x chi(f(x))|
  bool exact;         // integer sum (real characters)
  double bound_hi;    // upper enclosure of (m-1) sqrt(p)
  u64 distinct_roots; // m
  bool ok;            // magnitude <= bound + tolerance
};

// Weil's bound check for f(x) = prod (x + c)^mult over the given
// (c, mult) factor list.  Throws domain_error when f is an n-th power
// (every merged multiplicity divisible by the character order).
WeilCheckResult weil_check(const Character& chi,
                           const std::vector<std::pair<u64, u64>>& factors);

struct Lemma2Case {
  u64 p, e, h, r;
  double value;
  double abs_error;
  double bound_hi;
};

struct Lemma2Summary {
  u64 cases = 0;
  u64 failures = 0;
  std::vector<Lemma2Case> failed;  // sorted by (p, e, h, r)
};

// Exhaustive moment-vs-bound sweep: all primes 3 <= p <= p_max, all p-2
// non-principal characters, h in [1,h_max], r in [1,r_max].  Parallel
// over primes; the summary is deterministic regardless of job count.
Lemma2Summary verify_lemma2(
    u64 p_max, u64 h_max, u64 r_max, unsigned jobs = 1,
    const std::function<void(const Lemma2Case&)>& case_sink = nullptr);

}  // namespace burgess::moments
