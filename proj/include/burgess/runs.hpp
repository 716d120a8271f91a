#pragma once

#include <functional>
#include <optional>

#include "burgess/bounds.hpp"
#include "burgess/characters.hpp"

namespace burgess::runs {

using arith::u64;
using characters::Character;
using characters::CharValue;

// A maximal block of consecutive integers in [1, p-1] on which the
// character takes one nonzero value, annotated with the elementary and
// explicit bounds.  Runs never wrap: chi vanishes at multiples of p.
struct RunRecord {
  u64 p = 0;
  u64 e = 0;      // character index
  u64 order = 0;  // character order
  u64 H = 0;      // run length
  u64 N = 0;      // run is (N, N+H]
  CharValue value;
  double brauer_hi = 0.0;            // upper enclosure of sqrt(2p) + 2
  bool brauer_ok = false;            // exact integer check H <= sqrt(2p)+2
  std::optional<Interval> burgess;   // C g(p) p^(1/4) log p when p >= 5e4
  bool burgess_ok_empirical = false; // H < burgess.lo (meaningful if present)
  bool burgess_applicable = false;   // p >= 5e18: the bound is a theorem
};

// Longest constant run of chi, smallest N on ties.  O(p) evaluations.
RunRecord max_constant_run(const Character& chi);

// Same for the quadratic character, via a bit-packed residue table
// filled by incremental squaring (no division in the hot loop).
RunRecord quadratic_max_run(u64 p);

// Maximal record over all p-2 characters; ties broken by (H desc, e asc,
// N asc).  Rejects p above the exhaustive character budget.
RunRecord max_run_over_characters(u64 p, u64 char_budget = 10'000);

enum class OrderFilter { kQuadratic, kAll, kOrderK };

struct ScanOptions {
  u64 p_min = 3;
  u64 p_max = 0;
  OrderFilter filter = OrderFilter::kQuadratic;
  u64 k = 0;                      // for kOrderK
  unsigned jobs = 1;
  u64 quad_sieve_limit = 100'000'000;
  u64 all_char_limit = 10'000;
};

struct ScanSummary {
  u64 primes = 0;
  u64 brauer_violations = 0;
  u64 burgess_checked = 0;
  u64 burgess_violations = 0;       // empirical comparisons only
  std::vector<RunRecord> records;   // primes achieving a new maximum H
};

// One RunRecord per prime in [p_min, p_max] matching the filter, emitted
// to the sink in ascending p order regardless of the job count.
ScanSummary scan_primes(const ScanOptions& opts,
                        const std::function<void(const RunRecord&)>& sink);

struct Prop1Witness {
  u64 p, e, N, H, h;
};

// Smallest prime with a character run usable by the interval-family
// construction: H >= min_run, 14h <= H and H^3 <= (2h-1) p with
// h = floor(H/14).  Quadratic characters are tried first, then the rest
// by ascending index (for p within the exhaustive budget).  Sub-runs of
// the maximal run count: constancy on (N, N+H] is all that is required.
std::optional<Prop1Witness> find_prop1_witness(u64 min_run = 14,
                                               u64 p_limit = 10'000'000,
                                               u64 all_char_limit = 10'000);

}  // namespace burgess::runs
