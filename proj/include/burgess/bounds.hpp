#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "burgess/arith.hpp"
#include "burgess/interval.hpp"

namespace burgess::bounds {

using arith::u64;

// A positive real magnitude p, possibly far beyond 64 bits (e.g. 5e55),
// carried as an enclosure of log p.  When p is exactly representable as a
// double the exact value is kept as well, so threshold gates like
// "p >= 5e4" can be decided without enclosure ambiguity.
class PrimeMagnitude {
 public:
  static PrimeMagnitude from_u64(u64 p);
  static PrimeMagnitude from_double(double p);  // p itself taken as exact
  static PrimeMagnitude from_decimal(double mantissa, long exp10);
  // Accepts "50000", "5e18", "1.5e20"; the decimal is represented
  // faithfully no matter how large the exponent.
  static PrimeMagnitude parse(std::string_view text);

  Interval log() const { return log_; }
  Interval sqrt() const;
  Interval quarter_root() const;
  Interval cube_root() const;
  Interval value_interval() const;  // enclosure of p itself; may overflow

  bool has_exact_value() const { return exact_ == exact_; }
  double exact_value() const { return exact_; }
  double approx() const { return approx_; }

  // Certified p >= threshold (threshold an exact double).
  bool at_least(double threshold) const;

  std::string to_string() const;

 private:
  Interval log_;
  double exact_ = std::numeric_limits<double>::quiet_NaN();
  double approx_ = 0.0;
  std::string text_;
};

// The constants of the explicit bound: C = pi*e*sqrt(6)/3 (~6.97266),
// A = e^2 and B = 1/4, chosen to minimize AB subject to the logarithmic
// side condition A >= 4B*exp(1/(2B)) (here with equality).
struct BoundConstants {
  static Interval C();
  static Interval A();
  static Interval B();
  // Canonical double spellings recognized by logs_condition.
  static double canonical_A();
  static constexpr double canonical_B() { return 0.25; }
};

// f(X) = 1 - (pi^2/3) (log X / (2X) + 1/X + 1/(2X^2)); positive and
// increasing on [7, inf), tending to 1.  Rejects X.lo < 7.
Interval f_of_x(const Interval& X);

// Argument fed to f inside g: X = C p^(1/4) / (2 e^2).
Interval x_of_p(const PrimeMagnitude& p);

// g(p) = sqrt( (1/f(C p^(1/4)/(2e^2))) (1 + 1/log p) ).  Requires
// p >= 5*10^4, which keeps the f argument above 7.
Interval g_of_p(const PrimeMagnitude& p);

// C g(p) p^(1/4) log p.
Interval burgess_bound(const PrimeMagnitude& p);

// sqrt(2p) + 2, valid for every p >= 3.
Interval brauer_bound(const PrimeMagnitude& p);

// 2 pi h / sqrt(3 f(X)).
Interval prop1_prefactor(u64 h, const Interval& X);

// (2 pi h / sqrt(3 f(X))) p^(1/4) [ (1/4h)(4r/h)^r p^(1/2) + (2r-1)/h ]^(1/2)
Interval prop1_H_bound(const PrimeMagnitude& p, u64 h, u64 r, const Interval& X);

// Does A >= 4B exp(1/(2B)) hold?  The canonical pair (e^2, 1/4) satisfies
// it with equality, which double enclosures alone cannot decide, so that
// exact pair is recognized symbolically.
Verdict logs_condition(double A, double B);

struct Schedule {
  u64 h;  // floor(e^2 log p)
  u64 r;  // floor(log p / 4)
  Verdict fourteen_h_le_c_bound;  // 14h <= C p^(1/4) log p
  bool two_r_plus_one_le_h;
  Interval c_bound;  // C p^(1/4) log p
};

// The parameter choice of the main bound's proof.  Rejects p < 5*10^4.
Schedule parameter_schedule(const PrimeMagnitude& p);

// One link of the proof chain: with the schedule (h, r), does
// (1/(2h)) (4r/h)^r <= 1/(A p^(1/2) log p) hold?  `premise` is the inner
// step (4B/A)^r <= p^(-1/2); when the premise holds the conclusion is
// forced, but the floor in r can break the premise (see tests).
struct ChainCheck {
  u64 h, r;
  Interval lhs, rhs;
  Verdict holds;
  Verdict premise;
};
ChainCheck logs_chain(const PrimeMagnitude& p);

struct ThresholdRow {
  std::string p_text;
  double constant;  // 0 when no headline constant is claimed
  Interval cg;      // enclosure of C g(p)
  Verdict verified; // cg.hi < constant (kIndeterminate when no constant)
};

struct ThresholdReport {
  std::vector<ThresholdRow> rows;   // p = 5e4 (informational), 5e18, 5e55
  Verdict g_decreasing_on_grid;     // coarse certified grid check
  Interval c_enclosure;
};
ThresholdReport theorem2_report();

enum class TheoremGate { kTheorem2, kTheorem3, kNone };

struct GateResult {
  TheoremGate gate;
  Interval bound;             // the applicable H bound (empty if kNone)
  Interval theorem3_ceiling;  // (2 e^2 log p - 3)^(1/3) p^(1/3)
};

// Which theorem bounds H for this (p, H): unconditional for p >= 5e18;
// for 5e4 <= p < 5e18 only under H <= (2e^2 log p - 3)^(1/3) p^(1/3).
GateResult corollary1_gate(const PrimeMagnitude& p, double H);

// 7.06 p^(1/4) log p < (2 e^2 log p - 3)^(1/3) p^(1/3) - 1, the inequality
// that lets the ceiling hypothesis be dropped for p >= 5e18.
Verdict corollary1_chain_inequality(const PrimeMagnitude& p);

struct BoundReport {
  PrimeMagnitude p;
  u64 h = 0, r = 0;
  Interval X, f, g, cg, burgess, brauer;
  bool schedule_ok = false;     // p >= 5e4, so h, r, g are defined
};
BoundReport bound_report(const PrimeMagnitude& p);

}  // namespace burgess::bounds
