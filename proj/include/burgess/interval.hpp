#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace burgess {

enum class Verdict { kTrue, kFalse, kIndeterminate };

// Enclosure [lo, hi] of a real number with outward rounding.  Every
// operation returns an interval guaranteed to contain the exact result:
// basic arithmetic and sqrt are correctly rounded by the hardware, so the
// result is widened by one ulp per endpoint; libm log/exp carry a small
// documented error, so those are widened by four ulps.  This avoids any
// dependence on the floating-point rounding mode.
class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0) {}

  // The double v, taken as an exact real number.
  static Interval exact(double v);
  static Interval bounds(double lo, double hi);
  static Interval from_u64(std::uint64_t n);  // exact below 2^53

  static Interval pi();
  static Interval e();
  static Interval sqrt6();
  static Interval ln10();

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double width() const { return hi_ - lo_; }
  double rel_width() const;
  bool contains(double v) const { return lo_ <= v && v <= hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  Interval inv() const;
  Interval sqrt() const;
  Interval log() const;
  Interval exp() const;
  Interval pow_int(std::uint64_t k) const;  // repeated interval multiplication

  std::string to_string() const;

 private:
  double lo_, hi_;
};

// Certified comparisons; indeterminate when the enclosures overlap.
Verdict certify_le(const Interval& a, const Interval& b);
Verdict certify_lt(const Interval& a, const Interval& b);
Verdict certify_ge_scalar(const Interval& a, double v);  // a >= v ?

const char* verdict_name(Verdict v);

}  // namespace burgess
