#include "burgess/interval.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace burgess {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double step_down(double x, int steps = 1) {
  for (int i = 0; i < steps; ++i) x = std::nextafter(x, -kInf);
  return x;
}

double step_up(double x, int steps = 1) {
  for (int i = 0; i < steps; ++i) x = std::nextafter(x, kInf);
  return x;
}

// one-ulp widening covers correctly rounded operations (+,-,*,/,sqrt)
constexpr int kBasicSlack = 1;
// glibc log/exp are faithful to within ~2 ulp; four is a safe margin and
// the MPFR soundness tests exercise it
constexpr int kLibmSlack = 4;

void check_finite(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi)
    throw std::domain_error("Interval: invalid endpoints");
}

}  // namespace

Interval Interval::exact(double v) {
  if (std::isnan(v)) throw std::domain_error("Interval: NaN");
  Interval r;
  r.lo_ = v;
  r.hi_ = v;
  return r;
}

Interval Interval::bounds(double lo, double hi) {
  check_finite(lo, hi);
  Interval r;
  r.lo_ = lo;
  r.hi_ = hi;
  return r;
}

Interval Interval::from_u64(std::uint64_t n) {
  if (n <= (std::uint64_t{1} << 53)) return exact(double(n));
  const double d = double(n);
  return bounds(step_down(d), step_up(d));
}

Interval Interval::pi() {
  return bounds(step_down(std::numbers::pi), step_up(std::numbers::pi));
}

Interval Interval::e() {
  return bounds(step_down(std::numbers::e), step_up(std::numbers::e));
}

Interval Interval::sqrt6() { return exact(6.0).sqrt(); }

Interval Interval::ln10() { return exact(10.0).log(); }

double Interval::rel_width() const {
  const double scale = std::max(std::fabs(lo_), std::fabs(hi_));
  return scale > 0 ? width() / scale : width();
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval::bounds(step_down(a.lo_ + b.lo_, kBasicSlack),
                          step_up(a.hi_ + b.hi_, kBasicSlack));
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval::bounds(step_down(a.lo_ - b.hi_, kBasicSlack),
                          step_up(a.hi_ - b.lo_, kBasicSlack));
}

Interval operator-(const Interval& a) {
  return Interval::bounds(-a.hi_, -a.lo_);
}

Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
  const double p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
  return Interval::bounds(
      step_down(std::min(std::min(p1, p2), std::min(p3, p4)), kBasicSlack),
      step_up(std::max(std::max(p1, p2), std::max(p3, p4)), kBasicSlack));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo_ <= 0.0 && b.hi_ >= 0.0)
    throw std::domain_error("Interval: division by an interval containing 0");
  const double q1 = a.lo_ / b.lo_, q2 = a.lo_ / b.hi_;
  const double q3 = a.hi_ / b.lo_, q4 = a.hi_ / b.hi_;
  return Interval::bounds(
      step_down(std::min(std::min(q1, q2), std::min(q3, q4)), kBasicSlack),
      step_up(std::max(std::max(q1, q2), std::max(q3, q4)), kBasicSlack));
}

Interval Interval::inv() const { return exact(1.0) / *this; }

Interval Interval::sqrt() const {
  if (lo_ < 0.0) throw std::domain_error("Interval: sqrt of negative");
  return bounds(std::max(0.0, step_down(std::sqrt(lo_), kBasicSlack)),
                step_up(std::sqrt(hi_), kBasicSlack));
}

Interval Interval::log() const {
  if (lo_ <= 0.0) throw std::domain_error("Interval: log of non-positive");
  return bounds(step_down(std::log(lo_), kLibmSlack),
                step_up(std::log(hi_), kLibmSlack));
}

Interval Interval::exp() const {
  const double lo = std::exp(lo_), hi = std::exp(hi_);
  if (std::isinf(hi)) throw std::overflow_error("Interval: exp overflow");
  return bounds(std::max(0.0, step_down(lo, kLibmSlack)),
                step_up(hi, kLibmSlack));
}

Interval Interval::pow_int(std::uint64_t k) const {
  Interval acc = exact(1.0);
  Interval base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string Interval::to_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", lo_, hi_);
  return buf;
}

Verdict certify_le(const Interval& a, const Interval& b) {
  if (a.hi() <= b.lo()) return Verdict::kTrue;
  if (a.lo() > b.hi()) return Verdict::kFalse;
  return Verdict::kIndeterminate;
}

Verdict certify_lt(const Interval& a, const Interval& b) {
  if (a.hi() < b.lo()) return Verdict::kTrue;
  if (a.lo() >= b.hi()) return Verdict::kFalse;
  return Verdict::kIndeterminate;
}

Verdict certify_ge_scalar(const Interval& a, double v) {
  if (a.lo() >= v) return Verdict::kTrue;
  if (a.hi() < v) return Verdict::kFalse;
  return Verdict::kIndeterminate;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    default: return "indeterminate";
  }
}

}  // namespace burgess
