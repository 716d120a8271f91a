#include "burgess/bounds.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace burgess::bounds {

using arith::u128;

namespace {

// Round-trip test: is the integer n exactly representable as a double?
bool u128_fits_double(u128 n, double* out) {
  const double d = double(n);
  if (d >= 1.8446744073709552e19) {  // 2^64; cast back would be UB
    // compare via long double, exact for integers below 2^64 only
    return false;
  }
  if (u128(d) == n) {
    *out = d;
    return true;
  }
  return false;
}

}  // namespace

PrimeMagnitude PrimeMagnitude::from_u64(u64 p) {
  if (p == 0) throw std::invalid_argument("PrimeMagnitude: p must be positive");
  PrimeMagnitude m;
  m.log_ = Interval::from_u64(p).log();
  double d;
  if (u128_fits_double(p, &d)) m.exact_ = d;
  m.approx_ = double(p);
  m.text_ = std::to_string(p);
  return m;
}

PrimeMagnitude PrimeMagnitude::from_double(double p) {
  if (!(p > 0) || std::isinf(p))
    throw std::invalid_argument("PrimeMagnitude: p must be positive and finite");
  PrimeMagnitude m;
  m.log_ = Interval::exact(p).log();
  m.exact_ = p;
  m.approx_ = p;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", p);
  m.text_ = buf;
  return m;
}

PrimeMagnitude PrimeMagnitude::from_decimal(double mantissa, long exp10) {
  if (!(mantissa > 0) || std::isinf(mantissa))
    throw std::invalid_argument("PrimeMagnitude: mantissa must be positive");
  PrimeMagnitude m;
  m.log_ = Interval::exact(mantissa).log() +
           Interval::exact(double(exp10)) * Interval::ln10();
  // exact double detection for integral mantissa * 10^exp10 within range
  if (mantissa == std::floor(mantissa) && exp10 >= 0 && exp10 <= 19 &&
      mantissa < 9.2e18) {
    u128 n = u128(mantissa);
    bool overflow = false;
    for (long i = 0; i < exp10; ++i) {
      n *= 10;
      if (n >> 100) {
        overflow = true;
        break;
      }
    }
    double d;
    if (!overflow && u128_fits_double(n, &d)) m.exact_ = d;
  }
  m.approx_ = mantissa * std::pow(10.0, double(exp10));
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17ge%ld", mantissa, exp10);
  m.text_ = buf;
  return m;
}

PrimeMagnitude PrimeMagnitude::parse(std::string_view text) {
  // mantissa digits (optional decimal point) + optional e<exp>
  std::string digits;
  long exp10 = 0;
  size_t i = 0;
  bool seen_point = false;
  long frac_digits = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("parse: two decimal points");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else if (c == 'e' || c == 'E') {
      ++i;
      break;
    } else {
      throw std::invalid_argument("parse: bad character in magnitude");
    }
  }
  if (i <= text.size() && i > 0 && (text[i - 1] == 'e' || text[i - 1] == 'E')) {
    exp10 = std::stol(std::string(text.substr(i)));
  }
  // strip leading zeros, keep the value
  size_t nz = digits.find_first_not_of('0');
  if (nz == std::string::npos)
    throw std::invalid_argument("parse: magnitude must be positive");
  digits = digits.substr(nz);
  if (digits.size() > 17)
    throw std::invalid_argument("parse: more than 17 significant digits");
  u64 mant = 0;
  for (char c : digits) mant = mant * 10 + u64(c - '0');
  auto m = from_decimal(double(mant), exp10 - frac_digits);
  m.text_ = std::string(text);
  return m;
}

Interval PrimeMagnitude::sqrt() const {
  if (has_exact_value()) return Interval::exact(exact_).sqrt();
  return (log_ / Interval::exact(2.0)).exp();
}

Interval PrimeMagnitude::quarter_root() const {
  return (log_ / Interval::exact(4.0)).exp();
}

Interval PrimeMagnitude::cube_root() const {
  return (log_ / Interval::exact(3.0)).exp();
}

Interval PrimeMagnitude::value_interval() const {
  if (has_exact_value()) return Interval::exact(exact_);
  return log_.exp();
}

bool PrimeMagnitude::at_least(double threshold) const {
  if (has_exact_value()) return exact_ >= threshold;
  const Interval t = Interval::exact(threshold).log();
  if (log_.lo() >= t.hi()) return true;
  if (log_.hi() < t.lo()) return false;
  throw std::invalid_argument("PrimeMagnitude: threshold comparison at " +
                              std::to_string(threshold) +
                              " is indeterminate for " + text_);
}

std::string PrimeMagnitude::to_string() const { return text_; }

Interval BoundConstants::C() {
  return Interval::pi() * Interval::e() * Interval::sqrt6() /
         Interval::exact(3.0);
}

Interval BoundConstants::A() { return Interval::e() * Interval::e(); }

Interval BoundConstants::B() { return Interval::exact(0.25); }

double BoundConstants::canonical_A() { return std::exp(2.0); }

Interval f_of_x(const Interval& X) {
  if (X.lo() < 7.0)
    throw std::invalid_argument("f_of_x: requires X >= 7");
  const Interval one = Interval::exact(1.0);
  const Interval two = Interval::exact(2.0);
  const Interval sum = X.log() / (two * X) + one / X + one / (two * X * X);
  return one - Interval::pi() * Interval::pi() / Interval::exact(3.0) * sum;
}

Interval x_of_p(const PrimeMagnitude& p) {
  return BoundConstants::C() * p.quarter_root() /
         (Interval::exact(2.0) * BoundConstants::A());
}

Interval g_of_p(const PrimeMagnitude& p) {
  if (!p.at_least(5e4))
    throw std::invalid_argument("g_of_p: requires p >= 5*10^4");
  const Interval one = Interval::exact(1.0);
  const Interval f = f_of_x(x_of_p(p));
  return ((one / f) * (one + one / p.log())).sqrt();
}

Interval burgess_bound(const PrimeMagnitude& p) {
  return BoundConstants::C() * g_of_p(p) * p.quarter_root() * p.log();
}

Interval brauer_bound(const PrimeMagnitude& p) {
  if (!p.at_least(3.0))
    throw std::invalid_argument("brauer_bound: requires p >= 3");
  const Interval two = Interval::exact(2.0);
  if (p.has_exact_value())
    return (two * Interval::exact(p.exact_value())).sqrt() + two;
  return ((p.log() + two.log()) / two).exp() + two;
}

Interval prop1_prefactor(u64 h, const Interval& X) {
  const Interval fX = f_of_x(X);
  return Interval::exact(2.0) * Interval::pi() * Interval::from_u64(h) /
         (Interval::exact(3.0) * fX).sqrt();
}

Interval prop1_H_bound(const PrimeMagnitude& p, u64 h, u64 r,
                       const Interval& X) {
  if (h < 1 || r < 1)
    throw std::invalid_argument("prop1_H_bound: h, r must be positive");
  const Interval hh = Interval::from_u64(h);
  const Interval bracket =
      (Interval::from_u64(4 * r) / hh).pow_int(r) * p.sqrt() /
          (Interval::exact(4.0) * hh) +
      Interval::from_u64(2 * r - 1) / hh;
  return prop1_prefactor(h, X) * p.quarter_root() * bracket.sqrt();
}

Verdict logs_condition(double A, double B) {
  if (!(A > 0) || !(B > 0))
    throw std::invalid_argument("logs_condition: A, B must be positive");
  if (A == BoundConstants::canonical_A() && B == BoundConstants::canonical_B())
    return Verdict::kTrue;  // 4B exp(1/(2B)) = e^2 = A exactly
  const Interval ia = Interval::exact(A);
  const Interval ib = Interval::exact(B);
  const Interval rhs = Interval::exact(4.0) * ib *
                       (Interval::exact(1.0) / (Interval::exact(2.0) * ib)).exp();
  return certify_le(rhs, ia);
}

namespace {

u64 certified_floor(const Interval& x, const char* what) {
  const double flo = std::floor(x.lo());
  const double fhi = std::floor(x.hi());
  if (flo != fhi || flo < 0)
    throw std::runtime_error(std::string("certified_floor: ") + what +
                             " straddles an integer");
  return u64(flo);
}

}  // namespace

Schedule parameter_schedule(const PrimeMagnitude& p) {
  if (!p.at_least(5e4))
    throw std::invalid_argument("parameter_schedule: requires p >= 5*10^4");
  Schedule s;
  s.h = certified_floor(BoundConstants::A() * p.log(), "h = A log p");
  s.r = certified_floor(BoundConstants::B() * p.log(), "r = B log p");
  s.c_bound = BoundConstants::C() * p.quarter_root() * p.log();
  s.fourteen_h_le_c_bound =
      certify_le(Interval::from_u64(14 * s.h), s.c_bound);
  s.two_r_plus_one_le_h = 2 * s.r + 1 <= s.h;
  return s;
}

ChainCheck logs_chain(const PrimeMagnitude& p) {
  const Schedule s = parameter_schedule(p);
  ChainCheck c;
  c.h = s.h;
  c.r = s.r;
  const Interval hh = Interval::from_u64(s.h);
  c.lhs = (Interval::from_u64(4 * s.r) / hh).pow_int(s.r) /
          (Interval::exact(2.0) * hh);
  c.rhs = (BoundConstants::A() * p.sqrt() * p.log()).inv();
  c.holds = certify_le(c.lhs, c.rhs);
  const Interval premise_lhs =
      (Interval::exact(4.0) * BoundConstants::B() / BoundConstants::A())
          .pow_int(s.r);
  const Interval premise_rhs = (-(p.log()) / Interval::exact(2.0)).exp();
  c.premise = certify_le(premise_lhs, premise_rhs);
  return c;
}

ThresholdReport theorem2_report() {
  ThresholdReport rep;
  rep.c_enclosure = BoundConstants::C();
  const struct {
    const char* text;
    double mant;
    long exp;
    double constant;
  } cases[] = {
      {"5e4", 5.0, 4, 0.0},
      {"5e18", 5.0, 18, 7.06},
      {"5e55", 5.0, 55, 7.0},
  };
  for (const auto& cs : cases) {
    const auto p = PrimeMagnitude::from_decimal(cs.mant, cs.exp);
    ThresholdRow row;
    row.p_text = cs.text;
    row.constant = cs.constant;
    row.cg = BoundConstants::C() * g_of_p(p);
    row.verified = cs.constant > 0
                       ? certify_lt(row.cg, Interval::exact(cs.constant))
                       : Verdict::kIndeterminate;
    rep.rows.push_back(row);
  }
  // coarse certified grid for "g is decreasing": 256 log-spaced points
  const double lo = std::log(5e4), hi = std::log(1e60);
  const int n = 256;
  bool all = true;
  Interval prev = g_of_p(PrimeMagnitude::from_double(5e4));
  for (int i = 1; i <= n; ++i) {
    const double lp = lo + (hi - lo) * i / n;
    const Interval gi = g_of_p(PrimeMagnitude::from_double(std::exp(lp)));
    if (!(prev.lo() >= gi.hi() || (gi.hi() - prev.lo()) < 1e-12)) all = false;
    prev = gi;
  }
  rep.g_decreasing_on_grid = all ? Verdict::kTrue : Verdict::kFalse;
  return rep;
}

namespace {

Interval theorem3_ceiling(const PrimeMagnitude& p) {
  const Interval inner = Interval::exact(2.0) * BoundConstants::A() * p.log() -
                         Interval::exact(3.0);
  return (inner.log() / Interval::exact(3.0)).exp() * p.cube_root();
}

}  // namespace

GateResult corollary1_gate(const PrimeMagnitude& p, double H) {
  GateResult res;
  res.theorem3_ceiling = theorem3_ceiling(p);
  if (p.at_least(5e18)) {
    res.gate = TheoremGate::kTheorem2;
    res.bound = Interval::exact(7.06) * p.quarter_root() * p.log();
    return res;
  }
  if (p.at_least(5e4) &&
      certify_le(Interval::exact(H), res.theorem3_ceiling) == Verdict::kTrue) {
    res.gate = TheoremGate::kTheorem3;
    res.bound = burgess_bound(p);
    return res;
  }
  res.gate = TheoremGate::kNone;
  return res;
}

Verdict corollary1_chain_inequality(const PrimeMagnitude& p) {
  const Interval lhs = Interval::exact(7.06) * p.quarter_root() * p.log();
  const Interval rhs = theorem3_ceiling(p) - Interval::exact(1.0);
  return certify_lt(lhs, rhs);
}

BoundReport bound_report(const PrimeMagnitude& p) {
  BoundReport rep;
  rep.p = p;
  rep.brauer = brauer_bound(p);
  if (p.at_least(5e4)) {
    const Schedule s = parameter_schedule(p);
    rep.h = s.h;
    rep.r = s.r;
    rep.X = x_of_p(p);
    rep.f = f_of_x(rep.X);
    rep.g = g_of_p(p);
    rep.cg = BoundConstants::C() * rep.g;
    rep.burgess = burgess_bound(p);
    rep.schedule_ok = true;
  }
  return rep;
}

}  // namespace burgess::bounds
