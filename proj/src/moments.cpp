#include "burgess/moments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <thread>
#include <tuple>

namespace burgess::moments {

using arith::i128;
using arith::i64;
using arith::u128;
using arith::u32;
using characters::CharacterGroup;
using characters::CharValue;

namespace {

double pow_u128_to_double(u128 v) {
  return double(v);
}

// |W|^(2r) accumulation with W integer, for characters of order <= 2.
struct ExactAccumulator {
  u128 acc = 0;
  void add(i64 window, u64 r) {
    u128 w2 = u128(i128(window) * window);
    u128 term = 1;
    for (u64 i = 0; i < r; ++i) term *= w2;
    acc += term;
  }
};

constexpr int kRefreshPeriod = 4096;

}  // namespace

MomentResult moment(const Character& chi, MomentParams prm) {
  if (prm.h < 1 || prm.r < 1)
    throw std::invalid_argument("moment: h and r must be positive");
  const u64 p = chi.modulus();
  const u64 hr = prm.h % p;  // S(chi,h,r) = S(chi,h mod p,r)
  if (hr == 0) return {0.0, true, 0.0};

  if (chi.is_real()) {
    // values are -1, 0, +1; everything stays integral
    auto val = [&](u64 t) -> i64 {
      const auto k = chi.exponent_mod_order(t);
      if (!k) return 0;
      return *k == 0 ? 1 : -1;
    };
    i64 window = 0;
    for (u64 m = 1; m <= hr; ++m) window += val(m % p);
    ExactAccumulator acc;
    for (u64 x = 0; x < p; ++x) {
      acc.add(window, prm.r);
      window -= val((x + 1) % p);
      window += val((x + 1 + hr) % p);
    }
    const double value = pow_u128_to_double(acc.acc);
    if (acc.acc <= (u128(1) << 53)) return {value, true, 0.0};
    return {value, false, value * std::numeric_limits<double>::epsilon()};
  }

  // complex path: chi(x) = zeta_n^k looked up from a table of n-th roots
  const u64 n = chi.order();
  std::vector<std::complex<double>> roots;
  const bool table = n <= 65536;
  if (table) {
    roots.resize(n);
    for (u64 j = 0; j < n; ++j)
      roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * double(j) / double(n));
  }
  auto val = [&](u64 t) -> std::complex<double> {
    const auto k = chi.exponent_mod_order(t);
    if (!k) return {0.0, 0.0};
    if (table) return roots[*k];
    return std::polar(1.0, 2.0 * std::numbers::pi * double(*k) / double(n));
  };

  std::vector<std::complex<double>> ring(hr);
  std::complex<double> window = 0.0;
  for (u64 m = 1; m <= hr; ++m) {
    ring[m - 1] = val(m % p);
    window += ring[m - 1];
  }
  u64 head = 0;  // ring slot of the value at x+1
  double acc = 0.0;
  for (u64 x = 0; x < p; ++x) {
    const double nrm = std::norm(window);
    double term = nrm;
    for (u64 i = 1; i < prm.r; ++i) term *= nrm;
    acc += term;
    const std::complex<double> entering = val((x + 1 + hr) % p);
    window -= ring[head];
    window += entering;
    ring[head] = entering;
    head = head + 1 == hr ? 0 : head + 1;
    if ((x & (kRefreshPeriod - 1)) == kRefreshPeriod - 1) {
      window = 0.0;
      for (const auto& v : ring) window += v;
    }
  }
  const double abs_error = 4.0 * double(p) * double(hr) * double(prm.r) *
                           std::numeric_limits<double>::epsilon() *
                           std::max(acc, 1.0);
  return {acc, false, abs_error};
}

Interval moment_upper_bound(u64 p, MomentParams prm) {
  if (prm.h < 1 || prm.r < 1)
    throw std::invalid_argument("moment_upper_bound: h and r must be positive");
  const Interval h = Interval::from_u64(prm.h);
  const Interval term1 = Interval::exact(0.25) *
                         Interval::from_u64(4 * prm.r).pow_int(prm.r) *
                         Interval::from_u64(p) * h.pow_int(prm.r);
  const Interval term2 = Interval::from_u64(2 * prm.r - 1) *
                         Interval::from_u64(p).sqrt() * h.pow_int(2 * prm.r);
  const Interval sum = term1 + term2;
  if (!std::isfinite(sum.hi()))
    throw std::overflow_error(
        "moment_upper_bound: exceeds double range (use log space)");
  return sum;
}

namespace {

u64 checked_tuple_count(u64 h, u64 r, u64 budget) {
  u128 total = 1;
  for (u64 i = 0; i < 2 * r; ++i) {
    total *= h;
    if (total > budget)
      throw std::invalid_argument(
          "tuple enumeration exceeds the configured budget");
  }
  return u64(total);
}

// DFS over [1,h]^(2r) counting tuples where every chosen value occurs at
// least twice.  `singles` tracks values currently seen exactly once; a
// branch dies when they outnumber the remaining slots.
void repeated_tuples_dfs(u64 h, u64 slots_left, std::vector<u32>& count,
                         u64 singles, u64& out) {
  if (slots_left == 0) {
    if (singles == 0) ++out;
    return;
  }
  if (singles > slots_left) return;
  for (u64 v = 1; v <= h; ++v) {
    ++count[v];
    u64 s = singles;
    if (count[v] == 1) ++s;
    if (count[v] == 2) --s;
    repeated_tuples_dfs(h, slots_left - 1, count, s, out);
    --count[v];
  }
}

}  // namespace

u64 count_repeated_tuples(u64 h, u64 r, u64 budget) {
  if (h < 1 || r < 1)
    throw std::invalid_argument("count_repeated_tuples: h, r must be positive");
  checked_tuple_count(h, r, budget);
  std::vector<u32> count(h + 1, 0);
  u64 out = 0;
  repeated_tuples_dfs(h, 2 * r, count, 0, out);
  return out;
}

u64 count_nth_power_exceptions(const Character& chi, u64 h, u64 r,
                               u64 budget) {
  if (h < 1 || r < 1)
    throw std::invalid_argument(
        "count_nth_power_exceptions: h, r must be positive");
  checked_tuple_count(h, r, budget);
  const u64 p = chi.modulus();
  const u64 n = chi.order();
  // multiplicity contribution per slot: 1 for the first r, n-1 after
  std::vector<u64> m(2 * r, 1);
  u64 out = 0;
  std::map<u64, u64> mult;  // root (= -v mod p) -> total multiplicity
  while (true) {
    mult.clear();
    for (u64 i = 0; i < 2 * r; ++i)
      mult[(p - m[i] % p) % p] += (i < r) ? 1 : n - 1;
    bool exception = true;
    for (const auto& [root, t] : mult) {
      (void)root;
      if (t % n != 0) {
        exception = false;
        break;
      }
    }
    if (exception) ++out;
    // odometer
    u64 i = 0;
    while (i < 2 * r && m[i] == h) m[i++] = 1;
    if (i == 2 * r) break;
    ++m[i];
  }
  return out;
}

WeilCheckResult weil_check(const Character& chi,
                           const std::vector<std::pair<u64, u64>>& factors) {
  if (factors.empty())
    throw std::invalid_argument("weil_check: empty factor list");
  const u64 p = chi.modulus();
  const u64 n = chi.order();
  std::map<u64, u64> merged;  // shift c mod p -> multiplicity
  for (const auto& [c, mult] : factors) merged[c % p] += mult;
  bool all_divisible = true;
  for (const auto& [c, mult] : merged) {
    (void)c;
    if (mult % n != 0) all_divisible = false;
  }
  if (all_divisible)
    throw std::domain_error(
        "weil_check: f is an n-th power mod p; the bound does not apply");

  WeilCheckResult res;
  res.distinct_roots = merged.size();
  auto f_at = [&](u64 x) {
    u64 v = 1;
    for (const auto& [c, mult] : merged)
      v = arith::mul_mod(v, arith::pow_mod((x + c) % p, mult, p), p);
    return v;
  };
  if (chi.is_real()) {
    i64 sum = 0;
    for (u64 x = 0; x < p; ++x) {
      const auto k = chi.exponent_mod_order(f_at(x));
      if (k) sum += (*k == 0) ? 1 : -1;
    }
    res.magnitude = double(sum < 0 ? -sum : sum);
    res.exact = true;
  } else {
    std::complex<double> sum = 0.0;
    for (u64 x = 0; x < p; ++x) {
      const auto k = chi.exponent_mod_order(f_at(x));
      if (k)
        sum += std::polar(1.0, 2.0 * std::numbers::pi * double(*k) / double(n));
    }
    res.magnitude = std::abs(sum);
    res.exact = false;
  }
  const Interval bound = Interval::from_u64(res.distinct_roots - 1) *
                         Interval::from_u64(p).sqrt();
  res.bound_hi = bound.hi();
  const double tol = res.exact ? 0.0 : 1e-9 * double(p);
  res.ok = res.magnitude <= res.bound_hi + tol;
  return res;
}

namespace {

// Optimized per-prime sweep shared by verify_lemma2.  Builds the discrete
// log structure once, then walks every character with an incremental
// exponent (no division in the inner loop).
void sweep_prime(u64 p, u64 h_max, u64 r_max, Lemma2Summary& summary,
                 std::vector<Lemma2Case>* all_cases,
                 std::vector<Lemma2Case>& failures) {
  const auto group = CharacterGroup::make(p);
  const u64 g = group->generator();
  std::vector<u32> power(p - 1);  // power[k] = g^k mod p
  {
    u64 x = 1;
    for (u64 k = 0; k + 1 < p; ++k) {
      power[k] = u32(x);
      x = arith::mul_mod(x, g, p);
    }
  }
  std::vector<std::complex<double>> zr(p - 1);
  for (u64 j = 0; j + 1 < p; ++j)
    zr[j] = std::polar(1.0, 2.0 * std::numbers::pi * double(j) / double(p - 1));

  // per-(h, r) upper bounds are shared across characters
  std::vector<double> bound_hi(h_max * r_max);
  for (u64 h = 1; h <= h_max; ++h)
    for (u64 r = 1; r <= r_max; ++r)
      bound_hi[(h - 1) * r_max + (r - 1)] =
          moment_upper_bound(p, {h, r}).hi();

  std::vector<std::complex<double>> cval(p);
  std::vector<int> ival(p);
  std::vector<double> acc(r_max);
  const double eps = std::numeric_limits<double>::epsilon();

  for (u64 e = 1; e <= p - 2; ++e) {
    const u64 order = (p - 1) / std::gcd(e, p - 1);
    const bool real_path = order <= 2;
    if (real_path) {
      ival[0] = 0;
      u64 j = 0;
      for (u64 k = 0; k + 1 < p; ++k) {
        ival[power[k]] = (j == 0) ? 1 : -1;
        j += e;
        if (j >= p - 1) j -= p - 1;
      }
    } else {
      cval[0] = 0.0;
      u64 j = 0;
      for (u64 k = 0; k + 1 < p; ++k) {
        cval[power[k]] = zr[j];
        j += e;
        if (j >= p - 1) j -= p - 1;
      }
    }

    for (u64 h = 1; h <= h_max; ++h) {
      const u64 hr = h % p;
      std::vector<u128> iacc(r_max, 0);
      std::fill(acc.begin(), acc.end(), 0.0);
      if (hr != 0) {
        if (real_path) {
          i64 window = 0;
          for (u64 m = 1; m <= hr; ++m) window += ival[m % p];
          u64 leave = 1, enter = 1 + hr;
          if (enter >= p) enter -= p;
          for (u64 x = 0; x < p; ++x) {
            const u128 w2 = u128(i128(window) * window);
            u128 term = 1;
            for (u64 rr = 0; rr < r_max; ++rr) {
              term *= w2;
              iacc[rr] += term;
            }
            window += ival[enter] - ival[leave];
            if (++leave == p) leave = 0;
            if (++enter == p) enter = 0;
          }
          for (u64 rr = 0; rr < r_max; ++rr)
            acc[rr] = pow_u128_to_double(iacc[rr]);
        } else {
          std::complex<double> window = 0.0;
          for (u64 m = 1; m <= hr; ++m) window += cval[m % p];
          u64 leave = 1, enter = 1 + hr;
          if (enter >= p) enter -= p;
          u64 since_refresh = 0;
          for (u64 x = 0; x < p; ++x) {
            const double nrm = std::norm(window);
            double term = nrm;
            for (u64 rr = 0; rr < r_max; ++rr) {
              acc[rr] += term;
              term *= nrm;
            }
            window += cval[enter] - cval[leave];
            if (++leave == p) leave = 0;
            if (++enter == p) enter = 0;
            if (++since_refresh == kRefreshPeriod) {
              since_refresh = 0;
              window = 0.0;
              u64 t = leave;
              for (u64 m = 0; m < hr; ++m) {
                window += cval[t];
                if (++t == p) t = 0;
              }
            }
          }
        }
      }
      for (u64 r = 1; r <= r_max; ++r) {
        const double value = acc[r - 1];
        const double abs_error =
            real_path ? 0.0
                      : 4.0 * double(p) * double(hr) * double(r) * eps *
                            std::max(value, 1.0);
        const double bhi = bound_hi[(h - 1) * r_max + (r - 1)];
        ++summary.cases;
        Lemma2Case cs{p, e, h, r, value, abs_error, bhi};
        if (all_cases) all_cases->push_back(cs);
        if (value > bhi + abs_error) {
          ++summary.failures;
          failures.push_back(cs);
        }
      }
    }
  }
}

}  // namespace

Lemma2Summary verify_lemma2(
    u64 p_max, u64 h_max, u64 r_max, unsigned jobs,
    const std::function<void(const Lemma2Case&)>& case_sink) {
  if (h_max < 1 || r_max < 1)
    throw std::invalid_argument("verify_lemma2: h_max, r_max must be positive");
  if (p_max > 1'000'000)
    throw std::invalid_argument("verify_lemma2: p_max exceeds the sweep budget");
  if (p_max >= 3)
    moment_upper_bound(p_max, {h_max, r_max});  // overflow check up front
  std::vector<u64> primes;
  for (u64 p = 3; p <= p_max; p += 2)
    if (arith::is_prime(p)) primes.push_back(p);

  if (jobs == 0) jobs = 1;
  jobs = std::min(jobs, unsigned(std::max<size_t>(primes.size(), 1)));

  Lemma2Summary total;
  std::vector<std::vector<Lemma2Case>> cases_by_prime(
      case_sink ? primes.size() : 0);
  std::mutex merge_mutex;
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    Lemma2Summary local;
    std::vector<Lemma2Case> local_failures;
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= primes.size()) break;
      sweep_prime(primes[i], h_max, r_max, local,
                  case_sink ? &cases_by_prime[i] : nullptr, local_failures);
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    total.cases += local.cases;
    total.failures += local.failures;
    total.failed.insert(total.failed.end(), local_failures.begin(),
                        local_failures.end());
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(total.failed.begin(), total.failed.end(),
            [](const Lemma2Case& a, const Lemma2Case& b) {
              return std::tie(a.p, a.e, a.h, a.r) <
                     std::tie(b.p, b.e, b.h, b.r);
            });
  if (case_sink)
    for (const auto& v : cases_by_prime)
      for (const auto& c : v) case_sink(c);
  return total;
}

}  // namespace burgess::moments
