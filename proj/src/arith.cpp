#include "burgess/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace burgess::arith {

u64 pow_mod(u64 base, u64 exp, u64 modulus) {
  if (modulus < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
  u64 result = 1;
  base %= modulus;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exp >>= 1;
  }
  return result;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(u64 p) : p_(p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("PrimeModulus: " + std::to_string(p) +
                                " is not an odd prime");
}

u64 Factorization::value() const {
  u64 n = 1;
  for (auto [p, k] : factors)
    for (u32 i = 0; i < k; ++i) n *= p;
  return n;
}

namespace {

constexpr u64 kTrialDivisionCutoff = 1'000'000;

// Brent's cycle-finding variant of Pollard rho.  n must be composite, odd
// and free of factors below the trial-division cutoff.
u64 pollard_brent(u64 n) {
  u64 seed = 0x9e3779b97f4a7c15ull ^ n;
  auto next_rand = [&seed]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  while (true) {
    u64 y = next_rand() % (n - 2) + 1;
    u64 c = next_rand() % (n - 1) + 1;
    u64 m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

void factor_recursive(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_recursive(d, out);
  factor_recursive(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
  std::vector<u64> primes;
  for (u64 d : {2ull, 3ull, 5ull}) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  }
  // 2-3-5 wheel up to the trial-division cutoff
  static constexpr int kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  int w = 0;
  for (u64 d = 7; d <= kTrialDivisionCutoff && d * d <= n;) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
    d += kWheel[w];
    w = (w + 1) & 7;
  }
  if (n > 1) factor_recursive(n, primes);
  std::sort(primes.begin(), primes.end());

  Factorization result;
  for (size_t i = 0; i < primes.size();) {
    size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    result.factors.emplace_back(primes[i], static_cast<u32>(j - i));
    i = j;
  }
  return result;
}

u64 primitive_root(const PrimeModulus& p) {
  const u64 pv = p.value();
  const Factorization f = factorize(pv - 1);
  for (u64 g = 2; g < pv; ++g) {
    bool ok = true;
    for (auto [q, k] : f.factors) {
      (void)k;
      if (pow_mod(g, (pv - 1) / q, pv) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: no generator found");
}

u64 discrete_log_in_subgroup(u64 gen, u64 y, u64 p, u64 order) {
  y %= p;
  if (y == 0) throw std::domain_error("discrete_log: no solution for y = 0");
  const u64 m = static_cast<u64>(std::ceil(std::sqrt(double(order))));
  std::unordered_map<u64, u64> baby;
  baby.reserve(m * 2);
  u64 cur = 1;
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = mul_mod(cur, gen, p);
  }
  // giant step multiplier gen^(-m) = gen^(order - m mod order)
  const u64 giant = pow_mod(gen, order - (m % order), p);
  cur = y;
  for (u64 i = 0; i * m < order + m; ++i) {
    auto it = baby.find(cur);
    if (it != baby.end()) {
      u64 k = i * m + it->second;
      if (k < order && pow_mod(gen, k, p) == y % p) return k;
    }
    cur = mul_mod(cur, giant, p);
  }
  throw std::domain_error("discrete_log: y not in the subgroup");
}

u64 discrete_log(u64 g, u64 y, const PrimeModulus& p) {
  return discrete_log_in_subgroup(g, y, p.value(), p.value() - 1);
}

int legendre(u64 a, const PrimeModulus& p) {
  const u64 pv = p.value();
  a %= pv;
  if (a == 0) return 0;
  const u64 t = pow_mod(a, (pv - 1) / 2, pv);
  return t == 1 ? 1 : -1;
}

ReducedFraction::ReducedFraction(i64 numerator, i64 denominator) {
  if (denominator == 0)
    throw std::invalid_argument("ReducedFraction: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const u64 g = std::gcd(numerator < 0 ? u64(-(numerator + 1)) + 1 : u64(numerator),
                         u64(denominator));
  num_ = numerator / i64(g);
  den_ = denominator / i64(g);
}

ReducedFraction ReducedFraction::from_i128(i128 numerator, i128 denominator) {
  if (denominator == 0)
    throw std::invalid_argument("ReducedFraction: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  i128 a = numerator < 0 ? -numerator : numerator;
  i128 b = denominator;
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  numerator /= a;
  denominator /= a;
  constexpr i128 kMax = std::numeric_limits<i64>::max();
  constexpr i128 kMin = std::numeric_limits<i64>::min();
  if (numerator > kMax || numerator < kMin || denominator > kMax)
    throw std::overflow_error("ReducedFraction: does not fit in 64 bits");
  ReducedFraction r;
  r.num_ = static_cast<i64>(numerator);
  r.den_ = static_cast<i64>(denominator);
  return r;
}

i64 ReducedFraction::floor() const {
  i64 q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string ReducedFraction::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace burgess::arith
