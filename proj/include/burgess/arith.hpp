#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burgess::arith {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// a*b mod m with a 128-bit intermediate product, valid for any m >= 1.
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((u128(a) * b) % m);
}

// base^exp mod modulus by binary exponentiation.  Throws on modulus < 2.
u64 pow_mod(u64 base, u64 exp, u64 modulus);

// Deterministic Miller-Rabin over the 12-base witness set
// {2,3,5,7,11,13,17,19,23,29,31,37}, correct for every 64-bit input.
bool is_prime(u64 n) noexcept;

// An odd prime modulus, validated at construction (p prime, p >= 3).
class PrimeModulus {
 public:
  explicit PrimeModulus(u64 p);
  u64 value() const { return p_; }

 private:
  u64 p_;
};

// Prime factorization, (prime, exponent) pairs in increasing prime order.
struct Factorization {
  std::vector<std::pair<u64, u32>> factors;

  // Product of prime^exponent; the integer that was factored.
  u64 value() const;
};

// Factors n >= 2 by trial division up to 10^6 and Pollard rho (Brent
// variant) for anything left over.
Factorization factorize(u64 n);

// Smallest g in [2, p-1] of multiplicative order p-1, certified against
// the prime factors of p-1.
u64 primitive_root(const PrimeModulus& p);

// Baby-step giant-step: k in [0, p-2] with g^k = y (mod p), where g is a
// primitive root.  O(sqrt(p)) time and space.  Throws domain_error when
// y = 0 (no solution).
u64 discrete_log(u64 g, u64 y, const PrimeModulus& p);

// BSGS inside the cyclic subgroup generated by gen, whose order must be
// the given one.  Returns k in [0, order) with gen^k = y (mod p).
u64 discrete_log_in_subgroup(u64 gen, u64 y, u64 p, u64 order);

// Legendre symbol by Euler's criterion a^((p-1)/2).
int legendre(u64 a, const PrimeModulus& p);

// A rational in lowest terms with positive denominator.  Arithmetic uses
// 128-bit intermediates and throws overflow_error when a result does not
// fit back into 64 bits.
class ReducedFraction {
 public:
  ReducedFraction() : num_(0), den_(1) {}
  ReducedFraction(i64 numerator, i64 denominator);

  // Constructs (num/den) from 128-bit intermediates, reducing first.
  static ReducedFraction from_i128(i128 numerator, i128 denominator);

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  i64 floor() const;
  double to_double() const { return double(num_) / double(den_); }

  friend bool operator==(const ReducedFraction& a, const ReducedFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const ReducedFraction& a, const ReducedFraction& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const ReducedFraction& a, const ReducedFraction& b) {
    return i128(a.num_) * b.den_ <= i128(b.num_) * a.den_;
  }

  std::string to_string() const;

 private:
  i64 num_;
  i64 den_;
};

}  // namespace burgess::arith
