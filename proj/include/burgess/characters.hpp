#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "burgess/arith.hpp"

namespace burgess::characters {

using arith::i64;
using arith::u32;
using arith::u64;

// Exact value of a Dirichlet character: zero, or the root of unity
// e^(2*pi*i * j/d) stored as the reduced exponent j/d (0 <= j < d).
class CharValue {
 public:
  static CharValue zero() { return CharValue(); }
  static CharValue one() { return root_of_unity(0, 1); }
  static CharValue minus_one() { return root_of_unity(1, 2); }
  static CharValue root_of_unity(u64 j, u64 d);

  bool is_zero() const { return d_ == 0; }
  bool is_one() const { return d_ == 1; }

  // Exponent numerator/denominator; only meaningful for nonzero values.
  u64 num() const { return j_; }
  u64 den() const { return d_; }

  CharValue times(const CharValue& other) const;
  CharValue conjugate() const;
  CharValue pow(u64 k) const;
  std::complex<double> to_complex() const;

  friend bool operator==(const CharValue&, const CharValue&) = default;

 private:
  u64 j_ = 0;
  u64 d_ = 0;  // d_ == 0 encodes the zero value
};

struct GroupOptions {
  // Full discrete-log table is built when p is below this (O(1) character
  // evaluation, ~4 bytes per residue).
  u64 log_table_threshold = u64{1} << 24;
};

// Shared per-prime context: generator, factorization of p-1 and, for
// small p, the full discrete-log table.  Immutable once built.
class CharacterGroup {
 public:
  static std::shared_ptr<const CharacterGroup> make(u64 p,
                                                    GroupOptions opts = {});

  u64 modulus() const { return p_; }
  u64 generator() const { return g_; }
  const arith::Factorization& order_factors() const { return phi_factors_; }
  bool has_log_table() const { return !log_table_.empty(); }
  const std::vector<u32>& log_table() const { return log_table_; }

  // Discrete log of x base g; O(1) with the table, BSGS otherwise.
  u64 dlog(u64 x) const;

 private:
  CharacterGroup(u64 p, GroupOptions opts);
  u64 p_;
  u64 g_;
  arith::Factorization phi_factors_;
  std::vector<u32> log_table_;
};

enum class EvalStrategy { kAuto, kFullLogTable, kSubgroupLog };

// A non-principal Dirichlet character mod prime p, indexed by its
// exponent e on the canonical (smallest) primitive root g:
//   chi(g^k) = e^(2*pi*i * e*k/(p-1)).
class Character {
 public:
  u64 modulus() const { return group_->modulus(); }
  u64 index() const { return e_; }
  u64 order() const { return n_; }
  EvalStrategy strategy() const { return strategy_; }
  bool is_real() const { return n_ <= 2; }
  const std::shared_ptr<const CharacterGroup>& group() const { return group_; }

  CharValue eval(u64 x) const;
  CharValue eval_int(i64 x) const;

  // k in [0, order) with chi(x) = e^(2*pi*i*k/order); nullopt when p | x.
  std::optional<u64> exponent_mod_order(u64 x) const;

  Character conjugate() const;

 private:
  friend Character make_character(std::shared_ptr<const CharacterGroup>, u64,
                                  EvalStrategy);
  Character() = default;

  std::shared_ptr<const CharacterGroup> group_;
  u64 e_ = 0;        // index in [1, p-2]
  u64 n_ = 0;        // order, (p-1)/gcd(e, p-1)
  u64 e_reduced_ = 0;  // e / gcd(e, p-1), coprime to n
  u64 cofactor_ = 0;   // (p-1)/n
  u64 subgroup_gen_ = 0;  // g^((p-1)/n), order n
  EvalStrategy strategy_ = EvalStrategy::kAuto;
};

Character make_character(std::shared_ptr<const CharacterGroup> group, u64 e,
                         EvalStrategy strategy = EvalStrategy::kAuto);
Character make_character(u64 p, u64 e,
                         EvalStrategy strategy = EvalStrategy::kAuto,
                         GroupOptions opts = {});

// All p-2 non-principal characters mod p, indices e = 1..p-2, sharing one
// group context.  Rejects p above the exhaustive limit.
std::vector<Character> all_nonprincipal(u64 p, u64 exhaustive_limit = 10'000);

// Coset of x in C_p / C_p^k (d = gcd(k, p-1) cosets, index 0 = the k-th
// power residues).  nullopt when p | x.
std::optional<u64> kth_power_coset(u64 p, u64 k, u64 x, GroupOptions opts = {});
std::optional<u64> kth_power_coset(const CharacterGroup& group, u64 k, u64 x);

}  // namespace burgess::characters
