#include "burgess/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace burgess::characters {

CharValue CharValue::root_of_unity(u64 j, u64 d) {
  if (d == 0) throw std::invalid_argument("CharValue: zero order");
  j %= d;
  const u64 g = std::gcd(j, d);
  CharValue v;
  v.j_ = j / g;
  v.d_ = d / g;
  return v;
}

CharValue CharValue::times(const CharValue& other) const {
  if (is_zero() || other.is_zero()) return zero();
  // j1/d1 + j2/d2 mod 1 over the common denominator
  const u64 d = d_ / std::gcd(d_, other.d_) * other.d_;
  const u64 j = j_ * (d / d_) + other.j_ * (d / other.d_);
  return root_of_unity(j, d);
}

CharValue CharValue::conjugate() const {
  if (is_zero()) return zero();
  return root_of_unity(d_ - j_, d_);
}

CharValue CharValue::pow(u64 k) const {
  if (is_zero()) return zero();
  return root_of_unity(arith::mul_mod(j_, k % d_, d_), d_);
}

std::complex<double> CharValue::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * double(j_) / double(d_);
  return {std::cos(angle), std::sin(angle)};
}

CharacterGroup::CharacterGroup(u64 p, GroupOptions opts) : p_(p) {
  arith::PrimeModulus pm(p);
  g_ = arith::primitive_root(pm);
  phi_factors_ = arith::factorize(p - 1);
  if (p < std::min(opts.log_table_threshold, u64{1} << 32)) {
    log_table_.assign(p, 0);
    u64 x = 1;
    for (u64 k = 0; k + 1 < p; ++k) {
      log_table_[x] = static_cast<u32>(k);
      x = arith::mul_mod(x, g_, p);
    }
  }
}

std::shared_ptr<const CharacterGroup> CharacterGroup::make(u64 p,
                                                           GroupOptions opts) {
  return std::shared_ptr<const CharacterGroup>(new CharacterGroup(p, opts));
}

u64 CharacterGroup::dlog(u64 x) const {
  x %= p_;
  if (x == 0) throw std::domain_error("dlog: x divisible by p");
  if (!log_table_.empty()) return log_table_[x];
  return arith::discrete_log_in_subgroup(g_, x, p_, p_ - 1);
}

Character make_character(std::shared_ptr<const CharacterGroup> group, u64 e,
                         EvalStrategy strategy) {
  const u64 p = group->modulus();
  if (e < 1 || e > p - 2)
    throw std::invalid_argument(
        "make_character: index must lie in [1, p-2] (e=0 is principal)");
  Character chi;
  chi.group_ = std::move(group);
  chi.e_ = e;
  const u64 g = std::gcd(e, p - 1);
  chi.n_ = (p - 1) / g;
  chi.e_reduced_ = e / g;
  chi.cofactor_ = g;
  chi.subgroup_gen_ = arith::pow_mod(chi.group_->generator(), g, p);
  if (strategy == EvalStrategy::kAuto)
    strategy = chi.group_->has_log_table() ? EvalStrategy::kFullLogTable
                                           : EvalStrategy::kSubgroupLog;
  if (strategy == EvalStrategy::kFullLogTable && !chi.group_->has_log_table())
    throw std::invalid_argument("make_character: no log table for this p");
  chi.strategy_ = strategy;
  return chi;
}

Character make_character(u64 p, u64 e, EvalStrategy strategy,
                         GroupOptions opts) {
  return make_character(CharacterGroup::make(p, opts), e, strategy);
}

std::optional<u64> Character::exponent_mod_order(u64 x) const {
  const u64 p = group_->modulus();
  x %= p;
  if (x == 0) return std::nullopt;
  if (strategy_ == EvalStrategy::kFullLogTable) {
    const u64 k = group_->log_table()[x];
    // chi(x) = zeta_{p-1}^{e k}; e k is a multiple of (p-1)/n
    return arith::mul_mod(e_, k, p - 1) / cofactor_;
  }
  // subgroup route: x^((p-1)/n) lands in <g^((p-1)/n)> of order n
  const u64 y = arith::pow_mod(x, cofactor_, p);
  const u64 s = arith::discrete_log_in_subgroup(subgroup_gen_, y, p, n_);
  return arith::mul_mod(e_reduced_, s, n_);
}

CharValue Character::eval(u64 x) const {
  const auto k = exponent_mod_order(x);
  if (!k) return CharValue::zero();
  return CharValue::root_of_unity(*k, n_);
}

CharValue Character::eval_int(i64 x) const {
  const u64 p = group_->modulus();
  i64 r = x % i64(p);
  if (r < 0) r += i64(p);
  return eval(u64(r));
}

Character Character::conjugate() const {
  const u64 p = group_->modulus();
  return make_character(group_, p - 1 - e_, strategy_);
}

std::vector<Character> all_nonprincipal(u64 p, u64 exhaustive_limit) {
  if (p > exhaustive_limit)
    throw std::invalid_argument(
        "all_nonprincipal: p exceeds the exhaustive character limit");
  auto group = CharacterGroup::make(p);
  std::vector<Character> out;
  out.reserve(p - 2);
  for (u64 e = 1; e <= p - 2; ++e) out.push_back(make_character(group, e));
  return out;
}

std::optional<u64> kth_power_coset(const CharacterGroup& group, u64 k, u64 x) {
  if (k < 2) throw std::invalid_argument("kth_power_coset: k must be >= 2");
  const u64 p = group.modulus();
  x %= p;
  if (x == 0) return std::nullopt;
  const u64 d = std::gcd(k, p - 1);
  return group.dlog(x) % d;
}

std::optional<u64> kth_power_coset(u64 p, u64 k, u64 x, GroupOptions opts) {
  return kth_power_coset(*CharacterGroup::make(p, opts), k, x);
}

}  // namespace burgess::characters
