#include "burgess/runs.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <numeric>
#include <thread>

namespace burgess::runs {

using arith::u128;
using arith::u32;
using bounds::PrimeMagnitude;
using characters::CharacterGroup;

namespace {

// Bit-packed quadratic residue table for odd prime p: bit x set iff x is
// a nonzero QR.  Marks squares incrementally: x^2 = (x-1)^2 + 2x - 1,
// one conditional subtract instead of a division per step.
std::vector<u64> quadratic_residue_bits(u64 p) {
  std::vector<u64> bits((p + 63) / 64, 0);
  u64 sq = 0;
  for (u64 x = 1; x <= (p - 1) / 2; ++x) {
    sq += 2 * x - 1;  // sq = x^2 mod p; the increment is < p
    if (sq >= p) sq -= p;
    bits[sq >> 6] |= u64(1) << (sq & 63);
  }
  return bits;
}

void annotate(RunRecord& rec) {
  const auto pm = PrimeMagnitude::from_u64(rec.p);
  rec.brauer_hi = bounds::brauer_bound(pm).hi();
  // exact check: H <= sqrt(2p) + 2  <=>  H <= 2 or (H-2)^2 <= 2p
  rec.brauer_ok =
      rec.H <= 2 || u128(rec.H - 2) * (rec.H - 2) <= u128(2) * rec.p;
  if (rec.p >= 50'000) {
    rec.burgess = bounds::burgess_bound(pm);
    rec.burgess_ok_empirical = double(rec.H) < rec.burgess->lo();
    rec.burgess_applicable = rec.p >= 5'000'000'000'000'000'000ull;
  }
}

struct RawRun {
  u64 H = 0, N = 0;
  u64 value_key = 0;  // opaque per-character value tag for the best run
};

// Longest run of equal values over x = 1..p-1, values supplied as opaque
// keys by the callback; smallest N wins ties.
template <typename ValueAt>
RawRun longest_run(u64 p, ValueAt&& value_at) {
  RawRun best;
  u64 cur_len = 0, cur_start = 1, cur_key = 0;
  for (u64 x = 1; x < p; ++x) {
    const u64 key = value_at(x);
    if (cur_len > 0 && key == cur_key) {
      ++cur_len;
    } else {
      cur_key = key;
      cur_len = 1;
      cur_start = x;
    }
    if (cur_len > best.H) {
      best.H = cur_len;
      best.N = cur_start - 1;
      best.value_key = cur_key;
    }
  }
  return best;
}

}  // namespace

RunRecord max_constant_run(const Character& chi) {
  const u64 p = chi.modulus();
  const u64 n = chi.order();
  const RawRun raw =
      longest_run(p, [&](u64 x) { return *chi.exponent_mod_order(x); });
  RunRecord rec;
  rec.p = p;
  rec.e = chi.index();
  rec.order = n;
  rec.H = raw.H;
  rec.N = raw.N;
  rec.value = CharValue::root_of_unity(raw.value_key, n);
  annotate(rec);
  return rec;
}

RunRecord quadratic_max_run(u64 p) {
  arith::PrimeModulus pm(p);
  const auto bits = quadratic_residue_bits(p);
  const RawRun raw = longest_run(
      p, [&](u64 x) { return (bits[x >> 6] >> (x & 63)) & 1; });
  RunRecord rec;
  rec.p = p;
  rec.e = (p - 1) / 2;
  rec.order = 2;
  rec.H = raw.H;
  rec.N = raw.N;
  rec.value = raw.value_key ? CharValue::one() : CharValue::minus_one();
  annotate(rec);
  return rec;
}

RunRecord max_run_over_characters(u64 p, u64 char_budget) {
  if (p > char_budget)
    throw std::invalid_argument(
        "max_run_over_characters: p exceeds the exhaustive character budget");
  const auto group = CharacterGroup::make(p);
  RunRecord best;
  for (u64 e = 1; e <= p - 2; ++e) {
    const Character chi = characters::make_character(group, e);
    RunRecord rec = max_constant_run(chi);
    if (rec.H > best.H) best = rec;  // e ascending: first maximal e wins
  }
  return best;
}

namespace {

// Characters of order exactly k mod p: e = j (p-1)/k with gcd(j, k) = 1.
std::vector<u64> indices_of_order(u64 p, u64 k) {
  std::vector<u64> out;
  if (k < 2 || (p - 1) % k != 0) return out;
  const u64 step = (p - 1) / k;
  for (u64 j = 1; j < k; ++j)
    if (std::gcd(j, k) == 1) out.push_back(j * step);
  return out;
}

std::optional<RunRecord> scan_one_prime(u64 p, const ScanOptions& opts) {
  switch (opts.filter) {
    case OrderFilter::kQuadratic:
      return quadratic_max_run(p);
    case OrderFilter::kAll:
      return max_run_over_characters(p, opts.all_char_limit);
    case OrderFilter::kOrderK: {
      if (opts.k == 2) return quadratic_max_run(p);
      const auto indices = indices_of_order(p, opts.k);
      if (indices.empty()) return std::nullopt;  // k does not divide p-1
      const auto group = CharacterGroup::make(p);
      RunRecord best;
      for (u64 e : indices) {
        RunRecord rec =
            max_constant_run(characters::make_character(group, e));
        if (rec.H > best.H) best = rec;
      }
      return best;
    }
  }
  throw std::logic_error("scan_one_prime: bad filter");
}

}  // namespace

ScanSummary scan_primes(const ScanOptions& opts,
                        const std::function<void(const RunRecord&)>& sink) {
  if (opts.p_max < opts.p_min)
    throw std::invalid_argument("scan_primes: empty range");
  const u64 limit = opts.filter == OrderFilter::kQuadratic
                        ? opts.quad_sieve_limit
                        : opts.all_char_limit;
  if (opts.p_max > limit)
    throw std::invalid_argument("scan_primes: p_max exceeds the sieve limit");

  // simple sieve of Eratosthenes over [0, p_max]
  std::vector<bool> composite(opts.p_max + 1, false);
  for (u64 i = 2; i * i <= opts.p_max; ++i)
    if (!composite[i])
      for (u64 j = i * i; j <= opts.p_max; j += i) composite[j] = true;
  std::vector<u64> primes;
  for (u64 i = std::max<u64>(3, opts.p_min); i <= opts.p_max; ++i)
    if (!composite[i]) primes.push_back(i);

  ScanSummary summary;
  const unsigned jobs =
      std::max(1u, std::min(opts.jobs, unsigned(primes.size() ? primes.size() : 1)));

  // workers fill fixed-size blocks; blocks are emitted strictly in order
  constexpr size_t kBlock = 1024;
  const size_t nblocks = (primes.size() + kBlock - 1) / kBlock;
  std::vector<std::vector<RunRecord>> done(nblocks);
  std::vector<bool> ready(nblocks, false);
  std::atomic<size_t> next_block{0};
  size_t emitted = 0;
  std::mutex m;
  std::condition_variable cv;

  auto worker = [&]() {
    while (true) {
      const size_t blk = next_block.fetch_add(1);
      if (blk >= nblocks) break;
      {
        // backpressure: stay within a bounded window of the emitter
        std::unique_lock<std::mutex> lock(m);
        cv.wait(lock, [&] { return blk < emitted + jobs * 4 + 4; });
      }
      std::vector<RunRecord> block;
      const size_t begin = blk * kBlock;
      const size_t end = std::min(begin + kBlock, primes.size());
      block.reserve(end - begin);
      for (size_t i = begin; i < end; ++i)
        if (auto rec = scan_one_prime(primes[i], opts)) block.push_back(*rec);
      {
        std::lock_guard<std::mutex> lock(m);
        done[blk] = std::move(block);
        ready[blk] = true;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);

  u64 best_H = 0;
  while (emitted < nblocks) {
    std::unique_lock<std::mutex> lock(m);
    cv.wait(lock, [&] { return ready[emitted]; });
    std::vector<RunRecord> block = std::move(done[emitted]);
    done[emitted].clear();
    ++emitted;
    lock.unlock();
    cv.notify_all();
    for (const auto& rec : block) {
      ++summary.primes;
      if (!rec.brauer_ok) ++summary.brauer_violations;
      if (rec.burgess) {
        ++summary.burgess_checked;
        if (!rec.burgess_ok_empirical) ++summary.burgess_violations;
      }
      if (rec.H > best_H) {
        best_H = rec.H;
        summary.records.push_back(rec);
      }
      if (sink) sink(rec);
    }
  }
  for (auto& t : pool) t.join();
  return summary;
}

namespace {

// Largest feasible prime floor: any qualifying run needs
// H^3 <= (2 floor(H/14) - 1) p with H >= min_run.
u64 witness_prime_floor(u64 min_run) {
  u64 best = ~u64(0);
  for (u64 h = 1; h <= min_run / 14 + 4; ++h) {
    const u64 H = std::max(min_run, 14 * h);
    if (H / 14 != h) continue;
    const u64 need = u64((u128(H) * H * H + (2 * h - 2)) / (2 * h - 1));
    best = std::min(best, need);
  }
  return best;
}

// Feasible sub-run (smallest usable length) of a maximal run of length
// max_H: smallest Hc in [min_run, max_H] with Hc^3 <= (2 floor(Hc/14)-1) p.
std::optional<u64> feasible_subrun(u64 p, u64 max_H, u64 min_run) {
  for (u64 Hc = min_run; Hc <= max_H; ++Hc) {
    const u64 h = Hc / 14;
    if (h < 1) continue;
    if (u128(Hc) * Hc * Hc <= u128(2 * h - 1) * p) return Hc;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Prop1Witness> find_prop1_witness(u64 min_run, u64 p_limit,
                                               u64 all_char_limit) {
  if (min_run < 14)
    throw std::invalid_argument("find_prop1_witness: min_run must be >= 14");
  const u64 floor_p = witness_prime_floor(min_run);
  for (u64 p = floor_p | 1; p <= p_limit; p += 2) {
    if (!arith::is_prime(p)) continue;
    // quadratic character first
    {
      const RunRecord rec = quadratic_max_run(p);
      if (rec.H >= min_run) {
        if (const auto Hc = feasible_subrun(p, rec.H, min_run))
          return Prop1Witness{p, rec.e, rec.N, *Hc, *Hc / 14};
      }
    }
    if (p > all_char_limit) continue;
    const auto group = CharacterGroup::make(p);
    for (u64 e = 1; e <= p - 2; ++e) {
      if (e == (p - 1) / 2) continue;  // already tried
      const RunRecord rec =
          max_constant_run(characters::make_character(group, e));
      if (rec.H >= min_run) {
        if (const auto Hc = feasible_subrun(p, rec.H, min_run))
          return Prop1Witness{p, e, rec.N, *Hc, *Hc / 14};
      }
    }
  }
  return std::nullopt;
}

}  // namespace burgess::runs
