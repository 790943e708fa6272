#include "chebdyn/factorize.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>

#include "chebdyn/error.hpp"

namespace chebdyn {
namespace {

class SieveCache {
 public:
  // Snapshot holding at least every prime <= limit; extension swaps in a
  // new vector so outstanding snapshots stay valid.
  std::shared_ptr<const std::vector<std::uint32_t>> snapshot(std::uint32_t limit) {
    std::lock_guard lock(mutex_);
    if (!primes_ || limit > sieved_to_) extend(limit);
    return primes_;
  }

 private:
  void extend(std::uint32_t limit) {
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    auto primes = std::make_shared<std::vector<std::uint32_t>>();
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes->push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    primes_ = std::move(primes);
    sieved_to_ = limit;
  }

  std::mutex mutex_;
  std::shared_ptr<const std::vector<std::uint32_t>> primes_;
  std::uint32_t sieved_to_ = 0;
};

SieveCache& sieve() {
  static SieveCache cache;
  return cache;
}

// Product of all primes <= limit, cached per limit.
std::shared_ptr<const BigInt> primorial(std::uint32_t limit) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const BigInt>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[limit];
  if (!slot) {
    auto value = std::make_shared<BigInt>();
    mpz_primorial_ui(value->get_mpz_t(), limit);
    slot = std::move(value);
  }
  return slot;
}

// Above this size one gcd against the primorial beats per-prime division.
constexpr std::size_t kPrimorialBits = 512;

bool miller_rabin_witness(const BigInt& n, const BigInt& d, unsigned s, unsigned long base) {
  BigInt a = base;
  a %= n;
  if (a == 0) return false;
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  BigInt n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return false;
  }
  return true;
}

const BigInt& deterministic_mr_bound() {
  // 3317044064679887385961981: the first 13 primes decide every n below it.
  static const BigInt bound("3317044064679887385961981", 10);
  return bound;
}

BigInt brent_rho(const BigInt& n, std::mt19937_64& rng, const FactorBudget& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  constexpr std::uint64_t kBatch = 128;
  for (unsigned attempt = 0; attempt < budget.rho_attempts; ++attempt) {
    BigInt c = BigInt(static_cast<unsigned long>(rng() >> 1)) % (n - 3) + 1;
    BigInt y = BigInt(static_cast<unsigned long>(rng() >> 1)) % n;
    BigInt x, ys, q = 1, g = 1, diff;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      v %= n;
    };
    std::uint64_t used = 0;
    std::uint64_t r = 1;
    while (g == 1 && used < budget.rho_steps) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      used += r;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          diff = x - y;
          q = (q * diff) % n;
        }
        used += lim;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (g == 1) continue;  // out of steps
    if (g == n) {
      // Backtrack one step at a time from the last checkpoint.
      do {
        step(ys);
        diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

// (r, k) with r^k == n and k >= 2 maximal-first, if n is a perfect power.
std::optional<std::pair<BigInt, unsigned>> perfect_power_root(const BigInt& n) {
  if (!mpz_perfect_power_p(n.get_mpz_t())) return std::nullopt;
  auto bits = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
  BigInt root;
  for (unsigned k = bits; k >= 2; --k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return std::make_pair(root, k);
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  auto primes = sieve().snapshot(limit);
  return {primes->begin(), std::upper_bound(primes->begin(), primes->end(), limit)};
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < deterministic_mr_bound()) {
    BigInt d = n - 1;
    unsigned s = static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long base : kBases) {
      if (miller_rabin_witness(n, d, s, base)) return false;
    }
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

bool Factorization::complete() const {
  return std::all_of(factors.begin(), factors.end(), [](const Factor& f) { return f.prime; });
}

BigInt Factorization::product() const {
  BigInt out = sign;
  BigInt pw;
  for (const auto& f : factors) {
    mpz_pow_ui(pw.get_mpz_t(), f.value.get_mpz_t(), f.exponent);
    out *= pw;
  }
  return out;
}

std::vector<BigInt> Factorization::primes() const {
  std::vector<BigInt> out;
  for (const auto& f : factors) {
    if (f.prime) out.push_back(f.value);
  }
  return out;
}

unsigned Factorization::exponent_of(const BigInt& p) const {
  for (const auto& f : factors) {
    if (f.value == p) return f.exponent;
  }
  return 0;
}

Factorization factorize(const BigInt& n, const FactorBudget& budget) {
  if (sgn(n) == 0) throw DomainError("cannot factor zero");
  Factorization out;
  out.sign = sgn(n) < 0 ? -1 : 1;
  BigInt m = ::abs(n);

  std::map<BigInt, std::pair<unsigned, bool>> acc;
  auto primes = sieve().snapshot(budget.trial_limit);
  // The small primes of a large m all divide g; testing them against g is cheap.
  const bool large = budget.trial_limit >= 2 && mpz_sizeinbase(m.get_mpz_t(), 2) > kPrimorialBits;
  BigInt g;
  if (large) {
    mpz_mod(g.get_mpz_t(), primorial(budget.trial_limit)->get_mpz_t(), m.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
  }
  const BigInt& probe = large ? g : m;
  BigInt pz;
  for (std::uint32_t p : *primes) {
    if (p > budget.trial_limit || probe == 1) break;
    if (mpz_divisible_ui_p(probe.get_mpz_t(), p)) {
      pz = p;
      auto e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
      if (large) mpz_divexact_ui(g.get_mpz_t(), g.get_mpz_t(), p);
      acc[pz] = {static_cast<unsigned>(e), true};
    }
    // Once p^2 > m the remainder is 1 or prime.
    if (mpz_cmp_ui(m.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
  }

  std::mt19937_64 rng(budget.seed);
  std::vector<BigInt> pending;
  if (m != 1) pending.push_back(m);
  BigInt trial_sq = BigInt(budget.trial_limit) * budget.trial_limit;
  while (!pending.empty()) {
    BigInt f = pending.back();
    pending.pop_back();
    if (f == 1) continue;
    // Every prime up to trial_limit has already been divided out.
    bool prime = f <= trial_sq || is_prime(f);
    if (!prime) {
      if (auto root = perfect_power_root(f)) {
        for (unsigned i = 0; i < root->second; ++i) pending.push_back(root->first);
        continue;
      }
      BigInt d = brent_rho(f, rng, budget);
      if (d != 0) {
        pending.push_back(d);
        pending.push_back(f / d);
        continue;
      }
    }
    auto& slot = acc[f];
    slot.first += 1;
    slot.second = prime;
  }

  for (auto& [value, info] : acc) {
    out.factors.push_back(Factor{value, info.first, info.second});
  }
  return out;
}

}  // namespace chebdyn
