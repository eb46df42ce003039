#include "tsrforge/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tsrforge/error.hpp"

namespace tsrforge {
namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kTrialBound = 1'000'000;
constexpr int kRhoRetries = 64;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's variant; returns a nontrivial factor of composite n or 0 on cycle failure.
std::uint64_t brent(std::uint64_t n, std::uint64_t offset) {
  if (n % 2 == 0) return 2;
  constexpr std::uint64_t kBatch = 128;
  std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1, r = 1;
  auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + offset) % n; };
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += kBatch;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

void split(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (int attempt = 0; attempt < kRhoRetries; ++attempt) {
    std::uint64_t d = brent(n, 1 + static_cast<std::uint64_t>(attempt));
    if (d != 0 && d != n) {
      split(d, out);
      split(n / d, out);
      return;
    }
  }
  fail(ErrorKind::FactorizationFailed, "Pollard rho gave up on " + std::to_string(n));
}

}  // namespace

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size());
  for (const auto& pp : factors) out.push_back(pp.prime);
  return out;
}

BigInt Factorization::product() const {
  BigInt r = 1;
  for (const auto& pp : factors) r *= boost::multiprecision::pow(BigInt(pp.prime), pp.exponent);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

Factorization factor_integer(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::FactorizationOverflow, "cannot factor 0");
  Factorization result{BigInt(n), {}};
  std::map<std::uint64_t, unsigned> found;
  for (std::uint32_t p : small_primes()) {
    if (static_cast<u128>(p) * p > n) break;
    while (n % p == 0) {
      n /= p;
      ++found[p];
    }
  }
  if (n > 1) {
    if (n <= static_cast<std::uint64_t>(kTrialBound) * kTrialBound) {
      ++found[n];  // no factor below 10^6, so n itself is prime
    } else {
      split(n, found);
    }
  }
  for (auto [p, e] : found) result.factors.push_back({p, e});
  return result;
}

Factorization factor_integer(const BigInt& n) {
  const BigInt two64 = BigInt(1) << 64;
  if (n > two64) fail(ErrorKind::FactorizationOverflow, "n = " + n.str() + " exceeds 2^64");
  if (n == two64) return {two64, {{2, 64}}};
  if (n < 1) fail(ErrorKind::FactorizationOverflow, "cannot factor " + n.str());
  return factor_integer(n.convert_to<std::uint64_t>());
}

BigInt euler_phi(const Factorization& f) {
  BigInt r = 1;
  for (const auto& pp : f.factors) {
    r *= BigInt(pp.prime - 1) * boost::multiprecision::pow(BigInt(pp.prime), pp.exponent - 1);
  }
  return r;
}

std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factor_cache().get(n)).convert_to<std::uint64_t>(); }

int mobius(std::uint64_t n) {
  const auto f = factor_cache().get(n);
  for (const auto& pp : f.factors) {
    if (pp.exponent > 1) return 0;
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : factor_cache().get(n).factors) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 0; e < pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Factorization FactorCache::get(std::uint64_t n) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(n); it != entries_.end()) return it->second;
  }
  Factorization f = factor_integer(n);
  std::unique_lock lock(mutex_);
  return entries_.try_emplace(n, std::move(f)).first->second;
}

FactorCache& factor_cache() {
  static FactorCache cache;
  return cache;
}

}  // namespace tsrforge
