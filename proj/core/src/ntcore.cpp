#include "sunitcount/ntcore.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "sunitcount/errors.hpp"

namespace sunit {

Integer pow_ui(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Integer binomial(uint64_t n, uint64_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

double log_abs(const Integer& x) {
  // x = d * 2^e with 0.5 <= |d| < 1, exact for any magnitude
  signed long e = 0;
  double d = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0);
}

uint64_t to_u64(const Integer& x) {
  if (x < 0 || !x.fits_ulong_p()) {
    throw std::overflow_error("to_u64: value out of range");
  }
  return mpz_get_ui(x.get_mpz_t());
}

PrimeList sieve_primes(uint64_t bound) {
  if (bound < 2) {
    throw std::domain_error("sieve_primes: no primes below 2 (bound must be >= 2)");
  }
  std::vector<bool> composite(bound + 1, false);
  PrimeList out;
  out.bound = bound;
  for (uint64_t n = 2; n <= bound; ++n) {
    if (composite[n]) continue;
    out.primes.push_back(n);
    for (uint64_t m = n * n; m <= bound; m += n) composite[m] = true;
  }
  return out;
}

uint64_t prime_pi(uint64_t bound) {
  if (bound < 2) return 0;
  return sieve_primes(bound).count();
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n <= 1'000'000'000'000ULL) {
    for (uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }
  Integer z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 32) > 0;
}

uint64_t ord_p(const Integer& n, const Integer& p) {
  if (n == 0) throw std::domain_error("ord_p: valuation of 0 is undefined");
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0) {
    throw std::invalid_argument("ord_p: p must be prime");
  }
  Integer reduced;
  return mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

namespace {

std::mutex g_sieve_mutex;
std::shared_ptr<const PrimeList> g_sieve_cache;

// Snapshot of a cached sieve covering at least `bound`.
std::shared_ptr<const PrimeList> trial_primes(uint64_t bound) {
  std::scoped_lock lock(g_sieve_mutex);
  if (!g_sieve_cache || g_sieve_cache->bound < bound) {
    uint64_t target = std::max<uint64_t>(bound, 1024);
    g_sieve_cache = std::make_shared<const PrimeList>(sieve_primes(target));
  }
  return g_sieve_cache;
}

}  // namespace

std::vector<std::pair<Integer, uint32_t>> factorize(const Integer& n) {
  static const Integer kDefaultLimit = Integer("1000000000000");
  return factorize(n, kDefaultLimit);
}

std::vector<std::pair<Integer, uint32_t>> factorize(const Integer& n, const Integer& limit) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  if (n > limit) {
    throw GuardLimitError("factorize: n exceeds the trial-division limit " + limit.get_str());
  }
  std::vector<std::pair<Integer, uint32_t>> factors;
  if (n == 1) return factors;

  Integer m = n;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
  auto primes = trial_primes(to_u64(root));
  for (uint64_t p : primes->primes) {
    Integer pz(static_cast<unsigned long>(p));
    if (pz * pz > m) break;
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    uint32_t e = static_cast<uint32_t>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t()));
    factors.emplace_back(pz, e);
  }
  if (m > 1) factors.emplace_back(m, 1);  // leftover cofactor is prime
  return factors;
}

Integer rad(const Integer& n) {
  Integer out = 1;
  for (const auto& [p, e] : factorize(n)) out *= p;
  return out;
}

uint32_t omega(const Integer& n) {
  return static_cast<uint32_t>(factorize(n).size());
}

double height(const Rational& alpha) {
  if (alpha == 0) throw std::domain_error("height: undefined for 0");
  Rational reduced = alpha;
  reduced.canonicalize();
  Integer num = abs(reduced.get_num());
  Integer den = reduced.get_den();
  return log_abs(num >= den ? num : den);
}

}  // namespace sunit
