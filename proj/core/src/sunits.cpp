#include "sunitcount/sunits.hpp"

#include <algorithm>
#include <stdexcept>

#include "sunitcount/errors.hpp"
#include "sunitcount/ntcore.hpp"

namespace sunit {

PrimeSet PrimeSet::make(std::vector<uint64_t> primes) {
  if (primes.empty()) throw std::invalid_argument("PrimeSet: must contain at least one prime");
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
    throw std::invalid_argument("PrimeSet: duplicate entries");
  }
  for (uint64_t p : primes) {
    if (!is_prime(p)) {
      throw std::invalid_argument("PrimeSet: " + std::to_string(p) + " is not prime");
    }
  }
  return PrimeSet(std::move(primes));
}

std::optional<size_t> PrimeSet::index_of(uint64_t p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return std::nullopt;
  return static_cast<size_t>(it - primes_.begin());
}

bool PrimeSet::coprime_to(const Integer& n) const {
  for (uint64_t p : primes_) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  return true;
}

DeltaBound DeltaBound::make(const Integer& num, const Integer& den) {
  if (den < 1) throw std::invalid_argument("DeltaBound: denominator must be positive");
  if (num < 0 || num > den) throw std::invalid_argument("DeltaBound: must lie in [0, 1]");
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g == 0) g = 1;  // num == 0
  Integer n = num / g, d = den / g;
  if (n == 0) d = 1;
  return DeltaBound(std::move(n), std::move(d));
}

DeltaBound DeltaBound::parse(const std::string& text) {
  if (text.find('.') != std::string::npos) {
    throw std::invalid_argument("DeltaBound: expected an exact rational p/q, got a decimal");
  }
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return make(Integer(text), 1);
    }
    return make(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("DeltaBound: cannot parse '" + text + "'");
  }
}

std::string DeltaBound::str() const {
  return num_.get_str() + "/" + den_.get_str();
}

namespace {

void enumerate_rec(const std::vector<uint64_t>& primes, const Integer& cap,
                   std::optional<uint32_t> exp_cap, std::optional<uint64_t> max_values,
                   size_t idx, const Integer& value, std::vector<uint32_t>& exps,
                   std::vector<SUnitValue>& out) {
  if (idx == 0) {
    if (max_values && out.size() >= *max_values) {
      throw GuardLimitError("enumerate_sunits: more than " + std::to_string(*max_values) +
                            " values below the cap");
    }
    out.push_back(SUnitValue{value, exps});
    return;
  }
  // descending prime order: idx-1 is the prime handled at this level
  size_t i = idx - 1;
  Integer v = value;
  uint32_t k = 0;
  while (true) {
    exps[i] = k;
    enumerate_rec(primes, cap, exp_cap, max_values, i, v, exps, out);
    if (exp_cap && k == *exp_cap) break;
    v *= static_cast<unsigned long>(primes[i]);
    if (v > cap) break;
    ++k;
  }
  exps[i] = 0;
}

}  // namespace

std::vector<SUnitValue> enumerate_sunits(const PrimeSet& S, const Integer& height_cap,
                                         std::optional<uint32_t> exponent_cap,
                                         std::optional<uint64_t> max_values) {
  if (height_cap < 1) throw std::invalid_argument("enumerate_sunits: height cap must be >= 1");
  std::vector<SUnitValue> out;
  std::vector<uint32_t> exps(S.size(), 0);
  enumerate_rec(S.primes(), height_cap, exponent_cap, max_values, S.size(), Integer(1), exps,
                out);
  std::sort(out.begin(), out.end(),
            [](const SUnitValue& a, const SUnitValue& b) { return a.value < b.value; });
  return out;
}

std::optional<std::vector<uint32_t>> sunit_exponents(const Integer& n, const PrimeSet& S) {
  if (n < 1) throw std::invalid_argument("sunit_exponents: n must be >= 1");
  std::vector<uint32_t> exps(S.size(), 0);
  Integer m = n;
  for (size_t i = 0; i < S.size(); ++i) {
    Integer p(static_cast<unsigned long>(S.primes()[i]));
    exps[i] = static_cast<uint32_t>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
  }
  if (m != 1) return std::nullopt;
  return exps;
}

bool delta_le(const Integer& v, const Integer& u, const DeltaBound& delta) {
  if (v < 1 || u < 1) throw std::invalid_argument("delta_le: u, v must be >= 1");
  if (delta.is_one()) return v <= u;
  if (delta.is_zero()) return v == 1;  // v <= u^0 = 1 with v >= 1
  if (v == 1) return true;
  if (u == 1) return false;  // v >= 2 > 1 = u^p

  const Integer& p = delta.num();
  const Integer& q = delta.den();
  // 2^(bits-1) <= x < 2^bits; compare exponent windows before powering
  Integer bits_v(static_cast<unsigned long>(mpz_sizeinbase(v.get_mpz_t(), 2)));
  Integer bits_u(static_cast<unsigned long>(mpz_sizeinbase(u.get_mpz_t(), 2)));
  if (q * (bits_v - 1) >= p * bits_u) return false;  // v^q >= 2^(q(bits_v-1)) > u^p
  if (q * bits_v <= p * (bits_u - 1)) return true;   // v^q < 2^(q bits_v) <= u^p

  if (!p.fits_ulong_p() || !q.fits_ulong_p()) {
    throw std::overflow_error("delta_le: exponents too large for exact comparison");
  }
  Integer lhs = pow_ui(v, mpz_get_ui(q.get_mpz_t()));
  Integer rhs = pow_ui(u, mpz_get_ui(p.get_mpz_t()));
  return lhs <= rhs;
}

}  // namespace sunit
