#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sunitcount/integer.hpp"

namespace sunit {

/// A finite set S = {p_1 < ... < p_s} of distinct primes.
class PrimeSet {
 public:
  /// Validates: nonempty, all entries prime, no duplicates. Sorts.
  static PrimeSet make(std::vector<uint64_t> primes);

  size_t size() const { return primes_.size(); }
  uint64_t max_prime() const { return primes_.back(); }
  const std::vector<uint64_t>& primes() const { return primes_; }

  std::optional<size_t> index_of(uint64_t p) const;
  bool contains(uint64_t p) const { return index_of(p).has_value(); }

  /// true iff no prime of S divides n.
  bool coprime_to(const Integer& n) const;

 private:
  explicit PrimeSet(std::vector<uint64_t> primes) : primes_(std::move(primes)) {}
  std::vector<uint64_t> primes_;
};

/// A positive integer whose prime factors all lie in some PrimeSet, carried
/// with its exponent vector (aligned with PrimeSet::primes()).
struct SUnitValue {
  Integer value = 1;
  std::vector<uint32_t> exponents;
};

/// An exact rational delta = p/q with 0 <= p/q <= 1, in lowest terms.
/// Never a float: the comparison v <= u^delta is decided in integers.
class DeltaBound {
 public:
  static DeltaBound make(const Integer& num, const Integer& den);
  /// Accepts "p/q" or a bare integer "0"/"1". Decimals are rejected.
  static DeltaBound parse(const std::string& text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }
  /// Always rendered as "p/q".
  std::string str() const;

  friend bool operator==(const DeltaBound& a, const DeltaBound& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  DeltaBound(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {}
  Integer num_, den_;
};

/// Exactly the positive integers <= height_cap whose prime factors lie in S,
/// ascending, each with its exponent vector. Includes 1. When exponent_cap is
/// present, every exponent is capped at it. When max_values is present, the
/// enumeration refuses with a GuardLimitError once more values exist.
std::vector<SUnitValue> enumerate_sunits(const PrimeSet& S, const Integer& height_cap,
                                         std::optional<uint32_t> exponent_cap = std::nullopt,
                                         std::optional<uint64_t> max_values = std::nullopt);

/// Exponent vector of n over S when n is S-smooth, nullopt otherwise. n >= 1.
std::optional<std::vector<uint32_t>> sunit_exponents(const Integer& n, const PrimeSet& S);

inline bool is_sunit(const Integer& n, const PrimeSet& S) {
  return sunit_exponents(n, S).has_value();
}

/// Exact decision of v <= u^delta, i.e. v^q <= u^p for delta = p/q.
/// Comparison short-circuits on bit-length bounds before exact powering.
bool delta_le(const Integer& v, const Integer& u, const DeltaBound& delta);

}  // namespace sunit
