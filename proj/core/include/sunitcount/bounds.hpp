#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sunitcount/integer.hpp"
#include "sunitcount/solver.hpp"

namespace sunit {

/// Effective constants for the bound evaluators. The underlying results only
/// assert existence, so every constant defaults to 1 and is a config input.
/// The evaluators are diagnostic shapes, not certificates.
struct BoundConstants {
  double c0_lemma1 = 1.0;
  double c1_lemma2 = 1.0;
  double c_bw = 1.0;
  double c_abc = 1.0;
  double abc_eps = 1.0;
  std::map<std::string, double> theorem_constants;  // keyed "PP6" .. "PP12"

  double theorem_constant(const std::string& name) const;
};

/// C0 * (log H)^(s+1) * log log H. Requires H >= 16.
double lemma1_envelope(uint32_t s, uint64_t H, const BoundConstants& consts);

/// C1 * log H / log p for a prime 2 <= p <= H.
double lemma2_envelope(uint64_t p, uint64_t H, const BoundConstants& consts);

/// Log-scale lower bound for a nonzero linear form in logarithms:
/// -(c*n)^(2n) * log B * prod_j max(h_j, 1). Requires B >= 3 and
/// n == heights.size().
double bw_lower_bound(const std::vector<double>& heights, size_t n, double B,
                      const BoundConstants& consts);

/// 3 * 7^(2s+1), the cap on the number of solutions for any fixed (t, S).
Integer evertse_bound(uint32_t s);

struct AbcTripleReport {
  Integer a, b, c;
  Integer radical;  // rad(abc)
  double quality;   // log c / log rad(abc)
};

/// Quality report for pairwise coprime positive a + b = c.
AbcTripleReport abc_quality(const Integer& a, const Integer& b, const Integer& c);

enum class Envelope { PP6, PP7, PP9, PP10, PP11, PP12 };
const char* envelope_name(Envelope e);
std::optional<Envelope> parse_envelope(std::string_view name);

/// Value of the selected count envelope at (s, H). Requires H >= 16.
///   PP6:  C * H^(s-1) * (log H)^(s+3) * (log log H)^2
///   PP7:  C * (H / log H)^(s-1)
///   PP9:  C * (H (log H)^s log log H)^floor(s/2)
///   PP10: C * (H (log H)^s log log H)^floor(2s/3)
///   PP11: C * (H / log H)^floor(s/2)
///   PP12: C * (H / log H)^floor(2s/3)
double theorem_envelope(Envelope which, uint32_t s, uint64_t H, const BoundConstants& consts);

struct ExponentAudit {
  /// per prime of S: max over solutions of ord_p(uvw) * log p / log H
  std::vector<std::pair<uint64_t, double>> per_prime;
  std::optional<double> max_stat;
};

/// Observed per-prime exponent statistic; the implied lower envelope on the
/// constant of the ord_p bound. Reports, never asserts, boundedness.
ExponentAudit empirical_exponent_audit(const std::vector<Solution>& solutions, const PrimeSet& S,
                                       uint64_t H);

}  // namespace sunit
