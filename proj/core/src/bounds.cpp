#include "sunitcount/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "sunitcount/ntcore.hpp"

namespace sunit {

double BoundConstants::theorem_constant(const std::string& name) const {
  auto it = theorem_constants.find(name);
  return it == theorem_constants.end() ? 1.0 : it->second;
}

double lemma1_envelope(uint32_t s, uint64_t H, const BoundConstants& consts) {
  if (H < 16) throw std::domain_error("lemma1_envelope: requires H >= 16");
  const double logH = std::log(static_cast<double>(H));
  return consts.c0_lemma1 * std::pow(logH, s + 1) * std::log(logH);
}

double lemma2_envelope(uint64_t p, uint64_t H, const BoundConstants& consts) {
  if (p < 2 || p > H) throw std::domain_error("lemma2_envelope: requires 2 <= p <= H");
  return consts.c1_lemma2 * std::log(static_cast<double>(H)) / std::log(static_cast<double>(p));
}

double bw_lower_bound(const std::vector<double>& heights, size_t n, double B,
                      const BoundConstants& consts) {
  if (B < 3.0) throw std::domain_error("bw_lower_bound: requires B >= 3");
  if (n != heights.size()) {
    throw std::invalid_argument("bw_lower_bound: n must equal the number of heights");
  }
  double product = 1.0;
  for (double h : heights) product *= std::max(h, 1.0);
  const double cn = consts.c_bw * static_cast<double>(n);
  return -std::pow(cn, 2.0 * static_cast<double>(n)) * std::log(B) * product;
}

Integer evertse_bound(uint32_t s) {
  return 3 * pow_ui(Integer(7), 2ul * s + 1ul);
}

AbcTripleReport abc_quality(const Integer& a, const Integer& b, const Integer& c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("abc_quality: entries must be positive");
  if (a + b != c) throw std::invalid_argument("abc_quality: requires a + b = c");
  if (!coprime(a, b) || !coprime(a, c) || !coprime(b, c)) {
    throw std::invalid_argument("abc_quality: entries must be pairwise coprime");
  }
  AbcTripleReport report;
  report.a = a;
  report.b = b;
  report.c = c;
  report.radical = rad(a * b * c);
  report.quality = log_abs(c) / log_abs(report.radical);
  return report;
}

const char* envelope_name(Envelope e) {
  switch (e) {
    case Envelope::PP6: return "PP6";
    case Envelope::PP7: return "PP7";
    case Envelope::PP9: return "PP9";
    case Envelope::PP10: return "PP10";
    case Envelope::PP11: return "PP11";
    case Envelope::PP12: return "PP12";
  }
  return "?";
}

std::optional<Envelope> parse_envelope(std::string_view name) {
  if (name == "PP6") return Envelope::PP6;
  if (name == "PP7") return Envelope::PP7;
  if (name == "PP9") return Envelope::PP9;
  if (name == "PP10") return Envelope::PP10;
  if (name == "PP11") return Envelope::PP11;
  if (name == "PP12") return Envelope::PP12;
  return std::nullopt;
}

double theorem_envelope(Envelope which, uint32_t s, uint64_t H, const BoundConstants& consts) {
  if (H < 16) throw std::domain_error("theorem_envelope: requires H >= 16");
  const double Hd = static_cast<double>(H);
  const double logH = std::log(Hd);
  const double loglogH = std::log(logH);
  const double C = consts.theorem_constant(envelope_name(which));
  switch (which) {
    case Envelope::PP6:
      return C * std::pow(Hd, s - 1.0) * std::pow(logH, s + 3.0) * loglogH * loglogH;
    case Envelope::PP7:
      return C * std::pow(Hd / logH, s - 1.0);
    case Envelope::PP9:
      return C * std::pow(Hd * std::pow(logH, s) * loglogH, s / 2);
    case Envelope::PP10:
      return C * std::pow(Hd * std::pow(logH, s) * loglogH, (2 * s) / 3);
    case Envelope::PP11:
      return C * std::pow(Hd / logH, s / 2);
    case Envelope::PP12:
      return C * std::pow(Hd / logH, (2 * s) / 3);
  }
  throw std::invalid_argument("theorem_envelope: unknown selector");
}

ExponentAudit empirical_exponent_audit(const std::vector<Solution>& solutions, const PrimeSet& S,
                                       uint64_t H) {
  ExponentAudit audit;
  if (solutions.empty()) return audit;
  if (H < 2) throw std::invalid_argument("empirical_exponent_audit: H must be >= 2");
  const double logH = std::log(static_cast<double>(H));
  for (size_t i = 0; i < S.size(); ++i) {
    const double logp = std::log(static_cast<double>(S.primes()[i]));
    double best = 0.0;
    for (const Solution& sol : solutions) {
      if (sol.u.exponents.size() != S.size()) {
        throw std::invalid_argument("empirical_exponent_audit: solutions do not match S");
      }
      const double ord = sol.u.exponents[i] + sol.v.exponents[i] + sol.w.exponents[i];
      best = std::max(best, ord * logp / logH);
    }
    audit.per_prime.emplace_back(S.primes()[i], best);
    audit.max_stat = audit.max_stat ? std::max(*audit.max_stat, best) : best;
  }
  return audit;
}

}  // namespace sunit
