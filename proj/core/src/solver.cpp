#include "sunitcount/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "solver_internal.hpp"
#include "sunitcount/detail/parallel.hpp"
#include "sunitcount/ntcore.hpp"

namespace sunit {

Triple Triple::make(Integer a, Integer b, Integer c) {
  if (a < 1 || b < 1 || c < 1) {
    throw std::invalid_argument("Triple: a, b, c must be positive");
  }
  Triple t;
  t.a = std::move(a);
  t.b = std::move(b);
  t.c = std::move(c);
  Integer abc = t.a * t.b * t.c;
  Integer radical = 1;
  uint32_t r = 0;
  for (const auto& [p, e] : factorize(abc)) {
    radical *= p;
    ++r;
  }
  t.r = r;
  t.radical_abc = radical;
  return t;
}

bool Triple::all_odd() const {
  return mpz_odd_p(a.get_mpz_t()) && mpz_odd_p(b.get_mpz_t()) && mpz_odd_p(c.get_mpz_t());
}

namespace {

bool disjoint_exponents(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0 && y[i] > 0) return false;
  }
  return true;
}

std::vector<uint64_t> support_of(const PrimeSet& S, const SUnitValue& u, const SUnitValue& v,
                                 const SUnitValue& w) {
  std::vector<uint64_t> sup;
  for (size_t i = 0; i < S.size(); ++i) {
    if (u.exponents[i] + v.exponents[i] + w.exponents[i] > 0) sup.push_back(S.primes()[i]);
  }
  return sup;
}

void check_prime_set(const Triple& t, const PrimeSet& S) {
  Integer abc = t.abc();
  for (uint64_t p : S.primes()) {
    if (mpz_divisible_ui_p(abc.get_mpz_t(), p)) {
      throw std::invalid_argument("solve: prime " + std::to_string(p) +
                                  " of S divides a*b*c");
    }
  }
}

void check_config(const SolveConfig& cfg) {
  if (cfg.height_cap < 1) throw std::invalid_argument("solve: height cap must be >= 1");
  if (cfg.exponent_cap && *cfg.exponent_cap < 1) {
    throw std::invalid_argument("solve: exponent cap must be >= 1 when present");
  }
}

Integer evertse_cap(size_t s) {
  return 3 * pow_ui(Integer(7), 2 * static_cast<unsigned long>(s) + 1);
}

// Scans one w against all admissible u, emitting kept solutions in u-ascending
// order. Returns false when the visitor asks to stop.
template <typename Visitor>
bool scan_w(const Triple& t, const PrimeSet& S, const SolveConfig& cfg,
            const std::vector<SUnitValue>& smooth, const SUnitValue& w, Visitor&& visit) {
  Integer rhs = t.c * w.value;
  if (rhs < t.a + t.b) return true;  // u, v >= 1 is infeasible for this w
  Integer budget = rhs - t.b;        // need a*u <= c*w - b
  Integer au, rem, v;
  for (const SUnitValue& u : smooth) {
    au = t.a * u.value;
    if (au > budget) break;
    rem = rhs - au;
    if (!mpz_divisible_p(rem.get_mpz_t(), t.b.get_mpz_t())) continue;
    v = rem / t.b;
    if (v > cfg.height_cap) continue;
    auto it = std::lower_bound(
        smooth.begin(), smooth.end(), v,
        [](const SUnitValue& s, const Integer& x) { return s.value < x; });
    if (it == smooth.end() || it->value != v) continue;
    const SUnitValue& vv = *it;
    // pairwise coprimality via disjoint supports
    if (!disjoint_exponents(u.exponents, vv.exponents)) continue;
    if (!disjoint_exponents(u.exponents, w.exponents)) continue;
    if (!disjoint_exponents(vv.exponents, w.exponents)) continue;
    if (cfg.delta && !delta_le(v, u.value, *cfg.delta)) continue;
    std::vector<uint64_t> sup = support_of(S, u, vv, w);
    if (cfg.full_rank && sup.size() != S.size()) continue;
    if (t.a * u.value + t.b * vv.value != t.c * w.value) {
      throw std::logic_error("solve: candidate fails a*u + b*v = c*w");
    }
    if (!visit(Solution{u, vv, w, std::move(sup)})) return false;
  }
  return true;
}

}  // namespace

std::vector<Solution> detail::solve_indexed(const Triple& t, const PrimeSet& S,
                                            const std::vector<SUnitValue>& smooth,
                                            const SolveConfig& cfg, unsigned jobs) {
  check_prime_set(t, S);
  check_config(cfg);

  std::vector<std::vector<Solution>> chunks(jobs == 0 ? 1 : jobs);
  detail::run_chunked(smooth.size(), jobs, [&](size_t chunk, size_t begin, size_t end) {
    auto& out = chunks[chunk];
    for (size_t wi = begin; wi < end; ++wi) {
      scan_w(t, S, cfg, smooth, smooth[wi], [&](Solution sol) {
        out.push_back(std::move(sol));
        return true;
      });
    }
  });

  std::vector<Solution> solutions;
  for (auto& chunk : chunks) {
    solutions.insert(solutions.end(), std::make_move_iterator(chunk.begin()),
                     std::make_move_iterator(chunk.end()));
  }

  if (Integer(solutions.size()) > evertse_cap(S.size())) {
    throw std::logic_error("solve: solution count exceeds 3*7^(2s+1)");
  }
  return solutions;
}

std::vector<Solution> solve(const Triple& t, const PrimeSet& S, const SolveConfig& cfg,
                            unsigned jobs) {
  check_prime_set(t, S);
  check_config(cfg);
  return detail::solve_indexed(t, S, enumerate_sunits(S, cfg.height_cap, cfg.exponent_cap), cfg,
                               jobs);
}

std::optional<Solution> find_witness(const Triple& t, const PrimeSet& S, const SolveConfig& cfg) {
  check_prime_set(t, S);
  check_config(cfg);
  std::vector<SUnitValue> smooth = enumerate_sunits(S, cfg.height_cap, cfg.exponent_cap);
  std::optional<Solution> witness;
  for (const SUnitValue& w : smooth) {
    bool keep_going = scan_w(t, S, cfg, smooth, w, [&](Solution sol) {
      witness = std::move(sol);
      return false;
    });
    if (!keep_going) break;
  }
  return witness;
}

std::array<Integer, 3> reduce_to_coprime(const Integer& u, const Integer& v, const Integer& w,
                                         const Triple& t) {
  if (u < 1 || v < 1 || w < 1) {
    throw std::invalid_argument("reduce_to_coprime: u, v, w must be positive");
  }
  if (t.a * u + t.b * v != t.c * w) {
    throw std::invalid_argument("reduce_to_coprime: input does not satisfy a*u + b*v = c*w");
  }
  Integer ru = u, rv = v, rw = w, g;
  while (true) {
    mpz_gcd(g.get_mpz_t(), ru.get_mpz_t(), rv.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rw.get_mpz_t());
    if (g == 1) break;
    ru /= g;
    rv /= g;
    rw /= g;
  }
  return {ru, rv, rw};
}

}  // namespace sunit
