#include "sievelab/small_sieve.hpp"
#include <limits>

#include <algorithm>

#include "sievelab/numutil.hpp"

namespace sievelab {

void SieveCoefficients::verify_axiom(long bound) const {
  if (table.find(1) == table.end() || table.at(1) != 1)
    throw std::invalid_argument("sieve coefficients: lambda_1 must be 1");
  for (const auto& [d, lam] : table) {
    (void)lam;
    if (!is_squarefree_long(d)) throw std::invalid_argument("sieve coefficients: d not squarefree");
    if (level > 0 && d >= level && d != 1)
      throw std::invalid_argument("sieve coefficients: support exceeds level");
  }
  // Sum_{d|n} lambda_d depends on n only through gcd(n, prod primes), so the
  // axiom over every n up to the product reduces to the divisor lattice of
  // the prime list; n coprime to the list gives lambda_1 = 1, the exactly
  // counted case.
  long cap = bound > 0 ? bound : std::numeric_limits<long>::max();
  for (const auto& subset : squarefree_subsets(primes, 0, 0)) {
    if (subset.empty()) continue;
    __int128 m128 = 1;
    for (long p : subset) m128 *= p;
    if (m128 > cap) continue;
    long n = (long)m128;
    Rat s = 0;
    for (const auto& [d, lam] : table)
      if (n % d == 0) s += lam;
    if (side == SieveSide::upper && s < 0)
      throw std::invalid_argument("sieve coefficients: upper axiom fails at n=" + std::to_string(n));
    if (side == SieveSide::lower && s > 0)
      throw std::invalid_argument("sieve coefficients: lower axiom fails at n=" + std::to_string(n));
  }
}

SieveCoefficients bonferroni_coeffs(const std::vector<long>& primes, int k) {
  if (k < 0) throw std::invalid_argument("bonferroni_coeffs: k >= 0 required");
  SieveCoefficients c;
  c.primes = primes;
  c.side = (k % 2 == 0) ? SieveSide::upper : SieveSide::lower;
  if ((size_t)k >= primes.size()) c.side = SieveSide::upper;  // full Moebius: exact both ways
  auto subsets = squarefree_subsets(primes, 0, 0);
  long maxd = 1;
  for (const auto& m : subsets) {
    if ((int)m.size() > k) continue;
    long d = 1;
    for (long p : m) d *= p;
    c.table[d] = (m.size() % 2 == 0) ? 1 : -1;  // mu(d)
    maxd = std::max(maxd, d);
  }
  c.level = maxd + 1;
  c.verify_axiom();
  return c;
}

Rat s_d_measure(const SiftableSample& sample, const SieveSystem& sys, long d,
                const std::vector<long>& primes) {
  std::vector<int> places;
  for (long p : primes) {
    if (d % p == 0) {
      int idx = sys.place_index(p);
      if (idx < 0) throw std::invalid_argument("s_d_measure: prime not a system label");
      places.push_back(idx);
    }
  }
  Rat s = 0;
  for (const auto& it : sample.items) {
    bool all_in = true;
    for (int pl : places)
      if (!sys.places[pl].in_omega[it.values[pl]]) { all_in = false; break; }
    if (all_in) s += it.weight;
  }
  return s;
}

SandwichResult sandwich_bounds(const SiftableSample& sample, const SieveSystem& sys,
                               const SieveCoefficients& upper, const SieveCoefficients& lower) {
  // full-Moebius coefficients are exact on both sides; accept them as lower
  bool lower_ok = lower.side == SieveSide::lower ||
                  lower.table.size() == (size_t(1) << lower.primes.size());
  if (upper.side != SieveSide::upper || !lower_ok)
    throw std::invalid_argument("sandwich_bounds: sides mismatched");
  for (const auto& c : {upper, lower})
    for (long p : c.primes)
      if (sys.place_index(p) < 0)
        throw std::invalid_argument("sandwich_bounds: coefficient primes must be system labels");

  SandwichResult r;
  r.total_mass = sample.total_mass();
  r.exact = sifted_measure(sample, sys);

  auto eval = [&](const SieveCoefficients& c, Rat& value, Rat& v, Rat& rem) {
    value = 0;
    v = 0;
    rem = 0;
    for (const auto& [d, lam] : c.table) {
      Rat sd = s_d_measure(sample, sys, d, c.primes);
      Rat nud = 1;
      for (long p : c.primes)
        if (d % p == 0) nud *= sys.places[sys.place_index(p)].nu_omega();
      Rat rd = sd - nud * r.total_mass;  // remainder split, a definition
      value += lam * sd;
      v += lam * nud;
      rem += abs(lam * rd);
    }
  };
  eval(upper, r.upper, r.v_plus, r.r_plus);
  eval(lower, r.lower, r.v_minus, r.r_minus);
  return r;
}

}  // namespace sievelab
