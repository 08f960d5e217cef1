#pragma once

#include <map>
#include <vector>

#include "sievelab/sieve_core.hpp"

namespace sievelab {

enum class SieveSide { upper, lower };

// Upper/lower sieve coefficients lambda_d supported on squarefree products of
// a prime list: lambda_1 = 1 and sum_{d|n} lambda_d has the side's sign.
struct SieveCoefficients {
  SieveSide side = SieveSide::upper;
  std::vector<long> primes;
  std::map<long, Rat> table;   // d -> lambda_d, squarefree d only
  long level = 0;              // all support d < level

  // Verifies the axiom sum_{d|n} lambda_d <= 0 (lower) / >= 0 (upper) for
  // every 2 <= n <= bound (default: the product of the primes). The sum
  // depends on n only through its radical over the prime list, so the check
  // runs over the divisor lattice; n coprime to the list always sums to
  // lambda_1 = 1 (those items are counted exactly, not bounded).
  void verify_axiom(long bound = 0) const;
};

// Truncated Moebius coefficients: lambda_d = mu(d) for omega(d) <= k, else 0.
// Even k gives an upper-bound side, odd k a lower-bound side; k >= number of
// primes reproduces the full Moebius (Legendre) identity.
SieveCoefficients bonferroni_coeffs(const std::vector<long>& primes, int k);

struct SandwichResult {
  Rat lower, exact, upper;
  Rat v_plus, v_minus;    // sum lambda_d nu_d(Omega_d)
  Rat r_plus, r_minus;    // sum |lambda_d r_d(X)|
  Rat total_mass;
};

// Evaluates sum_d lambda_d S_d for both coefficient sets against the exact
// sifted measure, plus the V*mass +/- R split of the remainder decomposition.
SandwichResult sandwich_bounds(const SiftableSample& sample, const SieveSystem& sys,
                               const SieveCoefficients& upper, const SieveCoefficients& lower);

// S_d(X) = measure of items with value in Omega_ell for every ell | d.
Rat s_d_measure(const SiftableSample& sample, const SieveSystem& sys, long d,
                const std::vector<long>& primes);

}  // namespace sievelab
