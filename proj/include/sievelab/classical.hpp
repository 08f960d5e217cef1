#pragma once

#include <vector>

#include "sievelab/sieve_core.hpp"

namespace sievelab {

// Interval (r = 1) or cube [M+1, M+N]^r of lattice points.
struct IntervalSpec {
  long long M = 0;
  long long N = 1;
  int r = 1;
};

struct ClassicalInstance {
  SieveSystem system;            // Y_ell = (Z/ell)^r, uniform density, Omega empty
  SiftableSample sample;         // one item per lattice point, weight 1
  OrthonormalBasisSpec basis;    // additive characters e(a.y/ell)
};

// Builds the classical instance: values are coordinate-wise residues mod each
// prime, and the attached basis is the additive-character table (function 0
// is the constant, i.e. a = 0).
ClassicalInstance interval_sample(const IntervalSpec& spec, const std::vector<long>& primes);

// Marks Omega_ell = {0 vector} at every place (Eratosthenes-style sieving).
void set_zero_sieving_sets(SieveSystem& sys);

// Delta <= N-1+L^2 for r=1, (sqrt(N)+L)^(2r) otherwise.
double analytic_delta_bound(const IntervalSpec& spec, long L);

// r_d(X;y) = |{x : rho_d(F_x) = y}| - nu_d(y)|X|, exact.
Rat equidist_remainder(const SiftableSample& sample, const SieveSystem& sys,
                       const std::vector<int>& d_places, const std::vector<int>& y);

// Support over the given primes: squarefree m <= L (traditional), or with
// zywina = true the variant psi(m) = prod(ell+1) <= L+1.
SieveSupport classical_support(const SieveSystem& sys, const std::vector<long>& primes,
                               long L, bool zywina = false);

}  // namespace sievelab
