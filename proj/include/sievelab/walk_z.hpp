#pragma once

#include <vector>

#include "sievelab/sieve_core.hpp"

namespace sievelab {

// Exact distribution of the n-step simple random walk on Z.
struct WalkDistribution {
  long n = 0;
  bool lazy = false;              // steps {-1,0,+1} uniform instead of {-1,+1}
  std::vector<Rat> pmf;           // index k+n holds P(S_n = k), k in [-n, n]

  Rat at(long k) const {
    if (k < -n || k > n) return Rat(0);
    return pmf[(size_t)(k + n)];
  }
};

WalkDistribution exact_distribution(long n);
WalkDistribution exact_distribution_lazy(long n);

// Normalized pair correlation E(e(a1 S_n/m1) e(-a2 S_n/m2)) in closed form:
// cos(2 pi (a1 m2 - a2 m1)/(m1 m2))^n. Moduli must be odd and squarefree.
double walk_w(long n, long a1, long m1, long a2, long m2);

// Prop 7.1 bound: 1 + |cos(2 pi/L^2)|^n * sum of odd squarefree m <= L.
double walk_delta_bound(long n, long L);

// Exact P(S_n is prime and S_n = a mod q); primes are positive.
Rat prime_ap_probability(long n, long q, long a);

struct WalkSieveBound {
  double delta_bound;   // 1 + |cos(2 pi/L^2)|^n * sum m*q over the mixed support
  Rat h;                // sum over m <= L/q, (m,2q)=1 of sum_{m'|q} phi*(m')/phi(m)
  long L;
};

// The mixed-support bound behind the Brun-Titchmarsh analogue: support
// {m m' : m squarefree, (m,2q) = 1, m <= L/q, m' | q}, sieving S_n = 0 mod
// small primes and S_n != a mod q. P(S_n prime = a mod q) <= delta_bound/h.
WalkSieveBound walk_corollary_bound(long n, long q, long L);

struct WalkGramInstance {
  SieveSystem system;
  SiftableSample sample;          // pmf-weighted values of S_n
  OrthonormalBasisSpec basis;     // additive characters mod each odd prime
  SieveSupport support;           // odd squarefree m <= L
};

// Sample/support pair whose exact Gram Delta is comparable against
// walk_delta_bound(n, L).
WalkGramInstance walk_gram_instance(long n, long L);

}  // namespace sievelab
