#pragma once

#include <cstdint>
#include <vector>

#include "sievelab/rational.hpp"
#include "sievelab/zpoly.hpp"

namespace sievelab {

// Random walk on SL(n,Z) driven by the full elementary generator set
// S = { E_ij(+-1) : i != j }, |S| = 2n(n-1). Left multiplication by
// E_ij(c) adds c times row j to row i; entries are exact big integers.
struct WalkConfig {
  int n = 3;
  long steps = 60;
  long trials = 1000;
  uint64_t seed = 1;

  long generator_count() const { return 2L * n * (n - 1); }
  void validate() const;
};

struct ReducibilityRow {
  long k = 0;                // step index
  long reducible = 0;        // walks whose charpoly at step k is reducible over Q
  long trials = 0;
  double frequency = 0.0;
  double wilson_lo = 0.0;    // 95% Wilson score interval
  double wilson_hi = 0.0;
};

// Runs `trials` independent walks of length max(checkpoints) and reports the
// reducible-charpoly frequency at each checkpoint. Deterministic given the
// master seed (per-trial derived seeds; thread count does not matter).
std::vector<ReducibilityRow> run_reducibility_experiment(const WalkConfig& config,
                                                         const std::vector<long>& checkpoints);

std::pair<double, double> wilson_interval(long successes, long trials, double z = 1.959963984540054);

struct CayleySpectrum {
  int n = 2;
  long ell = 3;
  long group_size = 0;
  long generator_count = 0;
  std::vector<double> eigenvalues;  // ascending
  double rho = 0.0;                 // max |lambda| over nontrivial eigenvalues
  double alpha = 0.0;               // -log rho / log |S|
  bool trivial_simple = false;      // eigenvalue 1 has multiplicity one
  bool has_minus_one = false;       // bipartite obstruction
};

// Dense spectrum of the generator-averaging operator on SL(n, F_ell);
// gate |G| <= 5000. ell = 2 is allowed (the S3 bipartiteness diagnostic).
CayleySpectrum cayley_spectrum(int n, long ell);

struct CouponStats {
  int n = 0;
  long trials = 0;
  double t_mean = 0.0;       // simulated coupon-collector time
  double t_stderr = 0.0;
  Rat t_exact;               // n * H_n
  double tau_mean = 0.0;     // simulated transition time (charpoly irreducible)
  double tau_stderr = 0.0;
  double ratio = 0.0;        // tau_mean / t_mean
  long max_steps_hit = 0;    // paths that hit the step cap (censored)
};

// Coupon = row index of the applied elementary matrix (uniform over n).
// t_n = first step every row was touched; tau_n = first step with
// irreducible characteristic polynomial; tau >= t is asserted path-wise.
CouponStats coupon_and_transition_times(int n, long trials, uint64_t seed);

// Exact E(t_n) = n * H_n.
Rat coupon_collector_expectation(int n);

}  // namespace sievelab
