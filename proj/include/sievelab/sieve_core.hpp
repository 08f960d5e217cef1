#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sievelab/rational.hpp"

namespace sievelab {

// Thrown when a compute gate (matrix size, group order, sweep size...) rejects
// a request. The CLI maps this to exit code 1 and names the gate.
class GateError : public std::runtime_error {
 public:
  GateError(std::string gate, const std::string& msg)
      : std::runtime_error(msg), gate_(std::move(gate)) {}
  const std::string& gate() const { return gate_; }

 private:
  std::string gate_;
};

// One label ell with its finite quotient Y_ell, density nu_ell and sieving
// set Omega_ell. Elements of Y_ell are the indices 0..size-1; callers attach
// whatever meaning they like (residues, group elements, binary outcomes).
struct SievePlace {
  long long label = 0;
  int size = 0;
  std::vector<Rat> density;       // nu_ell, one entry per element, sums to 1
  std::vector<char> in_omega;     // Omega_ell membership mask

  Rat nu_omega() const;
  Rat nu_point(int y) const { return density.at(y); }
};

struct SieveSystem {
  std::vector<SievePlace> places;

  // Invariants: labels distinct; each density sums to 1 exactly, is
  // nonnegative, and vanishes only off Omega_ell; nu(Omega_ell) < 1.
  void validate() const;
  int place_index(long long label) const;  // -1 if absent
};

// A sieve support: finite collection of squarefree label-sets m (stored as
// sorted lists of place indices), closed in the sense of the support
// condition: ell in some m forces {ell} in the support, and {} is a member.
struct SieveSupport {
  std::vector<std::vector<int>> sets;

  void validate(const SieveSystem& sys) const;

  static SieveSupport empty_only();
  static SieveSupport singletons(int n_places);      // {} plus all {ell}
  static SieveSupport power_set(int n_places);
};

// Finite weighted sample: each item carries a nonnegative weight mu(x) and a
// per-place value index into Y_ell.
struct SiftableSample {
  struct Item {
    Rat weight;
    std::vector<int> values;
  };
  std::vector<Item> items;

  Rat total_mass() const;
  void validate(const SieveSystem& sys) const;
};

using cd = std::complex<double>;

// Per-place orthonormal basis of L^2(Y_ell, nu_ell) given as value tables;
// table 0 must be the constant function 1. The engine never derives
// characters itself: instantiating modules supply them.
struct OrthonormalBasisSpec {
  // tables[place][fn][y]
  std::vector<std::vector<std::vector<cd>>> tables;

  // Checks <phi,phi'> = delta within tol (default 1e-12) and size = |Y_ell|.
  void validate(const SieveSystem& sys, double tol = 1e-12) const;
};

// Index of one primitive basis element: the label-set m together with the
// per-place basis-function indices (all >= 1, i.e. no constant component).
// m = {} indexes the constant function.
struct GramIndexEntry {
  std::vector<int> places;
  std::vector<int> fns;
};

struct GramDelta {
  std::vector<GramIndexEntry> index;
  Eigen::MatrixXcd matrix;       // W(phi, phi'), Hermitian PSD
  double top_eigenvalue = 0.0;   // the large sieve constant Delta
  double min_eigenvalue = 0.0;
};

// H = sum over m in the support of prod_{ell in m} nu(Omega)/(1-nu(Omega)).
// Exact rational; H >= 1 because {} contributes the empty product.
Rat compute_H(const SieveSystem& sys, const SieveSupport& support);

// Measure of the sifted set: total weight of items avoiding Omega_ell at
// every place of the system.
Rat sifted_measure(const SiftableSample& sample, const SieveSystem& sys);

// Assembles the Hermitian matrix of W(phi,phi') sums over all primitive
// basis elements of the support and eigensolves it. The top eigenvalue is
// the exact large sieve constant Delta for this sample/support/basis.
GramDelta gram_delta(const SiftableSample& sample, const SieveSystem& sys,
                     const SieveSupport& support, const OrthonormalBasisSpec& basis);

// Max row sum of |W|; dominates the top eigenvalue (Hermitian Gershgorin).
double row_sum_delta_bound(const GramDelta& gram);

struct DualVarianceResult {
  Rat lhs;          // sum_x mu(x) (P(x,L) - P(L))^2, exact
  Rat p_l;          // P(L) = sum nu(Omega_ell)
  Rat q_l;          // Q(L) = sum nu(Omega_ell)(1 - nu(Omega_ell))
  double delta;     // Delta on the singleton support
  double delta_q;   // Delta * Q(L)
};

// Renyi-type variance sieve: lhs <= Delta * Q(L), with Delta computed by
// gram_delta on the singleton-only support.
DualVarianceResult dual_variance_check(const SiftableSample& sample, const SieveSystem& sys,
                                       const OrthonormalBasisSpec& basis);

// Binary-event system: Y_ell = {0,1}, nu(1) = p_ell, Omega_ell = {1}, and the
// one-dimensional primitive basis phi(y) = (y - p)/sqrt(p(1-p)).
std::pair<SieveSystem, OrthonormalBasisSpec> binary_event_system(const std::vector<Rat>& probs);

// The full product sample of k independent binary events (2^k outcomes,
// weight = product measure).
SiftableSample binary_product_sample(const std::vector<Rat>& probs);

}  // namespace sievelab
