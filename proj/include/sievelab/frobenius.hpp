#pragma once

#include <vector>

#include "sievelab/rational.hpp"

namespace sievelab {

// The one-parameter family C_t : y^2 = f(x)(x - t) over F_q, with f monic
// squarefree of degree 2g and q an odd prime >= 5.
struct FamilySpec {
  long q = 5;
  int g = 1;
  std::vector<long> f_coeffs;  // monic, degree 2g; f_coeffs[k] = coeff of x^k

  void validate() const;
  std::vector<long> excluded_fibers() const;  // roots of f in F_q
};

// |C_t(F_{q^r})|: affine points by the quadratic-character count (chi(0) = 0,
// so ramified x contribute exactly one point) plus the single point at
// infinity of the odd-degree smooth model.
long point_count(const FamilySpec& spec, long t, int r);

struct ZetaNumerator {
  std::vector<Int> coeffs;   // P_t, degree 2g, coeffs[0] = 1, leading = q^g
  std::vector<Int> traces;   // a_r = q^r + 1 - |C_t(F_{q^r})|, r = 1..g
};

// Newton's identities on the trace data, completed by the palindromic rule
// c_{g+k} = q^k c_{g-k}. Throws if the counts are inconsistent (non-integer
// elementary symmetric functions signal a counting bug).
ZetaNumerator zeta_numerator(const FamilySpec& spec, long t);

// |J_t(F_q)| = P_t(1), positive.
Int jacobian_order(const ZetaNumerator& zn);

// Weil bound |a_1| <= 2g floor(2 sqrt(q)) at the count level.
bool count_within_weil(const FamilySpec& spec, long count);

struct SquareCensus {
  long q = 0;
  int g = 0;
  long fibers = 0;           // valid t (f(t) != 0)
  long excluded = 0;         // roots of f
  long c_square = 0;         // fibers with |C_t(F_q)| a perfect square
  long j_square = 0;         // fibers with |J_t(F_q)| a perfect square
  Rat fraction_c_square;
  Rat fraction_j_square;
};

// Full t-sweep; gated at q <= 1000 for g = 1 and q <= 200 for g = 2.
SquareCensus square_census(const FamilySpec& spec);

// Checks c_{g+k} = q^k c_{g-k} over Z.
bool zeta_is_q_symplectic(const ZetaNumerator& zn, long q, int g);

}  // namespace sievelab
