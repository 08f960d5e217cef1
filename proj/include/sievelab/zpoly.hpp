#pragma once

#include <vector>

#include "sievelab/rational.hpp"

namespace sievelab {

// Integer polynomial, coeffs[k] = coefficient of T^k. Monic where required.
using ZPoly = std::vector<Int>;

int zpoly_degree(const ZPoly& f);
Int zpoly_eval(const ZPoly& f, const Int& x);

// Characteristic polynomial det(T*I - A) of an integer matrix by
// Faddeev-LeVerrier; all divisions are exact.
ZPoly charpoly_int(const std::vector<std::vector<Int>>& a);

// True iff the monic factor h divides f over Z.
bool zpoly_divides_monic(const ZPoly& h, const ZPoly& f);

// Irreducibility over Q of a monic integer polynomial, degree <= 6:
//   (i) irreducible mod p for one p in a fixed prime list certifies
//       irreducibility (f monic);
//  (ii) otherwise an exact complete fallback: factor mod a prime keeping f
//       squarefree, Hensel-lift above twice the Mignotte factor bound, and
//       test every proper product of lifted factors for exact division.
// Throws on non-monic input or degree > 6.
bool rational_irreducibility(const ZPoly& f);

// Irreducible factor degrees of f mod p (f monic, squarefree mod p).
std::vector<int> factor_degrees_mod(const ZPoly& f, long p);

}  // namespace sievelab
