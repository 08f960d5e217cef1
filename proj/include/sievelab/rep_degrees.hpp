#pragma once

#include <vector>

#include "sievelab/rational.hpp"

namespace sievelab {

enum class DegreeFamily { GL2, SL2 };

// Irreducible character degrees with multiplicities, from the classical
// character tables of GL(2,q) and SL(2,q), q an odd prime. The identities
// sum mult*deg^2 = |G| and sum mult = #classes guard against transcription
// errors and are checked at construction.
struct DegreeMultiset {
  DegreeFamily family;
  long q;
  std::vector<std::pair<Int, Int>> entries;  // (degree, multiplicity)

  Int group_order() const;
  Int class_count() const;
};

DegreeMultiset degree_multiset(DegreeFamily family, long q);

// (sum m_i d_i^p)^(1/p); p = infinity gives the max degree.
double a_p(const DegreeMultiset& ms, double p);
Int a1_exact(const DegreeMultiset& ms);
Int a2_squared_exact(const DegreeMultiset& ms);  // equals |G|
Int a_inf_exact(const DegreeMultiset& ms);

// Number of invertible symmetric 2x2 matrices over F_q (brute force); equals
// A_1(GL(2,q)).
Int gow_symmetric_count(long q);

// |G|_{p'} / (q-1)^r for GL(2,q): the principal-series degree q+1.
Int gl2_principal_series_degree(long q);

// Bound shapes checked numerically: A_inf <= (q+1)^((d-r)/2) with each
// group's own (d,r); A_1(GL2) <= (q+1)^3 (type A, Weyl factor removed);
// A_1(SL2) <= 2 (q+1)^3/(q-1) (kappa = 2 and the ambient-GL2 exponent; the
// (3,1)-exponent variant fails numerically at q = 5).
double ainf_bound(DegreeFamily family, long q);
double a1_bound(DegreeFamily family, long q);

}  // namespace sievelab
