#include "sievelab/rep_degrees.hpp"

#include <cmath>
#include <stdexcept>

#include "sievelab/numutil.hpp"

namespace sievelab {

Int DegreeMultiset::group_order() const {
  Int q_(q);
  if (family == DegreeFamily::GL2) return (q_ * q_ - 1) * (q_ * q_ - q_);
  return q_ * (q_ * q_ - 1);
}

Int DegreeMultiset::class_count() const {
  Int q_(q);
  if (family == DegreeFamily::GL2) return q_ * q_ - 1;
  return q_ + 4;
}

DegreeMultiset degree_multiset(DegreeFamily family, long q) {
  if (q < 3 || q % 2 == 0 || !is_prime_u64((uint64_t)q))
    throw std::invalid_argument("degree_multiset: q must be an odd prime");
  DegreeMultiset ms;
  ms.family = family;
  ms.q = q;
  Int q_(q);
  if (family == DegreeFamily::GL2) {
    ms.entries = {
        {1, q_ - 1},                          // characters of F_q^* via det
        {q_ - 1, q_ * (q_ - 1) / 2},          // cuspidal
        {q_, q_ - 1},                         // Steinberg twists
        {q_ + 1, (q_ - 1) * (q_ - 2) / 2},    // principal series
    };
  } else {
    ms.entries = {
        {1, 1},
        {q_, 1},                              // Steinberg
        {(q_ + 1) / 2, 2},
        {(q_ - 1) / 2, 2},
        {q_ + 1, (q_ - 3) / 2},
        {q_ - 1, (q_ - 1) / 2},
    };
  }
  // anti-transcription oracle
  Int sum_sq = 0, classes = 0;
  for (const auto& [d, m] : ms.entries) {
    sum_sq += m * d * d;
    classes += m;
  }
  if (sum_sq != ms.group_order()) throw std::logic_error("degree_multiset: sum d^2 != |G|");
  if (classes != ms.class_count()) throw std::logic_error("degree_multiset: class count mismatch");
  return ms;
}

double a_p(const DegreeMultiset& ms, double p) {
  if (p < 1.0) throw std::invalid_argument("a_p: p >= 1 required");
  if (std::isinf(p)) return a_inf_exact(ms).get_d();
  double s = 0;
  for (const auto& [d, m] : ms.entries)
    s += m.get_d() * std::pow(d.get_d(), p);
  return std::pow(s, 1.0 / p);
}

Int a1_exact(const DegreeMultiset& ms) {
  Int s = 0;
  for (const auto& [d, m] : ms.entries) s += m * d;
  return s;
}

Int a2_squared_exact(const DegreeMultiset& ms) {
  Int s = 0;
  for (const auto& [d, m] : ms.entries) s += m * d * d;
  return s;
}

Int a_inf_exact(const DegreeMultiset& ms) {
  Int best = 0;
  for (const auto& [d, m] : ms.entries)
    if (m > 0 && d > best) best = d;
  return best;
}

Int gow_symmetric_count(long q) {
  if (q < 3 || q > 50 || !is_prime_u64((uint64_t)q))
    throw std::invalid_argument("gow_symmetric_count: odd prime q <= 50 required");
  Int count = 0;
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b)
      for (long c = 0; c < q; ++c)
        if (((a * c - b * b) % q + q) % q != 0) ++count;
  return count;
}

Int gl2_principal_series_degree(long q) {
  // |GL(2,q)|_{p'} = (q-1)^2 (q+1); divide by (q-1)^r with r = 2
  Int q_(q);
  Int gp = (q_ - 1) * (q_ - 1) * (q_ + 1);
  return gp / ((q_ - 1) * (q_ - 1));
}

double ainf_bound(DegreeFamily family, long q) {
  // (q+1)^((d-r)/2): GL2 has (d,r) = (4,2), SL2 has (3,1); both give q+1
  (void)family;
  return (double)(q + 1);
}

double a1_bound(DegreeFamily family, long q) {
  double qp1 = (double)(q + 1);
  if (family == DegreeFamily::GL2) return qp1 * qp1 * qp1;
  return 2.0 * qp1 * qp1 * qp1 / (double)(q - 1);
}

}  // namespace sievelab
