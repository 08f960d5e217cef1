#pragma once

#include <optional>
#include <vector>

#include "sievelab/rational.hpp"

namespace sievelab {

// Long Weierstrass curve y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// with integer coefficients and nonzero discriminant.
struct WeierstrassCurve {
  Int a1, a2, a3, a4, a6;
  Int discriminant;

  WeierstrassCurve(Int a1_, Int a2_, Int a3_, Int a4_, Int a6_);
};

// Rational point: infinity or affine (x, y) with the normalized denominator
// decomposition x = a/d^2, y = b/d^3, gcd(a,d) = gcd(b,d) = 1, d >= 1.
struct CurvePoint {
  bool infinity = true;
  Rat x, y;

  static CurvePoint at_infinity() { return CurvePoint{}; }
  static CurvePoint affine(Rat x, Rat y);
};

bool on_curve(const WeierstrassCurve& e, const CurvePoint& p);
CurvePoint point_negate(const WeierstrassCurve& e, const CurvePoint& p);
CurvePoint point_add(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint point_mul(const WeierstrassCurve& e, const CurvePoint& p, long n);

struct DenominatorInfo {
  Int d;             // the shared denominator: x = a/d^2, y = b/d^3
  long omega = 0;    // distinct primes <= trial bound dividing d
  bool cofactor = false;  // an unfactored cofactor > 1 remains (omega is a lower bound)
  bool is_infinity = false;  // omega_E(0) = +infinity sentinel
};

// Trial division up to `bound`; sets `cofactor` when d keeps a factor above it.
DenominatorInfo denominator_and_omega(const CurvePoint& p, long bound = 1'000'000);

// Extracts d from the normalized form and asserts x, y share it.
Int shared_denominator(const CurvePoint& p);

// Elliptic divisibility sequence W_0..W_N from initial data (W_2, W_3, W_4):
// W_n = (W_2^2 W_{n-1} W_{n-3} - W_3 W_{n-2}^2)/W_{n-4}, every division exact.
struct EdsState {
  std::vector<Int> w;  // w[n] = W_n

  const Int& at(size_t n) const { return w.at(n); }
};

EdsState eds_extend(const Int& w2, const Int& w3, const Int& w4, long N);

// The nonsingularity discriminant of the initial data (must be nonzero).
Int eds_discriminant(const Int& w2, const Int& w3, const Int& w4);

// Number of affine+infinity points of the reduction mod ell (good reduction).
long curve_order_mod(const WeierstrassCurve& e, long ell);

// Order nu(ell) of the reduction of P in E(F_ell); enumerates multiples.
long order_mod_ell(const WeierstrassCurve& e, const CurvePoint& p, long ell);

struct NuCoverage {
  std::vector<long> covered_primes;    // primes p <= target_max hit by nu(ell)
  std::vector<long> missing_primes;
  double coverage = 0.0;               // fraction of primes <= target_max covered
};

// Scans good primes ell <= ell_max and reports which primes p <= target_max
// occur as nu(ell).
NuCoverage nu_coverage(const WeierstrassCurve& e, const CurvePoint& p, long ell_max,
                       long target_max);

}  // namespace sievelab
