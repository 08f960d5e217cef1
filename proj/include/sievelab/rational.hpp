#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace sievelab {

// Exact arithmetic types. Weights, densities and every H/S-sum are kept
// rational end to end; only eigensolves are floating point.
using Int = mpz_class;
using Rat = mpq_class;

// Parse "p/q" or "p" (used by the JSON schema and the CLI).
inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// mpq_class(p, q) does not canonicalize; use this for ratios that may share
// a factor.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return z;
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Exact quotient; throws if the division is not exact.
inline Int exact_div(const Int& a, const Int& b, const char* what = "division") {
  if (b == 0) throw std::domain_error(std::string(what) + ": division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::domain_error(std::string(what) + ": inexact division");
  return q;
}

}  // namespace sievelab
