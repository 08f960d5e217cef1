#include "sievelab/elliptic.hpp"

#include <stdexcept>

#include "sievelab/numutil.hpp"

namespace sievelab {

WeierstrassCurve::WeierstrassCurve(Int a1_, Int a2_, Int a3_, Int a4_, Int a6_)
    : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)),
      a6(std::move(a6_)) {
  Int b2 = a1 * a1 + 4 * a2;
  Int b4 = 2 * a4 + a1 * a3;
  Int b6 = a3 * a3 + 4 * a6;
  Int b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  discriminant = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  if (discriminant == 0) throw std::invalid_argument("WeierstrassCurve: singular (disc = 0)");
}

CurvePoint CurvePoint::affine(Rat x, Rat y) {
  CurvePoint p;
  p.infinity = false;
  p.x = std::move(x);
  p.y = std::move(y);
  return p;
}

bool on_curve(const WeierstrassCurve& e, const CurvePoint& p) {
  if (p.infinity) return true;
  Rat lhs = p.y * p.y + Rat(e.a1) * p.x * p.y + Rat(e.a3) * p.y;
  Rat rhs = p.x * p.x * p.x + Rat(e.a2) * p.x * p.x + Rat(e.a4) * p.x + Rat(e.a6);
  return lhs == rhs;
}

CurvePoint point_negate(const WeierstrassCurve& e, const CurvePoint& p) {
  if (p.infinity) return p;
  return CurvePoint::affine(p.x, -p.y - Rat(e.a1) * p.x - Rat(e.a3));
}

CurvePoint point_add(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q) {
  if (!on_curve(e, p) || !on_curve(e, q))
    throw std::invalid_argument("point_add: input off curve");
  if (p.infinity) return q;
  if (q.infinity) return p;

  Rat lambda;
  if (p.x != q.x) {
    lambda = (q.y - p.y) / (q.x - p.x);
  } else {
    // same x: either inverses or a doubling
    CurvePoint neg = point_negate(e, q);
    if (p.y == neg.y) return CurvePoint::at_infinity();
    Rat denom = 2 * p.y + Rat(e.a1) * p.x + Rat(e.a3);
    lambda = (3 * p.x * p.x + 2 * Rat(e.a2) * p.x + Rat(e.a4) - Rat(e.a1) * p.y) / denom;
  }
  Rat x3 = lambda * lambda + Rat(e.a1) * lambda - Rat(e.a2) - p.x - q.x;
  Rat y3 = lambda * (p.x - x3) - p.y - Rat(e.a1) * x3 - Rat(e.a3);
  return CurvePoint::affine(x3, y3);
}

CurvePoint point_mul(const WeierstrassCurve& e, const CurvePoint& p, long n) {
  if (!on_curve(e, p)) throw std::invalid_argument("point_mul: input off curve");
  CurvePoint base = p;
  if (n < 0) {
    base = point_negate(e, p);
    n = -n;
  }
  CurvePoint acc = CurvePoint::at_infinity();
  while (n > 0) {
    if (n & 1) acc = point_add(e, acc, base);
    n >>= 1;
    if (n) base = point_add(e, base, base);
  }
  return acc;
}

Int shared_denominator(const CurvePoint& p) {
  if (p.infinity) throw std::invalid_argument("shared_denominator: point at infinity");
  Int dx = p.x.get_den();  // = d^2
  Int dy = p.y.get_den();  // = d^3
  Int d = isqrt(dx);
  if (d * d != dx) throw std::logic_error("denominator of x is not a square");
  if (d * d * d != dy) throw std::logic_error("x and y denominators do not share d");
  return d;
}

DenominatorInfo denominator_and_omega(const CurvePoint& p, long bound) {
  DenominatorInfo info;
  if (p.infinity) {
    info.is_infinity = true;  // omega_E(0) = +infinity
    info.d = 0;
    return info;
  }
  info.d = shared_denominator(p);
  Int rest = info.d;
  for (long q = 2; q <= bound && rest > 1; q = (q == 2 ? 3 : q + 2)) {
    if (Int(q) * q > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), (unsigned long)q)) {
      ++info.omega;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), (unsigned long)q))
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), (unsigned long)q);
    }
  }
  if (rest > 1) {
    // every factor <= bound is removed, so rest < bound^2 proves primality
    if (rest < Int(bound) * bound)
      ++info.omega;
    else
      info.cofactor = true;  // unfactored; omega is a lower bound
  }
  return info;
}

Int eds_discriminant(const Int& w2, const Int& w3, const Int& w4) {
  Int W2 = w2, W3 = w3, W4 = w4;
  auto pw = [](const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
  };
  return W4 * pw(W2, 15) - pw(W3, 3) * pw(W2, 12) + 3 * W4 * W4 * pw(W2, 10) -
         20 * W4 * pw(W3, 3) * pw(W2, 7) + 4 * pw(W4, 3) * pw(W2, 5) +
         16 * pw(W3, 6) * pw(W2, 4) + 8 * W4 * W4 * pw(W3, 3) * W2 * W2 + pw(W4, 4);
}

EdsState eds_extend(const Int& w2, const Int& w3, const Int& w4, long N) {
  if (w2 == 0 || w3 == 0) throw std::invalid_argument("eds_extend: W2 W3 != 0 required");
  if (!mpz_divisible_p(w4.get_mpz_t(), w2.get_mpz_t()))
    throw std::invalid_argument("eds_extend: W2 | W4 required");
  if (eds_discriminant(w2, w3, w4) == 0)
    throw std::invalid_argument("eds_extend: singular initial data (discriminant vanishes)");
  if (N < 0) throw std::invalid_argument("eds_extend: N >= 0");

  EdsState s;
  s.w.resize((size_t)N + 1);
  if (N >= 0) s.w[0] = 0;
  if (N >= 1) s.w[1] = 1;
  if (N >= 2) s.w[2] = w2;
  if (N >= 3) s.w[3] = w3;
  if (N >= 4) s.w[4] = w4;
  for (long n = 5; n <= N; ++n) {
    // specialization (m, n) = (N-2, 2) of the EDS relation
    Int num = w2 * w2 * s.w[(size_t)(n - 1)] * s.w[(size_t)(n - 3)] -
              w3 * s.w[(size_t)(n - 2)] * s.w[(size_t)(n - 2)];
    s.w[(size_t)n] = exact_div(num, s.w[(size_t)(n - 4)], "eds_extend");
  }
  return s;
}

// ---- reduction mod ell ----------------------------------------------------

namespace {

struct FpPoint {
  bool infinity = true;
  long x = 0, y = 0;
};

struct FpCurve {
  long ell;
  long a1, a2, a3, a4, a6;
};

FpCurve reduce_curve(const WeierstrassCurve& e, long ell) {
  auto red = [&](const Int& v) {
    Int r = v % ell;
    long x = (long)r.get_si();
    return ((x % ell) + ell) % ell;
  };
  return FpCurve{ell, red(e.a1), red(e.a2), red(e.a3), red(e.a4), red(e.a6)};
}

FpPoint fp_negate(const FpCurve& c, const FpPoint& p) {
  if (p.infinity) return p;
  long ell = c.ell;
  long y = ((-p.y - c.a1 * p.x - c.a3) % ell + ell) % ell;
  return FpPoint{false, p.x, y};
}

FpPoint fp_add(const FpCurve& c, const FpPoint& p, const FpPoint& q) {
  long ell = c.ell;
  if (p.infinity) return q;
  if (q.infinity) return p;
  long lambda;
  if (p.x != q.x) {
    lambda = (q.y - p.y) % ell * inv_mod((q.x - p.x) % ell, ell) % ell;
  } else {
    FpPoint neg = fp_negate(c, q);
    if (p.y == neg.y) return FpPoint{};
    long denom = (2 * p.y + c.a1 * p.x + c.a3) % ell;
    long num = (3 * p.x % ell * p.x + 2 * c.a2 * p.x + c.a4 - c.a1 * p.y) % ell;
    lambda = num * inv_mod(denom, ell) % ell;
  }
  lambda = ((lambda % ell) + ell) % ell;
  long x3 = ((lambda * lambda + c.a1 * lambda - c.a2 - p.x - q.x) % ell + ell) % ell;
  long y3 = ((lambda * (p.x - x3) - p.y - c.a1 * x3 - c.a3) % ell + ell) % ell;
  return FpPoint{false, x3, y3};
}

FpPoint reduce_point(const WeierstrassCurve& e, const CurvePoint& p, long ell) {
  if (p.infinity) return FpPoint{};
  Int d = shared_denominator(p);
  if (mpz_divisible_ui_p(d.get_mpz_t(), (unsigned long)ell)) return FpPoint{};  // reduces to 0
  auto red_rat = [&](const Rat& v) {
    Int num = v.get_num() % ell;
    Int den = v.get_den() % ell;
    long n = ((long)num.get_si() % ell + ell) % ell;
    long dd = ((long)den.get_si() % ell + ell) % ell;
    return n * inv_mod(dd, ell) % ell;
  };
  (void)e;
  return FpPoint{false, red_rat(p.x), red_rat(p.y)};
}

}  // namespace

long curve_order_mod(const WeierstrassCurve& e, long ell) {
  if (mpz_divisible_ui_p(e.discriminant.get_mpz_t(), (unsigned long)ell))
    throw std::invalid_argument("curve_order_mod: bad reduction prime");
  FpCurve c = reduce_curve(e, ell);
  long count = 1;  // infinity
  if (ell == 2) {
    for (long x = 0; x < 2; ++x)
      for (long y = 0; y < 2; ++y) {
        long lhs = (y * y + c.a1 * x * y + c.a3 * y) % 2;
        long rhs = (x * x * x + c.a2 * x * x + c.a4 * x + c.a6) % 2;
        if (((lhs - rhs) % 2 + 2) % 2 == 0) ++count;
      }
    return count;
  }
  // complete the square in y: #roots = 1 + chi(b^2 + 4 rhs), b = a1 x + a3
  for (long x = 0; x < ell; ++x) {
    long b = (c.a1 * x + c.a3) % ell;
    long rhs = ((x * x % ell * x + c.a2 * x % ell * x + c.a4 * x + c.a6) % ell + ell) % ell;
    long disc = ((b * b + 4 * rhs) % ell + ell) % ell;
    if (disc == 0)
      count += 1;
    else if (is_square_mod(disc, ell))
      count += 2;
  }
  return count;
}

long order_mod_ell(const WeierstrassCurve& e, const CurvePoint& p, long ell) {
  if (!is_prime_u64((uint64_t)ell)) throw std::invalid_argument("order_mod_ell: ell prime required");
  if (mpz_divisible_ui_p(e.discriminant.get_mpz_t(), (unsigned long)ell))
    throw std::invalid_argument("order_mod_ell: bad reduction prime");
  if (!on_curve(e, p)) throw std::invalid_argument("order_mod_ell: point off curve");

  FpCurve c = reduce_curve(e, ell);
  FpPoint base = reduce_point(e, p, ell);
  if (base.infinity) return 1;
  FpPoint acc = base;
  long order = 1;
  long limit = 2 * ell + 10;  // Hasse bound ceiling
  while (!acc.infinity) {
    acc = fp_add(c, acc, base);
    ++order;
    if (order > limit) throw std::logic_error("order_mod_ell: exceeded Hasse bound");
  }
  return order;
}

NuCoverage nu_coverage(const WeierstrassCurve& e, const CurvePoint& p, long ell_max,
                       long target_max) {
  std::vector<char> hit((size_t)target_max + 1, 0);
  for (long ell : primes_up_to(ell_max)) {
    if (mpz_divisible_ui_p(e.discriminant.get_mpz_t(), (unsigned long)ell)) continue;
    long nu = order_mod_ell(e, p, ell);
    if (nu <= target_max && is_prime_u64((uint64_t)nu)) hit[(size_t)nu] = 1;
  }
  NuCoverage cov;
  auto targets = primes_up_to(target_max);
  for (long q : targets) {
    if (hit[(size_t)q])
      cov.covered_primes.push_back(q);
    else
      cov.missing_primes.push_back(q);
  }
  cov.coverage = targets.empty() ? 1.0 : (double)cov.covered_primes.size() / (double)targets.size();
  return cov;
}

}  // namespace sievelab
