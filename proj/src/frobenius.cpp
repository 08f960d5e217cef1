#include "sievelab/frobenius.hpp"

#include <algorithm>
#include <stdexcept>

#include "sievelab/numutil.hpp"
#include "sievelab/parallel.hpp"
#include "sievelab/sieve_core.hpp"

namespace sievelab {

namespace {

// F_{q^r} as F_q[u]/(h) for a monic irreducible h of degree r. Elements are
// coefficient vectors of length r.
struct ExtField {
  long q;
  int r;
  std::vector<long> modulus;  // monic, degree r, coeffs[0..r]

  std::vector<long> mul(const std::vector<long>& a, const std::vector<long>& b) const {
    std::vector<long> prod((size_t)(2 * r - 1), 0);
    for (int i = 0; i < r; ++i) {
      if (a[(size_t)i] == 0) continue;
      for (int j = 0; j < r; ++j)
        prod[(size_t)(i + j)] = (prod[(size_t)(i + j)] + a[(size_t)i] * b[(size_t)j]) % q;
    }
    // reduce by the monic modulus
    for (int k = 2 * r - 2; k >= r; --k) {
      long c = prod[(size_t)k];
      if (c == 0) continue;
      for (int j = 0; j <= r; ++j) {
        int idx = k - r + j;
        prod[(size_t)idx] = ((prod[(size_t)idx] - c * modulus[(size_t)j]) % q + q) % q;
      }
    }
    prod.resize((size_t)r);
    return prod;
  }

  std::vector<long> pow(std::vector<long> base, Int e) const {
    std::vector<long> result((size_t)r, 0);
    result[0] = 1;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  bool is_zero(const std::vector<long>& a) const {
    return std::all_of(a.begin(), a.end(), [](long c) { return c == 0; });
  }

  // quadratic character: 0 -> 0, squares -> +1, non-squares -> -1
  int chi(const std::vector<long>& a) const {
    if (is_zero(a)) return 0;
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)q, (unsigned long)r);
    e = (e - 1) / 2;
    auto v = pow(a, e);
    if (v[0] == 1 && std::all_of(v.begin() + 1, v.end(), [](long c) { return c == 0; })) return 1;
    return -1;
  }
};

// monic irreducible of degree r over F_q, found by scanning constant tails
ExtField make_ext(long q, int r) {
  ExtField F;
  F.q = q;
  F.r = r;
  if (r == 1) {
    F.modulus = {0, 1};
    return F;
  }
  // scan candidates u^r + c_{r-1} u^{r-1} + ... + c_0
  std::vector<long> tail((size_t)r, 0);
  for (;;) {
    std::vector<long> cand(tail);
    cand.push_back(1);
    // irreducible iff no roots (r<=3) and, for r>=4, no small factors; here
    // we only need r <= 3 to stay cheap, and check divisibility generically
    bool irred = true;
    // root test in F_q
    for (long x = 0; x < q && irred; ++x) {
      long v = 0;
      for (int k = r; k >= 0; --k) v = (v * x + cand[(size_t)k]) % q;
      if (v % q == 0) irred = false;
    }
    if (irred && r >= 4) {
      // quadratic-factor test via gcd computations over F_q is overkill at
      // these sizes; test divisibility by all monic irreducible quadratics
      for (long b = 0; b < q && irred; ++b)
        for (long c = 0; c < q && irred; ++c) {
          bool has_root = false;
          for (long x = 0; x < q && !has_root; ++x)
            if ((x * x + b * x + c) % q == 0) has_root = true;
          if (has_root) continue;
          // divide cand by u^2 + b u + c
          std::vector<long> rem(cand);
          for (int k = r; k >= 2; --k) {
            long lead = rem[(size_t)k] % q;
            if (lead == 0) continue;
            rem[(size_t)k] = 0;
            rem[(size_t)(k - 1)] = ((rem[(size_t)(k - 1)] - lead * b) % q + q) % q;
            rem[(size_t)(k - 2)] = ((rem[(size_t)(k - 2)] - lead * c) % q + q) % q;
          }
          if (rem[0] == 0 && rem[1] == 0) irred = false;
        }
    }
    if (irred) {
      F.modulus = cand;
      return F;
    }
    // next tail
    int i = 0;
    while (i < r && ++tail[(size_t)i] == q) tail[(size_t)i++] = 0;
    if (i == r) throw std::logic_error("make_ext: no irreducible polynomial found");
  }
}

}  // namespace

void FamilySpec::validate() const {
  if (q < 5 || !is_prime_u64((uint64_t)q))
    throw std::invalid_argument("FamilySpec: q must be a prime >= 5");
  if (g < 1) throw std::invalid_argument("FamilySpec: g >= 1 required");
  if ((int)f_coeffs.size() != 2 * g + 1 || ((f_coeffs.back() % q) + q) % q != 1)
    throw std::invalid_argument("FamilySpec: f must be monic of degree 2g");
  // squarefree: gcd(f, f') = 1 over F_q
  std::vector<long> a(f_coeffs), b;
  for (auto& c : a) c = ((c % q) + q) % q;
  for (size_t i = 1; i < a.size(); ++i) b.push_back((long)(i % (size_t)q) * a[i] % q);
  auto trim = [](std::vector<long>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::vector<long> r(a);
    long inv = inv_mod(b.back(), q);
    while (r.size() >= b.size()) {
      long c = r.back() * inv % q;
      size_t shift = r.size() - b.size();
      if (c != 0)
        for (size_t i = 0; i < b.size(); ++i)
          r[shift + i] = ((r[shift + i] - c * b[i]) % q + q) % q;
      r.pop_back();
      trim(r);
    }
    a = b;
    b = r;
  }
  if (a.size() != 1) throw std::invalid_argument("FamilySpec: f must be squarefree");
}

std::vector<long> FamilySpec::excluded_fibers() const {
  std::vector<long> roots;
  for (long t = 0; t < q; ++t) {
    long v = 0;
    for (int k = 2 * g; k >= 0; --k) v = (v * t + f_coeffs[(size_t)k]) % q;
    if (((v % q) + q) % q == 0) roots.push_back(t);
  }
  return roots;
}

long point_count(const FamilySpec& spec, long t, int r) {
  spec.validate();
  if (r < 1 || r > spec.g)
    throw std::invalid_argument("point_count: 1 <= r <= g required");
  {
    long v = 0;
    for (int k = 2 * spec.g; k >= 0; --k) v = (v * t + spec.f_coeffs[(size_t)k]) % spec.q;
    if (((v % spec.q) + spec.q) % spec.q == 0)
      throw std::invalid_argument("point_count: excluded fiber (f(t) = 0)");
  }
  ExtField F = make_ext(spec.q, r);
  Int size;
  mpz_ui_pow_ui(size.get_mpz_t(), (unsigned long)spec.q, (unsigned long)r);
  if (size > 4'000'000) throw GateError("fiber_field", "point_count: q^r too large");
  long n = (long)size.get_ui();

  // iterate x over F_{q^r} in coefficient order
  long count = 1;  // point at infinity (deg = 2g+1 odd: exactly one)
  std::vector<long> x((size_t)r, 0);
  for (long it = 0; it < n; ++it) {
    // value = f(x)(x - t), f evaluated by Horner over the extension
    std::vector<long> fv((size_t)r, 0);
    fv[0] = 1;  // leading coefficient
    for (int k = 2 * spec.g - 1; k >= 0; --k) {
      fv = F.mul(fv, x);
      fv[0] = (fv[0] + ((spec.f_coeffs[(size_t)k] % spec.q) + spec.q) % spec.q) % spec.q;
    }
    std::vector<long> xt(x);
    xt[0] = ((xt[0] - t) % spec.q + spec.q) % spec.q;
    std::vector<long> prod = F.mul(fv, xt);
    count += 1 + F.chi(prod);
    // next x
    int i = 0;
    while (i < r && ++x[(size_t)i] == spec.q) x[(size_t)i++] = 0;
  }
  return count;
}

ZetaNumerator zeta_numerator(const FamilySpec& spec, long t) {
  spec.validate();
  ZetaNumerator zn;
  int g = spec.g;
  for (int r = 1; r <= g; ++r) {
    long cnt = point_count(spec, t, r);
    Int qr;
    mpz_ui_pow_ui(qr.get_mpz_t(), (unsigned long)spec.q, (unsigned long)r);
    zn.traces.push_back(qr + 1 - cnt);
  }
  // Newton: p_k - e1 p_{k-1} + ... + (-1)^(k-1) e_{k-1} p_1 + (-1)^k k e_k = 0
  // with p_r = a_r; c_i = (-1)^i e_i are the low coefficients of P_t.
  std::vector<Int> e((size_t)g + 1, Int(0));
  e[0] = 1;
  for (int k = 1; k <= g; ++k) {
    Int s = 0;  // sum_{i=1..k-1} (-1)^(i-1) e_i p_{k-i}
    for (int i = 1; i < k; ++i) {
      Int term = e[(size_t)i] * zn.traces[(size_t)(k - i - 1)];
      if (i % 2 == 1)
        s += term;
      else
        s -= term;
    }
    // p_k - s + (-1)^k k e_k = 0  =>  e_k = (-1)^(k-1) (p_k - s)/k
    Int diff = zn.traces[(size_t)(k - 1)] - s;
    Int ek = exact_div(diff, Int(k), "zeta_numerator: inconsistent counts");
    if (k % 2 == 0) ek = -ek;
    e[(size_t)k] = ek;
  }
  zn.coeffs.assign((size_t)(2 * g + 1), Int(0));
  zn.coeffs[0] = 1;
  for (int i = 1; i <= g; ++i) {
    Int ci = e[(size_t)i];
    if (i % 2 == 1) ci = -ci;  // c_i = (-1)^i e_i
    zn.coeffs[(size_t)i] = ci;
  }
  Int qk = 1;
  for (int k = 1; k <= g; ++k) {
    qk *= spec.q;
    zn.coeffs[(size_t)(g + k)] = qk * zn.coeffs[(size_t)(g - k)];
  }
  return zn;
}

Int jacobian_order(const ZetaNumerator& zn) {
  Int v = 0;
  for (const Int& c : zn.coeffs) v += c;
  if (v <= 0) throw std::logic_error("jacobian_order: nonpositive P(1)");
  return v;
}

bool count_within_weil(const FamilySpec& spec, long count) {
  long root = (long)isqrt(Int(4 * spec.q)).get_si();  // floor(2 sqrt q)
  long lo = spec.q + 1 - 2 * spec.g * root;
  long hi = spec.q + 1 + 2 * spec.g * root;
  return lo <= count && count <= hi;
}

bool zeta_is_q_symplectic(const ZetaNumerator& zn, long q, int g) {
  if ((int)zn.coeffs.size() != 2 * g + 1 || zn.coeffs[0] != 1) return false;
  Int qk = 1;
  for (int k = 1; k <= g; ++k) {
    qk *= q;
    if (zn.coeffs[(size_t)(g + k)] != qk * zn.coeffs[(size_t)(g - k)]) return false;
  }
  return true;
}

SquareCensus square_census(const FamilySpec& spec) {
  spec.validate();
  if ((spec.g == 1 && spec.q > 1000) || (spec.g == 2 && spec.q > 200) || spec.g > 2)
    throw GateError("fiber_sweep", "square_census: sweep gate exceeded");

  SquareCensus census;
  census.q = spec.q;
  census.g = spec.g;
  auto excluded = spec.excluded_fibers();
  census.excluded = (long)excluded.size();

  std::vector<long> ts;
  for (long t = 0; t < spec.q; ++t)
    if (std::find(excluded.begin(), excluded.end(), t) == excluded.end()) ts.push_back(t);
  census.fibers = (long)ts.size();

  std::vector<char> csq(ts.size(), 0), jsq(ts.size(), 0);
  parallel_for(0, ts.size(), [&](size_t i) {
    long t = ts[i];
    long c1 = point_count(spec, t, 1);
    ZetaNumerator zn = zeta_numerator(spec, t);
    Int j = jacobian_order(zn);
    csq[i] = is_perfect_square(Int(c1));
    jsq[i] = is_perfect_square(j);
  });
  for (size_t i = 0; i < ts.size(); ++i) {
    census.c_square += csq[i];
    census.j_square += jsq[i];
  }
  census.fraction_c_square = make_rat(census.c_square, census.fibers);
  census.fraction_j_square = make_rat(census.j_square, census.fibers);
  return census;
}

}  // namespace sievelab
