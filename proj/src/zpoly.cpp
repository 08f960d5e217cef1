#include "sievelab/zpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sievelab/numutil.hpp"

namespace sievelab {

int zpoly_degree(const ZPoly& f) {
  for (int k = (int)f.size() - 1; k >= 0; --k)
    if (f[(size_t)k] != 0) return k;
  return -1;
}

Int zpoly_eval(const ZPoly& f, const Int& x) {
  Int v = 0;
  for (int k = (int)f.size() - 1; k >= 0; --k) v = v * x + f[(size_t)k];
  return v;
}

ZPoly charpoly_int(const std::vector<std::vector<Int>>& a) {
  size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("charpoly_int: square matrix required");
  auto matmul = [&](const std::vector<std::vector<Int>>& x, const std::vector<std::vector<Int>>& y) {
    std::vector<std::vector<Int>> z(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (x[i][k] == 0) continue;
        for (size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
      }
    return z;
  };
  auto trace = [&](const std::vector<std::vector<Int>>& x) {
    Int t = 0;
    for (size_t i = 0; i < n; ++i) t += x[i][i];
    return t;
  };

  ZPoly c(n + 1, Int(0));
  c[n] = 1;
  std::vector<std::vector<Int>> b(n, std::vector<Int>(n, Int(0)));
  for (size_t i = 0; i < n; ++i) b[i][i] = 1;  // B_0 = I
  Int ck = 0;
  for (size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      // B_k = A*B_{k-1} + c_{k-1} I
      b = matmul(a, b);
      for (size_t i = 0; i < n; ++i) b[i][i] += ck;
    }
    auto ab = matmul(a, b);
    ck = exact_div(-trace(ab), Int((long)k), "charpoly_int");
    c[n - k] = ck;
  }
  return c;
}

bool zpoly_divides_monic(const ZPoly& h, const ZPoly& f) {
  int dh = zpoly_degree(h), df = zpoly_degree(f);
  if (dh < 0 || df < 0 || dh > df) return false;
  if (h[(size_t)dh] != 1) throw std::invalid_argument("zpoly_divides_monic: divisor must be monic");
  ZPoly rem(f);
  for (int k = df; k >= dh; --k) {
    Int q = rem[(size_t)k];
    if (q == 0) continue;
    for (int j = 0; j <= dh; ++j) rem[(size_t)(k - dh + j)] -= q * h[(size_t)j];
    rem[(size_t)k] = 0;  // defensive; loop above zeroes it via j = dh
  }
  for (int k = 0; k < dh; ++k)
    if (rem[(size_t)k] != 0) return false;
  return true;
}

// ---- arithmetic of polynomials over F_p (small p) ------------------------

namespace {

using PPoly = std::vector<long>;  // coeffs mod p, index = degree

void ptrim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmod_from_zpoly(const ZPoly& f, long p) {
  PPoly out(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    Int r = f[i] % p;
    long v = (long)r.get_si() % p;
    out[i] = ((v % p) + p) % p;
  }
  ptrim(out);
  return out;
}

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  ptrim(c);
  return c;
}

// division by arbitrary nonzero divisor
PPoly pdivrem(PPoly a, const PPoly& b, long p, PPoly* quot = nullptr) {
  ptrim(a);
  PPoly q;
  if ((int)a.size() >= (int)b.size()) q.assign(a.size() - b.size() + 1, 0);
  long lead_inv = inv_mod(b.back(), p);
  while ((int)a.size() >= (int)b.size()) {
    long c = a.back() * lead_inv % p;
    size_t shift = a.size() - b.size();
    if (c != 0) {
      q[shift] = c;
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    }
    a.pop_back();
    ptrim(a);
  }
  if (quot) {
    ptrim(q);
    *quot = q;
  }
  return a;
}

PPoly pgcd(PPoly a, PPoly b, long p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    PPoly r = pdivrem(a, b, p);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    long inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, long p) {
  return pdivrem(pmul(a, b, p), f, p);
}

PPoly ppowmod_x_pe(const PPoly& f, long p, const Int& e) {
  // x^(p^e...) -- generic: base^k mod f with big exponent
  PPoly base = {0, 1};
  base = pdivrem(base, f, p);
  PPoly result = {1};
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = pmulmod(result, base, f, p);
    base = pmulmod(base, base, f, p);
    k >>= 1;
  }
  return result;
}

PPoly pderiv(const PPoly& f, long p) {
  PPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back((long)(i % (size_t)p) * f[i] % p);
  ptrim(d);
  return d;
}

bool psquarefree(const PPoly& f, long p) {
  PPoly d = pderiv(f, p);
  if (d.empty()) return false;
  return pgcd(f, d, p).size() == 1;
}

PPoly psub(const PPoly& a, const PPoly& b, long p) {
  PPoly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    long av = i < a.size() ? a[i] : 0;
    long bv = i < b.size() ? b[i] : 0;
    c[i] = ((av - bv) % p + p) % p;
  }
  ptrim(c);
  return c;
}

bool rabin_irreducible(const PPoly& f, long p) {
  int d = (int)f.size() - 1;
  if (d <= 0) return false;
  if (d == 1) return true;
  Int pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), (unsigned long)p, (unsigned long)d);
  PPoly xq = ppowmod_x_pe(f, p, pd);  // x^(p^d) mod f
  if (psub(xq, {0, 1}, p).size() != 0) return false;
  // for each prime t | d, gcd(x^(p^(d/t)) - x, f) must be 1
  int dd = d;
  std::vector<int> prime_divs;
  for (int t = 2; t <= dd; ++t)
    if (dd % t == 0) {
      prime_divs.push_back(t);
      while (dd % t == 0) dd /= t;
    }
  for (int t : prime_divs) {
    Int pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), (unsigned long)p, (unsigned long)(d / t));
    PPoly xe = ppowmod_x_pe(f, p, pe);
    PPoly g = pgcd(psub(xe, {0, 1}, p), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// deterministic little PRNG for equal-degree splitting
struct SplitRng {
  uint64_t state;
  explicit SplitRng(uint64_t s) : state(s) {}
  long next(long p) {
    state = splitmix64(state);
    return (long)(state % (uint64_t)p);
  }
};

void equal_degree_split(const PPoly& h, int d, long p, SplitRng& rng, std::vector<PPoly>& out) {
  int deg = (int)h.size() - 1;
  if (deg == d) {
    out.push_back(h);
    return;
  }
  for (;;) {
    // random monic poly of degree deg-1
    PPoly a((size_t)deg, 0);
    for (size_t i = 0; i + 1 < a.size(); ++i) a[i] = rng.next(p);
    a.back() = 1;
    PPoly g = pgcd(a, h, p);
    if (g.size() > 1 && (int)g.size() - 1 < deg) {
      PPoly cof;
      pdivrem(h, g, p, &cof);
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(cof, d, p, rng, out);
      return;
    }
    PPoly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1)) mod h
      b = a;
      PPoly t = a;
      for (int i = 1; i < d; ++i) {
        t = pmulmod(t, t, h, p);
        b = psub(b, psub({}, t, p), p);  // b += t
      }
    } else {
      Int e;
      mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)p, (unsigned long)d);
      e = (e - 1) / 2;
      // a^e mod h
      PPoly base = pdivrem(a, h, p);
      PPoly result = {1};
      Int k = e;
      while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = pmulmod(result, base, h, p);
        base = pmulmod(base, base, h, p);
        k >>= 1;
      }
      b = psub(result, {1}, p);
    }
    PPoly g2 = pgcd(b, h, p);
    if (g2.size() > 1 && (int)g2.size() - 1 < deg) {
      PPoly cof;
      pdivrem(h, g2, p, &cof);
      equal_degree_split(g2, d, p, rng, out);
      equal_degree_split(cof, d, p, rng, out);
      return;
    }
  }
}

// f monic squarefree mod p; returns its monic irreducible factors
std::vector<PPoly> factor_mod_p(const PPoly& f, long p, uint64_t seed) {
  std::vector<PPoly> out;
  PPoly rest = f;
  SplitRng rng(seed);
  PPoly x = {0, 1};
  PPoly xq = pdivrem(x, rest, p);
  int d = 0;
  while ((int)rest.size() - 1 > 0) {
    ++d;
    if (2 * d > (int)rest.size() - 1) {
      out.push_back(rest);  // remaining factor is irreducible
      break;
    }
    // xq = x^(p^d) mod rest
    Int pe(p);
    xq = ppowmod_x_pe(rest, p, [&] {
      Int t;
      mpz_ui_pow_ui(t.get_mpz_t(), (unsigned long)p, (unsigned long)d);
      return t;
    }());
    PPoly g = pgcd(psub(xq, x, p), rest, p);
    if (g.size() > 1) {
      equal_degree_split(g, d, p, rng, out);
      PPoly cof;
      pdivrem(rest, g, p, &cof);
      rest = cof;
    }
  }
  return out;
}

// ---- Hensel lifting to Z/p^K ---------------------------------------------

using MPoly = std::vector<Int>;  // coefficients mod m (canonical in [0, m))

void mtrim(MPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

MPoly mreduce(const ZPoly& f, const Int& m) {
  MPoly out(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    out[i] = f[i] % m;
    if (out[i] < 0) out[i] += m;
  }
  mtrim(out);
  return out;
}

MPoly mmul(const MPoly& a, const MPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  MPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % m;
  }
  mtrim(c);
  return c;
}




// lift f = g*h (mod p) with fixed Bezout s*g + t*h = 1 (mod p) to mod p^K
void hensel_pair(const MPoly& f, PPoly g0, PPoly h0, long p, int K, MPoly& g_out, MPoly& h_out) {
  // Bezout over F_p via extended Euclid
  auto ext_gcd = [&](PPoly a, PPoly b, PPoly& s, PPoly& t) {
    PPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!b.empty()) {
      PPoly q;
      PPoly r = pdivrem(a, b, p, &q);
      a = b;
      b = r;
      PPoly s2 = psub(s0, pmul(q, s1, p), p);
      PPoly t2 = psub(t0, pmul(q, t1, p), p);
      s0 = s1; s1 = s2;
      t0 = t1; t1 = t2;
    }
    long inv = inv_mod(a.back(), p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    s = s0;
    t = t0;
  };
  PPoly s, t;
  ext_gcd(g0, h0, s, t);

  Int pk(p);
  Int pK;
  mpz_ui_pow_ui(pK.get_mpz_t(), (unsigned long)p, (unsigned long)K);

  auto to_mp = [&](const PPoly& a) {
    MPoly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    return out;
  };
  MPoly g = to_mp(g0), h = to_mp(h0);

  int k = 1;
  while (k < K) {
    Int pk1 = pk * p;  // p^(k+1)
    // e = (f - g h)/p^k  (exact), then corrections mod p
    MPoly gh = mmul(g, h, pk1);
    MPoly e(std::max(f.size(), gh.size()), Int(0));
    for (size_t i = 0; i < e.size(); ++i) {
      Int fv = i < f.size() ? (f[i] % pk1 + pk1) % pk1 : Int(0);
      Int gv = i < gh.size() ? gh[i] : Int(0);
      Int diff = (fv - gv) % pk1;
      if (diff < 0) diff += pk1;
      e[i] = exact_div(diff, pk, "hensel");
    }
    mtrim(e);
    // v = (s e) rem h mod p ; u = (e - g v)/h mod p (exact)
    PPoly ep((size_t)e.size());
    for (size_t i = 0; i < e.size(); ++i) ep[i] = (long)mpz_fdiv_ui(e[i].get_mpz_t(), (unsigned long)p);
    ptrim(ep);
    PPoly v = pdivrem(pmul(s, ep, p), h0, p);
    PPoly rest = psub(ep, pmul(g0, v, p), p);
    PPoly u;
    PPoly rr = pdivrem(rest, h0, p, &u);
    if (!rr.empty()) throw std::runtime_error("hensel: division not exact");
    // g += p^k u ; h += p^k v
    auto bump = [&](MPoly& target, const PPoly& corr) {
      if (target.size() < corr.size()) target.resize(corr.size(), Int(0));
      for (size_t i = 0; i < corr.size(); ++i)
        target[i] = (target[i] + pk * corr[i]) % pK;
      mtrim(target);
    };
    bump(g, u);
    bump(h, v);
    pk = pk1;
    ++k;
  }
  g_out = g;
  h_out = h;
}

void lift_all(const MPoly& f, const std::vector<PPoly>& factors, long p, int K,
              std::vector<MPoly>& out) {
  if (factors.size() == 1) {
    out.push_back(f);
    return;
  }
  PPoly g0 = factors[0];
  PPoly h0 = {1};
  for (size_t i = 1; i < factors.size(); ++i) h0 = pmul(h0, factors[i], p);
  MPoly g, h;
  hensel_pair(f, g0, h0, p, K, g, h);
  out.push_back(g);
  std::vector<PPoly> rest(factors.begin() + 1, factors.end());
  lift_all(h, rest, p, K, out);
}

}  // namespace

std::vector<int> factor_degrees_mod(const ZPoly& f, long p) {
  PPoly fp = pmod_from_zpoly(f, p);
  if ((int)fp.size() - 1 != zpoly_degree(f))
    throw std::invalid_argument("factor_degrees_mod: leading coefficient vanishes mod p");
  if (!psquarefree(fp, p)) throw std::invalid_argument("factor_degrees_mod: not squarefree mod p");
  auto factors = factor_mod_p(fp, p, 0x5eedULL ^ (uint64_t)p);
  std::vector<int> degs;
  for (const auto& g : factors) degs.push_back((int)g.size() - 1);
  std::sort(degs.begin(), degs.end());
  return degs;
}

bool rational_irreducibility(const ZPoly& f) {
  int d = zpoly_degree(f);
  if (d < 1) throw std::invalid_argument("rational_irreducibility: degree >= 1 required");
  if (d > 6) throw std::invalid_argument("rational_irreducibility: degree <= 6 required");
  if (f[(size_t)d] != 1) throw std::invalid_argument("rational_irreducibility: non-monic input");
  if (d == 1) return true;

  // repeated factors over Q: gcd(f, f') nonconstant => reducible
  {
    std::vector<Rat> a(f.size()), b;
    for (size_t i = 0; i < f.size(); ++i) a[i] = Rat(f[i]);
    for (size_t i = 1; i < f.size(); ++i) b.push_back(Rat((long)i) * Rat(f[i]));
    auto qtrim = [](std::vector<Rat>& v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
    };
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
      // a mod b
      std::vector<Rat> r = a;
      while (r.size() >= b.size() && !r.empty()) {
        Rat c = r.back() / b.back();
        size_t shift = r.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        r.pop_back();
        qtrim(r);
      }
      a = b;
      b = r;
    }
    if (a.size() > 1) return false;
  }

  // fixed prime list certificates
  static const long kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  long base_prime = 0;
  for (long p : kPrimes) {
    PPoly fp = pmod_from_zpoly(f, p);
    if ((int)fp.size() - 1 != d) continue;  // monic, so never happens; guard anyway
    if (!psquarefree(fp, p)) continue;
    if (rabin_irreducible(fp, p)) return true;
    if (base_prime == 0) base_prime = p;
  }
  if (base_prime == 0) {
    // disc shares a factor with every listed prime; scan onward
    for (long p = 101; p < 100000; p += 2) {
      if (!is_prime_u64((uint64_t)p)) continue;
      PPoly fp = pmod_from_zpoly(f, p);
      if (psquarefree(fp, p)) {
        if (rabin_irreducible(fp, p)) return true;
        base_prime = p;
        break;
      }
    }
    if (base_prime == 0) throw std::runtime_error("rational_irreducibility: no good prime found");
  }

  // exact fallback: Zassenhaus factor search bounded by the Mignotte bound
  long p = base_prime;
  PPoly fp = pmod_from_zpoly(f, p);
  auto factors = factor_mod_p(fp, p, 0xfacade ^ (uint64_t)p);
  if (factors.size() == 1) return true;

  // Mignotte: any monic factor of f has |coeffs| <= 2^d * ||f||_2
  Int norm2 = 0;
  for (const Int& c : f) norm2 += c * c;
  Int bound = (isqrt(norm2) + 1);
  bound <<= (unsigned)d;
  Int need = 2 * bound + 1;
  int K = 1;
  Int pK(p);
  while (pK < need) {
    pK *= p;
    ++K;
  }

  MPoly fm = mreduce(f, pK);
  std::vector<MPoly> lifted;
  lift_all(fm, factors, p, K, lifted);

  size_t r = lifted.size();
  for (uint32_t mask = 1; mask + 1 < (1u << r); ++mask) {
    // candidate = product of chosen lifted factors, centered
    MPoly cand = {Int(1)};
    int deg = 0;
    for (size_t i = 0; i < r; ++i)
      if (mask & (1u << i)) deg += (int)lifted[i].size() - 1;
    if (deg > d / 2) continue;  // complement covers the other half
    for (size_t i = 0; i < r; ++i)
      if (mask & (1u << i)) cand = mmul(cand, lifted[i], pK);
    ZPoly h(cand.size());
    for (size_t i = 0; i < cand.size(); ++i) {
      Int c = cand[i];
      if (2 * c > pK) c -= pK;  // symmetric remainder
      h[i] = c;
    }
    if (zpoly_degree(h) < 1) continue;
    if (h[(size_t)zpoly_degree(h)] != 1) continue;  // true factors of monic f are monic
    if (zpoly_divides_monic(h, f)) return false;
  }
  return true;
}

}  // namespace sievelab
