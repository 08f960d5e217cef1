#include "sievelab/walk_z.hpp"

#include <cmath>
#include <numbers>

#include "sievelab/numutil.hpp"

namespace sievelab {

WalkDistribution exact_distribution(long n) {
  if (n < 0) throw std::invalid_argument("exact_distribution: n >= 0 required");
  WalkDistribution d;
  d.n = n;
  d.pmf.assign((size_t)(2 * n + 1), Rat(0));
  Int denom = 1;
  denom <<= (unsigned)n;  // 2^n
  for (long k = -n; k <= n; ++k) {
    if (((k + n) & 1L) != 0) continue;  // parity: k = n mod 2
    Int num = binomial((unsigned long)n, (unsigned long)((n + k) / 2));
    d.pmf[(size_t)(k + n)] = Rat(num) / Rat(denom);
  }
  return d;
}

WalkDistribution exact_distribution_lazy(long n) {
  if (n < 0) throw std::invalid_argument("exact_distribution_lazy: n >= 0 required");
  WalkDistribution d;
  d.n = n;
  d.lazy = true;
  d.pmf.assign((size_t)(2 * n + 1), Rat(0));
  Int denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 3, (unsigned long)n);
  // P(S_n = k) = 3^-n sum_z n!/(z! (z+k)! (n-2z-k)!), z = number of -1 steps
  for (long k = -n; k <= n; ++k) {
    Int total = 0;
    for (long z = 0; z <= n; ++z) {
      long up = z + k, stay = n - 2 * z - k;
      if (up < 0 || stay < 0) continue;
      total += binomial((unsigned long)n, (unsigned long)z) *
               binomial((unsigned long)(n - z), (unsigned long)up);
    }
    d.pmf[(size_t)(k + n)] = Rat(total) / Rat(denom);
  }
  return d;
}

static void check_walk_modulus(long m) {
  if (m < 1 || m % 2 == 0 || !is_squarefree_long(m))
    throw std::invalid_argument("walk modulus must be odd squarefree");
}

double walk_w(long n, long a1, long m1, long a2, long m2) {
  check_walk_modulus(m1);
  check_walk_modulus(m2);
  if (gcd_long(((a1 % m1) + m1) % m1, m1) != 1 && m1 != 1)
    throw std::invalid_argument("walk_w: gcd(a1, m1) != 1");
  if (gcd_long(((a2 % m2) + m2) % m2, m2) != 1 && m2 != 1)
    throw std::invalid_argument("walk_w: gcd(a2, m2) != 1");
  double theta = 2.0 * std::numbers::pi * (double)(a1 * m2 - a2 * m1) / ((double)m1 * (double)m2);
  return std::pow(std::cos(theta), (double)n);
}

double walk_delta_bound(long n, long L) {
  if (n < 1 || L < 1) throw std::invalid_argument("walk_delta_bound: n, L >= 1 required");
  long sum = 0;
  for (long m : odd_squarefree_up_to(L)) sum += m;
  double c = std::abs(std::cos(2.0 * std::numbers::pi / ((double)L * (double)L)));
  return 1.0 + std::pow(c, (double)n) * (double)sum;
}

Rat prime_ap_probability(long n, long q, long a) {
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("prime_ap_probability: q must be odd >= 1");
  if (gcd_long(((a % q) + q) % q, q) != 1 && q != 1)
    throw std::invalid_argument("prime_ap_probability: gcd(a, q) != 1");
  WalkDistribution d = exact_distribution(n);
  Rat total = 0;
  for (long k = 2; k <= n; ++k) {
    if (!is_prime_u64((uint64_t)k)) continue;
    if (((k - a) % q + q) % q != 0) continue;
    total += d.at(k);
  }
  return total;
}

WalkSieveBound walk_corollary_bound(long n, long q, long L) {
  if (q < 1 || q % 2 == 0 || !is_squarefree_long(q))
    throw std::invalid_argument("walk_corollary_bound: q must be odd squarefree >= 1");
  if (L < q) throw std::invalid_argument("walk_corollary_bound: L >= q required");

  // divisors m' of q (q squarefree, so all divisors), with phi*(m') = phi(m')
  std::vector<long> qdiv;
  for (long d = 1; d <= q; ++d)
    if (q % d == 0) qdiv.push_back(d);

  WalkSieveBound b;
  b.L = L;
  b.h = 0;
  long weighted_sum = 0;
  for (long m = 1; m <= L / q; ++m) {
    if (gcd_long(m, 2 * q) != 1 || !is_squarefree_long(m)) continue;
    for (long mp : qdiv) {
      b.h += make_rat(euler_phi(mp), euler_phi(m));
      weighted_sum += m * q;
    }
  }
  double c = std::abs(std::cos(2.0 * std::numbers::pi / ((double)L * (double)L)));
  b.delta_bound = 1.0 + std::pow(c, (double)n) * (double)weighted_sum;
  return b;
}

WalkGramInstance walk_gram_instance(long n, long L) {
  if (n < 1 || L < 1) throw std::invalid_argument("walk_gram_instance: n, L >= 1 required");
  WalkGramInstance inst;
  std::vector<long> odd_primes;
  for (long p : primes_up_to(L))
    if (p % 2 == 1) odd_primes.push_back(p);

  for (long p : odd_primes) {
    SievePlace pl;
    pl.label = p;
    pl.size = (int)p;
    pl.density.assign((size_t)p, Rat(1, p));
    pl.in_omega.assign((size_t)p, 0);
    inst.system.places.push_back(std::move(pl));

    std::vector<std::vector<cd>> table((size_t)p, std::vector<cd>((size_t)p));
    for (long a = 0; a < p; ++a)
      for (long y = 0; y < p; ++y) {
        double th = 2.0 * std::numbers::pi * (double)(a * y % p) / (double)p;
        table[(size_t)a][(size_t)y] = cd(std::cos(th), std::sin(th));
      }
    inst.basis.tables.push_back(std::move(table));
  }
  inst.system.validate();

  WalkDistribution d = exact_distribution(n);
  for (long k = -n; k <= n; ++k) {
    Rat w = d.at(k);
    if (w == 0) continue;
    SiftableSample::Item it;
    it.weight = w;
    for (long p : odd_primes) it.values.push_back((int)(((k % p) + p) % p));
    inst.sample.items.push_back(std::move(it));
  }

  auto subsets = squarefree_subsets(odd_primes, 1, L);
  for (const auto& labels : subsets) {
    std::vector<int> m;
    for (long p : labels) m.push_back(inst.system.place_index(p));
    std::sort(m.begin(), m.end());
    inst.support.sets.push_back(std::move(m));
  }
  return inst;
}

}  // namespace sievelab
