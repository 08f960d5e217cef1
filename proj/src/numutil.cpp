#include "sievelab/numutil.hpp"

#include <numeric>
#include <stdexcept>

namespace sievelab {

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<char> comp(static_cast<size_t>(n) + 1, 0);
  for (long p = 2; p <= n; ++p) {
    if (comp[p]) continue;
    out.push_back(p);
    for (long q = p * p; q <= n; q += p) comp[q] = 1;
  }
  return out;
}

static uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((__uint128_t)a * b % m);
}

static uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // deterministic Miller-Rabin base set for 64-bit inputs
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_squarefree_long(long n) {
  if (n <= 0) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    while (n % p == 0) n /= p;
  }
  return true;
}

bool is_square_mod(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return true;
  if (p == 2) return true;
  return pow_mod(a, (p - 1) / 2, p) == 1;
}

long pow_mod(long base, long exp, long mod) {
  long r = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = (long)((__int128)r * base % mod);
    base = (long)((__int128)base * base % mod);
    exp >>= 1;
  }
  return r;
}

long inv_mod(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::domain_error("inv_mod: zero");
  return pow_mod(a, p - 2, p);
}

std::vector<long> odd_squarefree_up_to(long L) {
  std::vector<long> out;
  for (long m = 1; m <= L; m += 2)
    if (is_squarefree_long(m)) out.push_back(m);
  return out;
}

std::vector<std::vector<long>> squarefree_subsets(const std::vector<long>& primes,
                                                  int cap_kind, long cap) {
  std::vector<std::vector<long>> out;
  size_t k = primes.size();
  if (k > 24) throw std::invalid_argument("squarefree_subsets: too many primes");
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<long> m;
    __int128 prod = 1, psi = 1;
    bool ok = true;
    for (size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        m.push_back(primes[i]);
        prod *= primes[i];
        psi *= primes[i] + 1;
        if (cap_kind == 1 && prod > cap) { ok = false; break; }
        if (cap_kind == 2 && psi > cap) { ok = false; break; }
      }
    }
    if (!ok) continue;
    out.push_back(std::move(m));
  }
  return out;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace sievelab
