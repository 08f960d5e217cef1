#pragma once

#include <cstdint>
#include <vector>

namespace sievelab {

std::vector<long> primes_up_to(long n);
bool is_prime_u64(uint64_t n);

long gcd_long(long a, long b);
long euler_phi(long n);
bool is_squarefree_long(long n);

// Legendre-symbol square test; 0 counts as a square (Appendix-B convention).
bool is_square_mod(long a, long p);

long pow_mod(long base, long exp, long mod);
long inv_mod(long a, long p);

// Odd squarefree integers in [1, L], ascending (m = 1 included).
std::vector<long> odd_squarefree_up_to(long L);

// Squarefree products of a set of distinct primes, optionally capped:
// cap_kind 0: no cap; 1: product m <= cap; 2: psi(m) = prod (ell+1) <= cap.
std::vector<std::vector<long>> squarefree_subsets(const std::vector<long>& primes,
                                                  int cap_kind, long cap);

// SplitMix64, used to derive independent per-trial seeds from a master seed.
uint64_t splitmix64(uint64_t x);

}  // namespace sievelab
