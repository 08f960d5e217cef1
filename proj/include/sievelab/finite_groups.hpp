#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "sievelab/rational.hpp"

namespace sievelab {

// Dense little matrix over F_ell, n <= 4.
struct MatFp {
  int n = 0;
  long ell = 0;
  std::array<uint8_t, 16> a{};  // row-major

  uint8_t& at(int i, int j) { return a[(size_t)(i * n + j)]; }
  uint8_t at(int i, int j) const { return a[(size_t)(i * n + j)]; }
  static MatFp identity(int n, long ell);
  uint64_t key() const;  // injective encoding, for hashing
};

MatFp mul(const MatFp& x, const MatFp& y);
long det_mod(const MatFp& m);
long trace_mod(const MatFp& m);

// Characteristic polynomial det(T - g) over F_ell, monic, coeffs[0..n].
std::vector<long> charpoly_mod(const MatFp& m);
// Reversed characteristic polynomial det(1 - T g), coeffs[0..n], c0 = 1.
std::vector<long> reversed_charpoly_mod(const MatFp& m);

bool poly_irreducible_mod(const std::vector<long>& monic_coeffs, long ell);

enum class GroupFamily { SL, Sp, CSp };

struct MatrixGroupSpec {
  GroupFamily family = GroupFamily::SL;
  int degree = 2;   // n for SL, 2g for Sp/CSp
  long ell = 3;     // odd prime (>= 3)

  int genus() const { return degree / 2; }
  void validate() const;
};

// Closed-form group orders.
Int group_order(const MatrixGroupSpec& spec);
Int sl_order(int n, long ell);
Int sp_order(int g, long ell);

// Multiplicator of a symplectic similitude w.r.t. the standard form
// J = [[0, I], [-I, 0]]; returns 0 if g is not a similitude.
long multiplicator(const MatFp& m);

// Yields every group element exactly once. Strategies: SL by row completion,
// Sp(2)/CSp(2) by filtering 2x2 matrices, Sp(4)/CSp(4) by generator closure
// (transvections), with the order formula as the correctness oracle.
// Enumeration is gated at order <= 10^7.
void enumerate_group(const MatrixGroupSpec& spec, const std::function<void(const MatFp&)>& fn);

struct DensityResult {
  Int count;
  Int divisor;       // |G| for parts 1-2, |Sp(2g)| for parts 3-6
  Int order;         // |G|, for reporting
};

// Appendix-B local densities. Parts: (1) irreducible charpoly, (2) entry
// (i,j) is a non-square, (3) det(g-1) square on the fiber m(g)=q, (4)
// q+1-Tr(g) square on the fiber, (5) det(g-1)=0 on the fiber, (6)
// q+1-Tr(g)=0 on the fiber. 0 counts as a square. Parts 3-6 require CSp and
// a fiber q; part 2 takes the entry (i,j), 0-based.
DensityResult local_density(const MatrixGroupSpec& spec, int part, long fiber_q = 0,
                            int entry_i = 0, int entry_j = 0);

enum class QSymplecticPredicate { f1_square, trace_square, f1_zero, trace_qplus1 };

// Census over all q-symplectic polynomials (bijective coefficients
// (a_1..a_g) in F_ell^g, completed by a_{g+k} = q^k a_{g-k}, a_0 = 1,
// a_2g = q^g). Returns (count, total = ell^g).
std::pair<Int, Int> q_symplectic_census(long ell, int g, long q, QSymplecticPredicate pred);

// Full coefficient vector (length 2g+1) of the q-symplectic polynomial with
// prescribed a_1..a_g.
std::vector<long> q_symplectic_complete(long ell, int g, long q, const std::vector<long>& a);

// Checks the q-symplectic palindromic identity a_{g+k} = q^k a_{g-k} mod ell.
bool is_q_symplectic(const std::vector<long>& coeffs, long ell, int g, long q);

}  // namespace sievelab
