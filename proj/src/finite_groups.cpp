#include "sievelab/finite_groups.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "sievelab/numutil.hpp"
#include "sievelab/sieve_core.hpp"

namespace sievelab {

static constexpr long kOrderGate = 10'000'000;

MatFp MatFp::identity(int n, long ell) {
  MatFp m;
  m.n = n;
  m.ell = ell;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

uint64_t MatFp::key() const {
  uint64_t k = 0;
  for (int i = 0; i < n * n; ++i) k = k * (uint64_t)ell + a[(size_t)i];
  return k;
}

MatFp mul(const MatFp& x, const MatFp& y) {
  MatFp z;
  z.n = x.n;
  z.ell = x.ell;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      long s = 0;
      for (int k = 0; k < x.n; ++k) s += (long)x.at(i, k) * y.at(k, j);
      z.at(i, j) = (uint8_t)(s % x.ell);
    }
  return z;
}

long det_mod(const MatFp& m) {
  // Gaussian elimination over F_ell
  long ell = m.ell;
  long mat[4][4];
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) mat[i][j] = m.at(i, j);
  long det = 1;
  for (int c = 0; c < m.n; ++c) {
    int piv = -1;
    for (int r = c; r < m.n; ++r)
      if (mat[r][c] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(mat[piv], mat[c]);
      det = ell - det;
    }
    det = det * mat[c][c] % ell;
    long inv = inv_mod(mat[c][c], ell);
    for (int r = c + 1; r < m.n; ++r) {
      if (mat[r][c] == 0) continue;
      long f = mat[r][c] * inv % ell;
      for (int j = c; j < m.n; ++j)
        mat[r][j] = ((mat[r][j] - f * mat[c][j]) % ell + ell) % ell;
    }
  }
  return det % ell;
}

long trace_mod(const MatFp& m) {
  long t = 0;
  for (int i = 0; i < m.n; ++i) t += m.at(i, i);
  return t % m.ell;
}

// Exact integer determinant by cofactor expansion; entries stay tiny (n <= 4).
static long det_small(const std::vector<std::vector<long>>& mm) {
  size_t k = mm.size();
  if (k == 1) return mm[0][0];
  long s = 0, sign = 1;
  for (size_t c = 0; c < k; ++c) {
    std::vector<std::vector<long>> minor;
    for (size_t r = 1; r < k; ++r) {
      std::vector<long> row;
      for (size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(mm[r][cc]);
      minor.push_back(std::move(row));
    }
    s += sign * mm[0][c] * det_small(minor);
    sign = -sign;
  }
  return s;
}

std::vector<long> charpoly_mod(const MatFp& m) {
  // Evaluate det(tI - g) exactly over Z at t = 0..n, Lagrange-interpolate
  // over Q, reduce mod ell. Field-size independent (works for n >= ell).
  long ell = m.ell;
  int n = m.n;
  std::vector<Rat> coeffs((size_t)n + 1, Rat(0));
  for (long t = 0; t <= n; ++t) {
    std::vector<std::vector<long>> mm((size_t)n, std::vector<long>((size_t)n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) mm[(size_t)r][(size_t)c] = (r == c ? t : 0) - (long)m.at(r, c);
    long value = det_small(mm);
    std::vector<Rat> term = {Rat(value)};
    Rat denom = 1;
    for (long j = 0; j <= n; ++j) {
      if (j == t) continue;
      std::vector<Rat> next(term.size() + 1, Rat(0));
      for (size_t k = 0; k < term.size(); ++k) {
        next[k + 1] += term[k];
        next[k] -= term[k] * Rat(j);
      }
      term = std::move(next);
      denom *= Rat(t - j);
    }
    for (size_t k = 0; k < term.size(); ++k) coeffs[k] += term[k] / denom;
  }
  std::vector<long> out((size_t)n + 1);
  for (int k = 0; k <= n; ++k) {
    Rat c = coeffs[(size_t)k];
    if (c.get_den() != 1) throw std::runtime_error("charpoly_mod: interpolation failure");
    long v = c.get_num().get_si() % ell;
    out[(size_t)k] = ((v % ell) + ell) % ell;
  }
  return out;
}

std::vector<long> reversed_charpoly_mod(const MatFp& m) {
  // det(T - g) = prod(T - lambda) has c_{n-k} = (-1)^k e_k(lambda), which is
  // exactly the T^k coefficient of det(1 - Tg) = prod(1 - lambda T).
  std::vector<long> cp = charpoly_mod(m);
  int n = m.n;
  std::vector<long> out((size_t)n + 1);
  for (int k = 0; k <= n; ++k) out[(size_t)k] = cp[(size_t)(n - k)];
  return out;
}

bool poly_irreducible_mod(const std::vector<long>& coeffs, long ell) {
  int deg = (int)coeffs.size() - 1;
  if (deg <= 0) return false;
  if (coeffs[(size_t)deg] % ell != 1)
    throw std::invalid_argument("poly_irreducible_mod: monic input required");
  if (deg == 1) return true;
  // roots kill degree 2, 3
  auto eval = [&](long x) {
    long v = 0;
    for (int k = deg; k >= 0; --k) v = (v * x + coeffs[(size_t)k]) % ell;
    return ((v % ell) + ell) % ell;
  };
  for (long x = 0; x < ell; ++x)
    if (eval(x) == 0) return false;
  if (deg <= 3) return true;
  // degree 4: also rule out irreducible-quadratic factors by trial division
  auto mod_div_exact = [&](const std::vector<long>& f, const std::vector<long>& g) {
    // returns true if g | f over F_ell (g monic)
    std::vector<long> rem(f);
    int df = (int)f.size() - 1, dg = (int)g.size() - 1;
    for (int k = df; k >= dg; --k) {
      long q = rem[(size_t)k] % ell;
      if (q == 0) continue;
      for (int j = 0; j <= dg; ++j)
        rem[(size_t)(k - dg + j)] =
            ((rem[(size_t)(k - dg + j)] - q * g[(size_t)j]) % ell + ell) % ell;
    }
    for (int k = 0; k < dg; ++k)
      if (rem[(size_t)k] % ell != 0) return false;
    return true;
  };
  for (long b = 0; b < ell; ++b)
    for (long c = 0; c < ell; ++c) {
      std::vector<long> g = {c, b, 1};
      bool has_root = false;
      for (long x = 0; x < ell && !has_root; ++x)
        if ((x * x + b * x + c) % ell == 0) has_root = true;
      if (has_root) continue;  // only irreducible quadratics matter
      if (mod_div_exact(coeffs, g)) return false;
    }
  return true;
}

void MatrixGroupSpec::validate() const {
  if (ell < 3 || !is_prime_u64((uint64_t)ell))
    throw std::invalid_argument("MatrixGroupSpec: ell must be an odd prime >= 3");
  if (degree < 2 || degree > 4)
    throw std::invalid_argument("MatrixGroupSpec: degree must be in {2,3,4}");
  if ((family == GroupFamily::Sp || family == GroupFamily::CSp) && degree % 2 != 0)
    throw std::invalid_argument("MatrixGroupSpec: symplectic degree must be even");
}

Int sl_order(int n, long ell) {
  // ell^(n(n-1)/2) * prod_{i=2..n} (ell^i - 1)
  Int q(ell), order = 1;
  Int qp;
  mpz_ui_pow_ui(qp.get_mpz_t(), (unsigned long)ell, (unsigned long)(n * (n - 1) / 2));
  order = qp;
  for (int i = 2; i <= n; ++i) {
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), (unsigned long)ell, (unsigned long)i);
    order *= t - 1;
  }
  return order;
}

Int sp_order(int g, long ell) {
  // ell^(g^2) * prod_{i=1..g} (ell^(2i) - 1)
  Int order;
  mpz_ui_pow_ui(order.get_mpz_t(), (unsigned long)ell, (unsigned long)(g * g));
  for (int i = 1; i <= g; ++i) {
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), (unsigned long)ell, (unsigned long)(2 * i));
    order *= t - 1;
  }
  return order;
}

Int group_order(const MatrixGroupSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case GroupFamily::SL: return sl_order(spec.degree, spec.ell);
    case GroupFamily::Sp: return sp_order(spec.genus(), spec.ell);
    case GroupFamily::CSp: return sp_order(spec.genus(), spec.ell) * (spec.ell - 1);
  }
  throw std::logic_error("unreachable");
}

// standard antisymmetric form J = [[0, I_g], [-I_g, 0]]
static MatFp standard_form(int n, long ell) {
  MatFp J;
  J.n = n;
  J.ell = ell;
  int g = n / 2;
  for (int i = 0; i < g; ++i) {
    J.at(i, g + i) = 1;
    J.at(g + i, i) = (uint8_t)(ell - 1);
  }
  return J;
}

long multiplicator(const MatFp& m) {
  MatFp J = standard_form(m.n, m.ell);
  // compute m^T J m
  MatFp mt;
  mt.n = m.n;
  mt.ell = m.ell;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) mt.at(i, j) = m.at(j, i);
  MatFp prod = mul(mul(mt, J), m);
  // must equal q * J for some q != 0
  long q = -1;
  int g = m.n / 2;
  q = prod.at(0, g);
  if (q == 0) return 0;
  MatFp expect = J;
  for (int i = 0; i < m.n * m.n; ++i)
    expect.a[(size_t)i] = (uint8_t)((long)expect.a[(size_t)i] * q % m.ell);
  for (int i = 0; i < m.n * m.n; ++i)
    if (expect.a[(size_t)i] != prod.a[(size_t)i]) return 0;
  return q;
}

// --- enumeration ---------------------------------------------------------

// SL(n): choose the first n-1 rows linearly independent, then the last row
// from the affine set {r : det = 1} (cofactor functional is nonzero).
static void enumerate_sl(int n, long ell, const std::function<void(const MatFp&)>& fn) {
  long size = 1;
  for (int i = 0; i < n; ++i) size *= ell;  // ell^n vectors per row

  auto decode = [&](long code) {
    std::array<long, 4> v{};
    for (int i = 0; i < n; ++i) {
      v[(size_t)i] = code % ell;
      code /= ell;
    }
    return v;
  };

  // incremental independence check by Gaussian elimination
  std::function<void(int, MatFp&)> rec = [&](int row, MatFp& m) {
    if (row == n - 1) {
      // cofactor vector c_j = (-1)^(n-1+j) det(minor_j); det(m) = sum_j m[n-1][j] c_j
      std::array<long, 4> cof{};
      bool any = false;
      for (int j = 0; j < n; ++j) {
        // minor: delete last row, column j
        std::vector<std::vector<long>> mm;
        for (int r = 0; r < n - 1; ++r) {
          std::vector<long> rr;
          for (int c = 0; c < n; ++c)
            if (c != j) rr.push_back(m.at(r, c));
          mm.push_back(rr);
        }
        // determinant mod ell by elimination
        long d = 1;
        int k = n - 1;
        bool zero = false;
        for (int c0 = 0; c0 < k && !zero; ++c0) {
          int piv = -1;
          for (int r0 = c0; r0 < k; ++r0)
            if (mm[(size_t)r0][(size_t)c0] % ell != 0) { piv = r0; break; }
          if (piv < 0) { zero = true; break; }
          if (piv != c0) { std::swap(mm[(size_t)piv], mm[(size_t)c0]); d = ell - d; }
          d = d * (mm[(size_t)c0][(size_t)c0] % ell + ell) % ell;
          long inv = inv_mod(mm[(size_t)c0][(size_t)c0], ell);
          for (int r0 = c0 + 1; r0 < k; ++r0) {
            long f = ((mm[(size_t)r0][(size_t)c0] % ell) + ell) % ell * inv % ell;
            for (int cc = c0; cc < k; ++cc)
              mm[(size_t)r0][(size_t)cc] =
                  ((mm[(size_t)r0][(size_t)cc] - f * mm[(size_t)c0][(size_t)cc]) % ell + ell) % ell;
          }
        }
        long minor = zero ? 0 : d;
        long sign = ((n - 1 + j) % 2 == 0) ? 1 : ell - 1;
        cof[(size_t)j] = minor * sign % ell;
        if (cof[(size_t)j] != 0) any = true;
      }
      if (!any) return;  // first rows dependent; no completion
      // pick pivot index p with cof[p] != 0; last row = t*e_p/cof[p] + kernel
      int p = 0;
      while (cof[(size_t)p] == 0) ++p;
      long cp_inv = inv_mod(cof[(size_t)p], ell);
      // kernel of the functional: vectors v with sum v_j cof_j = 0;
      // parametrized by free coordinates j != p
      std::array<long, 4> v{};
      std::function<void(int)> fill = [&](int idx) {
        if (idx == n) {
          // solve coordinate p: v_p = (1 - sum_{j != p} v_j cof_j) / cof_p
          long s = 0;
          for (int j = 0; j < n; ++j)
            if (j != p) s = (s + v[(size_t)j] * cof[(size_t)j]) % ell;
          v[(size_t)p] = ((1 - s) % ell + ell) % ell * cp_inv % ell;
          for (int j = 0; j < n; ++j) m.at(n - 1, j) = (uint8_t)v[(size_t)j];
          fn(m);
          return;
        }
        if (idx == p) { fill(idx + 1); return; }
        for (long t = 0; t < ell; ++t) {
          v[(size_t)idx] = t;
          fill(idx + 1);
        }
      };
      fill(0);
      return;
    }
    for (long code = 0; code < size; ++code) {
      auto v = decode(code);
      // independence from previous rows: rank check
      std::vector<std::vector<long>> mm;
      for (int r = 0; r < row; ++r) {
        std::vector<long> rr;
        for (int c = 0; c < n; ++c) rr.push_back(m.at(r, c));
        mm.push_back(rr);
      }
      {
        std::vector<long> rr(v.begin(), v.begin() + n);
        mm.push_back(rr);
      }
      // rank by elimination
      int rank = 0;
      int rows_count = (int)mm.size();
      int col = 0;
      for (; col < n && rank < rows_count; ++col) {
        int piv = -1;
        for (int r0 = rank; r0 < rows_count; ++r0)
          if (mm[(size_t)r0][(size_t)col] % ell != 0) { piv = r0; break; }
        if (piv < 0) continue;
        std::swap(mm[(size_t)piv], mm[(size_t)rank]);
        long inv = inv_mod(mm[(size_t)rank][(size_t)col], ell);
        for (int r0 = rank + 1; r0 < rows_count; ++r0) {
          long f = ((mm[(size_t)r0][(size_t)col] % ell) + ell) % ell * inv % ell;
          for (int cc = col; cc < n; ++cc)
            mm[(size_t)r0][(size_t)cc] =
                ((mm[(size_t)r0][(size_t)cc] - f * mm[(size_t)rank][(size_t)cc]) % ell + ell) % ell;
        }
        ++rank;
      }
      if (rank != rows_count) continue;
      for (int c = 0; c < n; ++c) m.at(row, c) = (uint8_t)v[(size_t)c];
      rec(row + 1, m);
    }
  };

  MatFp m;
  m.n = n;
  m.ell = ell;
  rec(0, m);
}

// Sp(4): closure of symplectic transvections x -> x + <x,v> v.
static std::vector<MatFp> sp4_elements(long ell) {
  int n = 4;
  MatFp J = standard_form(n, ell);
  auto pairing = [&](const std::array<long, 4>& x, const std::array<long, 4>& v) {
    long s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s = (s + x[(size_t)i] * J.at(i, j) % ell * v[(size_t)j]) % ell;
    return s;
  };
  std::vector<MatFp> gens;
  std::vector<std::array<long, 4>> dirs = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
      {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0},
      {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}};
  for (const auto& v : dirs) {
    for (long lam = 1; lam < ell; ++lam) {
      MatFp t = MatFp::identity(n, ell);
      // columns: t(e_j) = e_j + lam <e_j, v> v
      for (int j = 0; j < n; ++j) {
        std::array<long, 4> e{};
        e[(size_t)j] = 1;
        long c = pairing(e, v) * lam % ell;
        for (int i = 0; i < n; ++i)
          t.at(i, j) = (uint8_t)(((t.at(i, j) + c * v[(size_t)i]) % ell + ell) % ell);
      }
      gens.push_back(t);
    }
  }
  std::unordered_set<uint64_t> seen;
  std::vector<MatFp> all;
  std::vector<MatFp> frontier = {MatFp::identity(n, ell)};
  seen.insert(frontier[0].key());
  all.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<MatFp> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        MatFp z = mul(m, g);
        if (seen.insert(z.key()).second) {
          all.push_back(z);
          next.push_back(z);
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

void enumerate_group(const MatrixGroupSpec& spec, const std::function<void(const MatFp&)>& fn) {
  spec.validate();
  Int order = group_order(spec);
  if (order > kOrderGate)
    throw GateError("group_order",
                    "enumerate_group: order " + order.get_str() + " exceeds 10^7");

  long ell = spec.ell;
  if (spec.family == GroupFamily::SL) {
    enumerate_sl(spec.degree, ell, fn);
    return;
  }
  if (spec.degree == 2) {
    // Sp(2) = SL(2); CSp(2) = GL(2): filter all 2x2 matrices
    for (long a = 0; a < ell; ++a)
      for (long b = 0; b < ell; ++b)
        for (long c = 0; c < ell; ++c)
          for (long d = 0; d < ell; ++d) {
            long det = ((a * d - b * c) % ell + ell) % ell;
            if (spec.family == GroupFamily::Sp && det != 1) continue;
            if (spec.family == GroupFamily::CSp && det == 0) continue;
            MatFp m;
            m.n = 2;
            m.ell = ell;
            m.at(0, 0) = (uint8_t)a;
            m.at(0, 1) = (uint8_t)b;
            m.at(1, 0) = (uint8_t)c;
            m.at(1, 1) = (uint8_t)d;
            fn(m);
          }
    return;
  }
  // degree 4 symplectic
  std::vector<MatFp> sp = sp4_elements(ell);
  if ((Int)(long)sp.size() != sp_order(2, ell))
    throw std::runtime_error("enumerate_group: Sp(4) closure does not match order formula");
  if (spec.family == GroupFamily::Sp) {
    for (const auto& m : sp) fn(m);
    return;
  }
  // CSp(4): cosets d_q * Sp for q in F_ell^*, d_q = diag(1,1,q,q)
  for (long q = 1; q < ell; ++q) {
    MatFp dq = MatFp::identity(4, ell);
    dq.at(2, 2) = (uint8_t)q;
    dq.at(3, 3) = (uint8_t)q;
    for (const auto& m : sp) fn(mul(dq, m));
  }
}

DensityResult local_density(const MatrixGroupSpec& spec, int part, long fiber_q,
                            int entry_i, int entry_j) {
  spec.validate();
  long ell = spec.ell;
  if (part < 1 || part > 6) throw std::invalid_argument("local_density: unknown predicate id");
  if (part >= 3) {
    if (spec.family != GroupFamily::CSp)
      throw std::invalid_argument("local_density: parts 3-6 require CSp");
    if (fiber_q <= 0 || fiber_q >= ell)
      throw std::invalid_argument("local_density: fiber q must lie in F_ell^*");
  }
  if (part == 2 &&
      (entry_i < 0 || entry_i >= spec.degree || entry_j < 0 || entry_j >= spec.degree))
    throw std::invalid_argument("local_density: entry out of range");

  Int count = 0;
  auto visit = [&](const MatFp& m) {
    switch (part) {
      case 1: {
        if (poly_irreducible_mod(charpoly_mod(m), ell)) ++count;
        break;
      }
      case 2: {
        long v = m.at(entry_i, entry_j);
        if (!is_square_mod(v, ell)) ++count;
        break;
      }
      case 3:
      case 5: {
        if (multiplicator(m) != fiber_q) break;
        MatFp shifted = m;
        for (int i = 0; i < m.n; ++i)
          shifted.at(i, i) = (uint8_t)(((long)m.at(i, i) - 1 + ell) % ell);
        long d = det_mod(shifted);
        if (part == 3 ? is_square_mod(d, ell) : d == 0) ++count;
        break;
      }
      case 4:
      case 6: {
        if (multiplicator(m) != fiber_q) break;
        long v = ((fiber_q + 1 - trace_mod(m)) % ell + ell) % ell;
        if (part == 4 ? is_square_mod(v, ell) : v == 0) ++count;
        break;
      }
    }
  };
  enumerate_group(spec, visit);

  DensityResult r;
  r.count = count;
  r.order = group_order(spec);
  r.divisor = (part <= 2) ? r.order : sp_order(spec.genus(), ell);
  return r;
}

std::vector<long> q_symplectic_complete(long ell, int g, long q, const std::vector<long>& a) {
  if ((int)a.size() != g) throw std::invalid_argument("q_symplectic_complete: need a_1..a_g");
  std::vector<long> c((size_t)(2 * g + 1), 0);
  c[0] = 1;
  for (int k = 1; k <= g; ++k) c[(size_t)k] = ((a[(size_t)(k - 1)] % ell) + ell) % ell;
  long qk = 1;
  for (int k = 1; k <= g; ++k) {
    qk = qk * (q % ell) % ell;
    c[(size_t)(g + k)] = c[(size_t)(g - k)] * qk % ell;
  }
  return c;
}

bool is_q_symplectic(const std::vector<long>& coeffs, long ell, int g, long q) {
  if ((int)coeffs.size() != 2 * g + 1) return false;
  auto norm = [&](long v) { return ((v % ell) + ell) % ell; };
  if (norm(coeffs[0]) != 1) return false;
  long qk = 1;
  for (int k = 1; k <= g; ++k) {
    qk = qk * norm(q) % ell;
    if (norm(coeffs[(size_t)(g + k)]) != norm(coeffs[(size_t)(g - k)]) * qk % ell) return false;
  }
  return true;
}

std::pair<Int, Int> q_symplectic_census(long ell, int g, long q, QSymplecticPredicate pred) {
  if (!is_prime_u64((uint64_t)ell) || ell < 3)
    throw std::invalid_argument("q_symplectic_census: ell must be an odd prime");
  if (g < 1) throw std::invalid_argument("q_symplectic_census: g >= 1 required");
  if (q % ell == 0) throw std::invalid_argument("q_symplectic_census: q must be a unit");
  Int total;
  mpz_ui_pow_ui(total.get_mpz_t(), (unsigned long)ell, (unsigned long)g);
  if (total > 20'000'000) throw GateError("census_size", "q_symplectic_census: ell^g too large");

  Int count = 0;
  std::vector<long> a((size_t)g, 0);
  long iterations = (long)total.get_ui();
  for (long it = 0; it < iterations; ++it) {
    long code = it;
    for (int i = 0; i < g; ++i) {
      a[(size_t)i] = code % ell;
      code /= ell;
    }
    std::vector<long> c = q_symplectic_complete(ell, g, q, a);
    bool hit = false;
    switch (pred) {
      case QSymplecticPredicate::f1_square: {
        long f1 = 0;
        for (long ck : c) f1 = (f1 + ck) % ell;
        hit = is_square_mod(f1, ell);
        break;
      }
      case QSymplecticPredicate::trace_square: {
        long v = ((q + 1 - a[0]) % ell + ell) % ell;
        hit = is_square_mod(v, ell);
        break;
      }
      case QSymplecticPredicate::f1_zero: {
        long f1 = 0;
        for (long ck : c) f1 = (f1 + ck) % ell;
        hit = (f1 % ell) == 0;
        break;
      }
      case QSymplecticPredicate::trace_qplus1: {
        hit = ((a[0] - (q + 1)) % ell + ell) % ell == 0;
        break;
      }
    }
    if (hit) ++count;
  }
  return {count, total};
}

}  // namespace sievelab
