// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <vector>

#include "sievelab/classical.hpp"
#include "sievelab/elliptic.hpp"
#include "sievelab/finite_groups.hpp"
#include "sievelab/frobenius.hpp"
#include "sievelab/group_walk.hpp"
#include "sievelab/numutil.hpp"
#include "sievelab/rep_degrees.hpp"
#include "sievelab/sieve_core.hpp"
#include "sievelab/small_sieve.hpp"
#include "sievelab/walk_z.hpp"
#include "test_util.hpp"

using namespace sievelab;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

// 1. character-sum identity
void criterion1() {
  bool ok = true;
  for (long q : {3L, 5L, 7L, 11L, 13L}) {
    for (auto fam : {DegreeFamily::GL2, DegreeFamily::SL2}) {
      auto ms = degree_multiset(fam, q);
      if (a2_squared_exact(ms) != ms.group_order()) ok = false;
    }
  }
  report(1, "sum dim^2 = |G| for GL2/SL2, q in {3,5,7,11,13}", ok);
}

// 2. Gow identity
void criterion2() {
  bool ok = true;
  std::string detail;
  for (long q : {3L, 5L, 7L}) {
    Int lhs = a1_exact(degree_multiset(DegreeFamily::GL2, q));
    Int rhs = gow_symmetric_count(q);
    if (lhs != rhs) ok = false;
    if (q == 3) {
      detail = "q=3: A_1 = " + lhs.get_str() + ", symmetric count = " + rhs.get_str();
      if (lhs != 18 || rhs != 18) ok = false;
    }
  }
  report(2, "A_1(GL(2,q)) = #invertible symmetric matrices, q in {3,5,7}", ok, detail);
}

// 3. principal-series equality
void criterion3() {
  bool ok = true;
  for (long q : {3L, 5L, 7L, 11L, 13L}) {
    auto ms = degree_multiset(DegreeFamily::GL2, q);
    if (a_inf_exact(ms) != q + 1) ok = false;
    if (gl2_principal_series_degree(q) != q + 1) ok = false;
  }
  report(3, "A_inf(GL(2,q)) = |G|_{p'}/(q-1)^2 = q+1, q in {3,5,7,11,13}", ok);
}

// 4. Appendix B densities
void criterion4() {
  bool ok = true;
  std::string detail;

  // spot value
  auto spot = local_density({GroupFamily::SL, 2, 3}, 1);
  if (spot.count != 6 || spot.divisor != 24) ok = false;
  detail = "SL(2,F_3) irreducible charpolys: " + spot.count.get_str() + "/" +
           spot.divisor.get_str();

  // parts (1)-(2) on SL(2,ell) and Sp(4,3): implementation thresholds for (1)
  for (long ell : {3L, 5L, 7L, 11L}) {
    auto d1 = local_density({GroupFamily::SL, 2, ell}, 1);
    if (Rat(d1.count) / Rat(d1.divisor) < Rat(1, 4)) ok = false;  // 1/(2n), n = 2
    auto d2 = local_density({GroupFamily::SL, 2, ell}, 2, 0, 0, 0);
    if (d2.count <= 0) ok = false;
  }
  {
    auto d1 = local_density({GroupFamily::Sp, 4, 3}, 1);
    if (Rat(d1.count) / Rat(d1.divisor) < Rat(1, 8)) ok = false;  // 1/(4g), g = 2
    auto d2 = local_density({GroupFamily::Sp, 4, 3}, 2, 0, 0, 1);
    if (d2.count <= 0) ok = false;
  }

  // parts (3)-(6) on CSp(2,ell), all fibers
  for (long ell : {3L, 5L, 7L, 11L}) {
    Rat lower = Rat(ell, ell + 1) / 2;  // (1/2)(ell/(ell+1))^g, g = 1
    Rat upper = Rat(1) < Rat(1, ell - 1) ? Rat(1) : Rat(1, ell - 1);
    for (long q = 1; q < ell; ++q) {
      for (int part : {3, 4}) {
        auto d = local_density({GroupFamily::CSp, 2, ell}, part, q);
        if (Rat(d.count) / Rat(d.divisor) < lower) ok = false;
      }
      for (int part : {5, 6}) {
        auto d = local_density({GroupFamily::CSp, 2, ell}, part, q);
        if (Rat(d.count) / Rat(d.divisor) > upper) ok = false;
      }
    }
  }
  // CSp(4,3), all fibers, g = 2
  {
    long ell = 3;
    Rat lower = Rat(ell, ell + 1) * Rat(ell, ell + 1) / 2;
    Rat alt = Rat(ell) / Rat((ell - 1) * (ell - 1));
    Rat upper = alt < 1 ? alt : Rat(1);
    for (long q = 1; q < ell; ++q) {
      for (int part : {3, 4}) {
        auto d = local_density({GroupFamily::CSp, 4, ell}, part, q);
        if (Rat(d.count) / Rat(d.divisor) < lower) ok = false;
      }
      for (int part : {5, 6}) {
        auto d = local_density({GroupFamily::CSp, 4, ell}, part, q);
        if (Rat(d.count) / Rat(d.divisor) > upper) ok = false;
      }
    }
  }
  report(4, "Prop B.1 (1)-(6) densities at SL(2)/CSp(2), ell in {3,5,7,11}, Sp(4,3)/CSp(4,3)",
         ok, detail);
}

// 5. q-symplectic census identity
void criterion5() {
  bool ok = true;
  for (auto [g, ell] : std::vector<std::pair<int, long>>{{1, 5}, {1, 7}, {2, 3}, {2, 5}}) {
    Int expect = 0;
    {
      Int a, b;
      mpz_ui_pow_ui(a.get_mpz_t(), (unsigned long)ell, (unsigned long)g);
      mpz_ui_pow_ui(b.get_mpz_t(), (unsigned long)ell, (unsigned long)(g - 1));
      expect = (a + b) / 2;
    }
    for (long q = 1; q < ell; ++q) {
      auto [count, total] = q_symplectic_census(ell, g, q, QSymplecticPredicate::f1_square);
      (void)total;
      if (count != expect) ok = false;
    }
  }
  report(5, "census f(1)-square = (ell^g + ell^(g-1))/2 at (g,ell) in {(1,5),(1,7),(2,3),(2,5)}",
         ok);
}

// 6. exact Delta vs analytic bounds
void criterion6() {
  bool ok = true;
  std::string detail;
  double worst_margin = 1e18;
  for (long N = 1; N <= 60; ++N) {
    for (long L = 1; L <= 11; ++L) {
      IntervalSpec spec{0, N, 1};
      auto primes = primes_up_to(L);
      auto inst = interval_sample(spec, primes);
      auto support = classical_support(inst.system, primes, L);
      GramDelta g = gram_delta(inst.sample, inst.system, support, inst.basis);
      double bound = analytic_delta_bound(spec, L) + 1e-6;
      if (g.top_eigenvalue > bound) {
        ok = false;
        detail = "classical failure at N=" + std::to_string(N) + " L=" + std::to_string(L);
      }
    }
  }
  for (long n = 1; n <= 200; ++n) {
    for (long L : {1L, 3L, 5L, 7L}) {
      auto inst = walk_gram_instance(n, L);
      GramDelta g = gram_delta(inst.sample, inst.system, inst.support, inst.basis);
      double bound = walk_delta_bound(n, L);
      if (g.top_eigenvalue > bound + 1e-6) {
        ok = false;
        detail = "walk failure at n=" + std::to_string(n) + " L=" + std::to_string(L);
      }
      worst_margin = std::min(worst_margin, bound + 1e-6 - g.top_eigenvalue);
    }
  }
  if (detail.empty()) {
    std::ostringstream os;
    os << "walk worst margin " << worst_margin;
    detail = os.str();
  }
  report(6, "Gram Delta <= N-1+L^2 (N<=60, L<=11) and <= Prop 7.1 bound (n<=200, L<=7)", ok,
         detail);
}

// 7. equality case for independent binary events
void criterion7() {
  bool ok = true;
  std::mt19937_64 rng(7777);
  std::uniform_int_distribution<int> kdist(1, 6), num(1, 9), den(10, 19);
  for (int rep = 0; rep < 20; ++rep) {
    int k = kdist(rng);
    std::vector<Rat> probs;
    for (int i = 0; i < k; ++i) probs.push_back(make_rat(num(rng), den(rng)));
    auto [sys, basis] = binary_event_system(probs);
    auto sample = binary_product_sample(probs);
    auto support = SieveSupport::power_set(k);
    GramDelta g = gram_delta(sample, sys, support, basis);
    Rat h = compute_H(sys, support);
    Rat none = 1;
    for (const Rat& p : probs) none *= (1 - p);
    if (std::abs(g.top_eigenvalue - 1.0) > 1e-9) ok = false;
    if (std::abs(g.top_eigenvalue / h.get_d() - none.get_d()) > 1e-9) ok = false;
  }
  report(7, "independent binary events: |Delta - 1| <= 1e-9 and Delta/H = prod(1-p)", ok);
}

// 8. dual (variance) sieve on randomized instances
void criterion8() {
  bool ok = true;
  std::mt19937_64 rng(8888);
  for (int rep = 0; rep < 100; ++rep) {
    auto inst = testutil::random_instance(rng);
    auto res = dual_variance_check(inst.sample, inst.system, inst.basis);
    if (res.lhs.get_d() > res.delta_q * (1 + 1e-9) + 1e-9) ok = false;
  }
  report(8, "variance LHS <= Delta Q(L) on 100 randomized instances", ok);
}

// 9. EDS suite
void criterion9() {
  bool ok = true;
  std::string detail;
  // A006769 recurrence divisions exact to n = 200 (eds_extend throws otherwise)
  EdsState s;
  try {
    s = eds_extend(1, -1, 1, 200);
  } catch (const std::exception& e) {
    report(9, "EDS suite", false, e.what());
    return;
  }
  if (s.at(5) != 2 || s.at(7) != -3 || s.at(8) != -5) ok = false;
  // d_n | W_n for n <= 60 on (y^2 - y = x^3 - x, (0,0))
  WeierstrassCurve e(0, 0, -1, -1, 0);
  CurvePoint p = CurvePoint::affine(0, 0);
  CurvePoint q = CurvePoint::at_infinity();
  for (long n = 1; n <= 60; ++n) {
    q = point_add(e, q, p);
    Int d = shared_denominator(q);
    if (!mpz_divisible_p(s.at((size_t)n).get_mpz_t(), d.get_mpz_t())) {
      ok = false;
      detail = "d_n | W_n fails at n=" + std::to_string(n);
    }
  }
  // W_m | W_n whenever m | n <= 120
  auto s120 = eds_extend(1, -1, 1, 120);
  for (size_t m = 1; m <= 60; ++m) {
    if (s120.at(m) == 0) continue;
    for (size_t n = m; n <= 120; n += m)
      if (!mpz_divisible_p(s120.at(n).get_mpz_t(), s120.at(m).get_mpz_t())) {
        ok = false;
        detail = "W_m | W_n fails at (" + std::to_string(m) + "," + std::to_string(n) + ")";
      }
  }
  report(9, "EDS: A006769 exact to 200, d_n | W_n (n<=60), W_m | W_n (m|n<=120)", ok, detail);
}

// 10. walk-z exactness
void criterion10() {
  bool ok = true;
  std::string detail;
  for (long q : {1L, 3L, 5L}) {
    for (long n = 1; n <= 500; ++n) {
      long L = q * std::max(1L, (long)std::floor(std::pow((double)n, 0.25)));
      auto b = walk_corollary_bound(n, q, L);
      Rat bound = Rat(b.delta_bound) / b.h;  // exact rational from the float bound
      for (long a = 0; a < q || (q == 1 && a == 0); ++a) {
        if (q > 1 && gcd_long(a, q) != 1) continue;
        Rat prob = prime_ap_probability(n, q, q == 1 ? 0 : a);
        if (prob > bound) {
          ok = false;
          detail = "fails at n=" + std::to_string(n) + " q=" + std::to_string(q) +
                   " a=" + std::to_string(a);
        }
        if (q == 1) break;
      }
    }
  }
  report(10, "P(S_n prime = a mod q) <= Delta_bound/H for n <= 500, q in {1,3,5}", ok, detail);
}

// 11. group-walk decay and coupon collector
void criterion11() {
  bool ok = true;
  std::string detail;
  WalkConfig cfg{3, 60, 20000, 20260810ull};
  auto rows = run_reducibility_experiment(cfg, {10, 30, 60});
  if (!(rows[0].frequency > rows[1].frequency && rows[1].frequency > rows[2].frequency))
    ok = false;
  if (!(rows[0].wilson_lo > rows[1].wilson_hi && rows[1].wilson_lo > rows[2].wilson_hi))
    ok = false;
  {
    std::ostringstream os;
    os << "freq(10/30/60) = " << rows[0].frequency << "/" << rows[1].frequency << "/"
       << rows[2].frequency;
    detail = os.str();
  }
  for (int n : {3, 5}) {
    auto s = coupon_and_transition_times(n, 20000, 4096 + n);
    double exact = s.t_exact.get_d();
    if (std::abs(s.t_mean - exact) > 3.0 * s.t_stderr) {
      ok = false;
      detail += " coupon n=" + std::to_string(n) + " off";
    }
  }
  report(11, "SL(3,Z) reducibility decays with disjoint 95% CIs; coupon means within 3 SE", ok,
         detail);
}

// 12. Frobenius family sweeps
void criterion12() {
  bool ok = true;
  std::string fractions;
  for (long q : {41L, 101L, 211L}) {
    FamilySpec spec;
    spec.q = q;
    spec.g = 1;
    spec.f_coeffs = {1, 0, 1};
    spec.validate();
    auto excluded = spec.excluded_fibers();
    for (long t = 0; t < q; ++t) {
      if (std::find(excluded.begin(), excluded.end(), t) != excluded.end()) continue;
      long c1 = point_count(spec, t, 1);
      if (!count_within_weil(spec, c1)) ok = false;
      auto zn = zeta_numerator(spec, t);
      if (!zeta_is_q_symplectic(zn, q, 1)) ok = false;
      if (jacobian_order(zn) != c1) ok = false;  // g = 1: |J| = |C|
    }
    auto census = square_census(spec);
    fractions += " q=" + std::to_string(q) + ": C-square " +
                 rat_to_string(census.fraction_c_square);
  }
  report(12, "frobenius sweeps q in {41,101,211}: q-symplectic, Weil, P(1) = |C|", ok,
         "census fractions (reported only):" + fractions);
}

// 13. small-sieve sandwich
void criterion13() {
  bool ok = true;
  std::mt19937_64 rng(1313);
  for (int rep = 0; rep < 50; ++rep) {
    auto inst = testutil::random_instance(rng, 3, 4, 40);
    std::vector<long> primes = {2, 3, 5};
    for (size_t i = 0; i < inst.system.places.size(); ++i)
      inst.system.places[i].label = primes[i];
    std::vector<long> used(primes.begin(), primes.begin() + inst.system.places.size());
    int kmax = (int)used.size();
    auto upper = bonferroni_coeffs(used, kmax % 2 == 0 ? kmax : kmax - 1);
    auto lower = bonferroni_coeffs(used, 1);
    auto res = sandwich_bounds(inst.sample, inst.system, upper, lower);
    if (!(res.lower <= res.exact && res.exact <= res.upper)) ok = false;
  }
  // full Moebius reproduces the exact count on 1..30 / {2,3,5}
  {
    SieveSystem sys;
    for (long p : {2L, 3L, 5L}) {
      SievePlace pl;
      pl.label = p;
      pl.size = (int)p;
      pl.density.assign((size_t)p, Rat(1, p));
      pl.in_omega.assign((size_t)p, 0);
      pl.in_omega[0] = 1;
      sys.places.push_back(pl);
    }
    SiftableSample sample;
    for (long n = 1; n <= 30; ++n) {
      SiftableSample::Item it;
      it.weight = 1;
      for (long p : {2L, 3L, 5L}) it.values.push_back((int)(n % p));
      sample.items.push_back(it);
    }
    auto full = bonferroni_coeffs({2, 3, 5}, 3);
    auto res = sandwich_bounds(sample, sys, full, full);
    if (res.exact != 8 || res.upper != 8 || res.lower != 8) ok = false;
  }
  report(13, "sandwich holds on 50 random instances; full Moebius gives 8 on 1..30/{2,3,5}", ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13();
  if (g_failures == 0) {
    std::printf("all 13 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
