#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sievelab/finite_groups.hpp"
#include "sievelab/sieve_core.hpp"

using namespace sievelab;

static long count_elements(const MatrixGroupSpec& spec) {
  long n = 0;
  enumerate_group(spec, [&](const MatFp&) { ++n; });
  return n;
}

TEST_CASE("enumeration counts match the closed-form orders") {
  CHECK(count_elements({GroupFamily::SL, 2, 3}) == 24);
  CHECK(group_order({GroupFamily::SL, 2, 3}) == 24);
  CHECK(count_elements({GroupFamily::SL, 2, 5}) == 120);
  CHECK(count_elements({GroupFamily::SL, 3, 3}) == 5616);
  CHECK(count_elements({GroupFamily::Sp, 4, 3}) == 51840);
  CHECK(group_order({GroupFamily::Sp, 4, 3}) == 51840);
  CHECK(count_elements({GroupFamily::CSp, 2, 5}) == 480);  // = |GL(2,5)|
  CHECK(count_elements({GroupFamily::CSp, 4, 3}) == 103680);
}

TEST_CASE("elements are distinct and in the right group") {
  std::set<uint64_t> keys;
  enumerate_group({GroupFamily::SL, 2, 5}, [&](const MatFp& m) {
    CHECK(det_mod(m) == 1);
    CHECK(keys.insert(m.key()).second);
  });
  CHECK(keys.size() == 120);
}

TEST_CASE("Sp(2) equals SL(2) element for element") {
  for (long ell : {3L, 5L}) {
    std::set<uint64_t> sp, sl;
    enumerate_group({GroupFamily::Sp, 2, ell}, [&](const MatFp& m) { sp.insert(m.key()); });
    enumerate_group({GroupFamily::SL, 2, ell}, [&](const MatFp& m) { sl.insert(m.key()); });
    CHECK(sp == sl);
  }
}

TEST_CASE("multiplicator splits CSp into equal fibers") {
  std::map<long, long> fiber_count;
  enumerate_group({GroupFamily::CSp, 2, 7}, [&](const MatFp& m) {
    long q = multiplicator(m);
    CHECK(q != 0);
    // for 2x2, the multiplicator is the determinant
    CHECK(q == det_mod(m));
    fiber_count[q]++;
  });
  for (long q = 1; q < 7; ++q) CHECK(fiber_count[q] == 336);  // |SL(2,7)|
}

TEST_CASE("enumeration gate rejects huge groups") {
  CHECK_THROWS_AS(count_elements({GroupFamily::SL, 4, 3}), GateError);
}

TEST_CASE("irreducible quartic counts over F_ell match the Moebius formula") {
  // number of monic irreducible quartics over F_ell: (ell^4 - ell^2)/4
  for (long ell : {3L, 5L}) {
    long count = 0;
    for (long c0 = 0; c0 < ell; ++c0)
      for (long c1 = 0; c1 < ell; ++c1)
        for (long c2 = 0; c2 < ell; ++c2)
          for (long c3 = 0; c3 < ell; ++c3)
            if (poly_irreducible_mod({c0, c1, c2, c3, 1}, ell)) ++count;
    CHECK(count == (ell * ell * ell * ell - ell * ell) / 4);
  }
}

TEST_CASE("charpoly and irreducibility mod ell") {
  // companion matrix of T^2 + 1 over F_3 (irreducible)
  MatFp m;
  m.n = 2;
  m.ell = 3;
  m.at(0, 1) = 2;  // [[0, -1], [1, 0]]
  m.at(1, 0) = 1;
  auto cp = charpoly_mod(m);
  CHECK(cp == std::vector<long>{1, 0, 1});
  CHECK(poly_irreducible_mod(cp, 3));
  CHECK_FALSE(poly_irreducible_mod({2, 0, 1}, 3));  // T^2 + 2 = (T-1)(T+1)
}

TEST_CASE("Prop B.1 (1): irreducible-charpoly density") {
  auto r = local_density({GroupFamily::SL, 2, 3}, 1);
  CHECK(r.count == 6);
  CHECK(r.divisor == 24);
  // implementation thresholds (not paper values): >= 1/(2n) for SL(n)
  for (long ell : {3L, 5L, 7L, 11L}) {
    auto d = local_density({GroupFamily::SL, 2, ell}, 1);
    CHECK(Rat(d.count) / Rat(d.divisor) >= Rat(1, 4));
  }
  auto sp43 = local_density({GroupFamily::Sp, 4, 3}, 1);
  CHECK(Rat(sp43.count) / Rat(sp43.divisor) >= Rat(1, 8));  // >= 1/(4g), g = 2
}

TEST_CASE("Prop B.1 (2): non-square entry density") {
  auto r = local_density({GroupFamily::SL, 2, 3}, 2, 0, 0, 0);
  CHECK(r.count == 9);
  CHECK(r.divisor == 24);
  for (long ell : {3L, 5L, 7L}) {
    auto d = local_density({GroupFamily::SL, 2, ell}, 2, 0, 0, 1);
    CHECK(d.count > 0);
  }
}

TEST_CASE("Prop B.1 (3)-(4): fiber densities meet the lower bound") {
  for (long ell : {3L, 5L}) {
    for (long q = 1; q < ell; ++q) {
      for (int part : {3, 4}) {
        auto d = local_density({GroupFamily::CSp, 2, ell}, part, q);
        CHECK(Rat(d.count) / Rat(d.divisor) >= Rat(ell, ell + 1) / 2);
      }
    }
  }
  // spec worked example: CSp(2,5) = GL(2,5), fiber q = 1, part 3
  auto g = local_density({GroupFamily::CSp, 2, 5}, 3, 1);
  CHECK(Rat(g.count) / Rat(g.divisor) >= Rat(5, 12));
}

TEST_CASE("Prop B.1 (5)-(6): fiber densities meet the upper bound") {
  for (long ell : {3L, 5L}) {
    Rat cap = Rat(1);  // min(1, ell^{g-1}/(ell-1)^g), g = 1
    Rat alt = Rat(1, ell - 1);
    if (alt < cap) cap = alt;
    for (long q = 1; q < ell; ++q) {
      for (int part : {5, 6}) {
        auto d = local_density({GroupFamily::CSp, 2, ell}, part, q);
        CHECK(Rat(d.count) / Rat(d.divisor) <= cap);
      }
    }
  }
}

TEST_CASE("local_density input validation") {
  CHECK_THROWS_AS(local_density({GroupFamily::SL, 2, 3}, 7), std::invalid_argument);
  CHECK_THROWS_AS(local_density({GroupFamily::SL, 2, 3}, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(local_density({GroupFamily::CSp, 2, 3}, 3, 0), std::invalid_argument);
}

TEST_CASE("q-symplectic census counts") {
  auto [c1, t1] = q_symplectic_census(5, 1, 2, QSymplecticPredicate::f1_square);
  CHECK(c1 == 3);  // (ell + 1)/2
  CHECK(t1 == 5);

  auto [c2, t2] = q_symplectic_census(5, 1, 2, QSymplecticPredicate::f1_zero);
  CHECK(c2 == 1);  // ell^{g-1}
  CHECK(t2 == 5);

  auto [c3, t3] = q_symplectic_census(3, 2, 1, QSymplecticPredicate::f1_square);
  CHECK(t3 == 9);
  CHECK(c3 == 6);  // (ell^g + ell^{g-1})/2 = (9 + 3)/2

  auto [c4, t4] = q_symplectic_census(3, 2, 2, QSymplecticPredicate::trace_qplus1);
  CHECK(c4 == 3);  // ell^{g-1}
  CHECK(t4 == 9);
}

TEST_CASE("q-symplectic completion and functional equation") {
  auto c = q_symplectic_complete(5, 1, 2, {3});
  CHECK(c == std::vector<long>{1, 3, 2});  // 1 + 3T + qT^2
  CHECK(is_q_symplectic(c, 5, 1, 2));
  CHECK_FALSE(is_q_symplectic({1, 3, 3}, 5, 1, 2));
}

TEST_CASE("reversed charpolys of CSp fibers are q-symplectic") {
  for (long ell : {3L, 5L}) {
    long checked = 0;
    enumerate_group({GroupFamily::CSp, 2, ell}, [&](const MatFp& m) {
      long q = multiplicator(m);
      auto rc = reversed_charpoly_mod(m);
      CHECK(is_q_symplectic(rc, ell, 1, q));
      ++checked;
    });
    CHECK(checked == (ell - 1) * ell * (ell * ell - 1));
  }
  // spot check a sample of Sp(4,3) (q = 1, g = 2)
  long seen = 0;
  enumerate_group({GroupFamily::Sp, 4, 3}, [&](const MatFp& m) {
    if (seen++ % 100 != 0) return;
    CHECK(is_q_symplectic(reversed_charpoly_mod(m), 3, 2, 1));
  });
}
