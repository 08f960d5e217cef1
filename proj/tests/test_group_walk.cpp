#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sievelab/group_walk.hpp"
#include "sievelab/numutil.hpp"
#include "sievelab/sieve_core.hpp"

using namespace sievelab;

TEST_CASE("wilson interval sanity") {
  auto [lo, hi] = wilson_interval(50, 100);
  CHECK(lo > 0.4);
  CHECK(hi < 0.6);
  CHECK(lo < 0.5);
  CHECK(hi > 0.5);
  auto [lo0, hi0] = wilson_interval(0, 100);
  CHECK(lo0 < 1e-12);
  CHECK(hi0 < 0.05);
}

TEST_CASE("identity and single-step walks are reducible") {
  WalkConfig cfg;
  cfg.n = 2;
  cfg.steps = 1;
  cfg.trials = 64;
  cfg.seed = 5;
  auto rows = run_reducibility_experiment(cfg, {0, 1});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].frequency == 1.0);  // identity: (T-1)^n
  CHECK(rows[1].frequency == 1.0);  // any one elementary matrix is unipotent
}

TEST_CASE("frequencies decay for SL(3) (small version)") {
  WalkConfig cfg;
  cfg.n = 3;
  cfg.steps = 60;
  cfg.trials = 1500;
  cfg.seed = 42;
  auto rows = run_reducibility_experiment(cfg, {10, 30, 60});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].frequency > rows[1].frequency);
  CHECK(rows[1].frequency > rows[2].frequency);
}

TEST_CASE("deterministic given the seed") {
  WalkConfig cfg;
  cfg.n = 3;
  cfg.steps = 20;
  cfg.trials = 200;
  cfg.seed = 99;
  auto a = run_reducibility_experiment(cfg, {10, 20});
  auto b = run_reducibility_experiment(cfg, {10, 20});
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].reducible == b[i].reducible);
}

TEST_CASE("budget gate") {
  WalkConfig cfg;
  cfg.n = 6;
  cfg.steps = 1000000;
  cfg.trials = 1000000;
  CHECK_THROWS_AS(cfg.validate(), GateError);
}

TEST_CASE("cayley spectrum of SL(2,3)") {
  auto s = cayley_spectrum(2, 3);
  CHECK(s.group_size == 24);
  CHECK(s.generator_count == 4);
  CHECK(s.trivial_simple);
  CHECK(s.rho < 1.0);
  CHECK(s.rho > 0.0);
  CHECK(s.eigenvalues.back() == doctest::Approx(1.0));
  for (double lam : s.eigenvalues) {
    CHECK(lam <= 1.0 + 1e-9);
    CHECK(lam >= -1.0 - 1e-9);
  }
  CHECK(s.alpha > 0.0);
}

TEST_CASE("cayley spectrum is connected for odd ell") {
  for (long ell : {5L, 7L}) {
    auto s = cayley_spectrum(2, ell);
    CHECK(s.trivial_simple);
    CHECK(s.rho < 1.0);
  }
}

TEST_CASE("SL(2,F_2) has the sign-character eigenvalue -1") {
  auto s = cayley_spectrum(2, 2);
  CHECK(s.group_size == 6);
  CHECK(s.has_minus_one);
  CHECK_FALSE(s.rho < 1.0);  // bipartite obstruction
}

TEST_CASE("cayley gate") {
  CHECK_THROWS_AS(cayley_spectrum(2, 31), GateError);  // |SL(2,31)| = 29760
}

TEST_CASE("coupon collector exact expectation") {
  CHECK(coupon_collector_expectation(3) == Rat(11, 2));
  CHECK(coupon_collector_expectation(5) == Rat(137, 12));
}

TEST_CASE("coupon and transition times for n = 3") {
  auto s = coupon_and_transition_times(3, 2000, 2024);
  CHECK(s.t_exact == Rat(11, 2));
  CHECK(std::abs(s.t_mean - 5.5) <= 3.0 * s.t_stderr);
  CHECK(s.tau_mean >= s.t_mean);  // path-wise tau >= t
  CHECK(s.ratio >= 1.0);
  CHECK(s.max_steps_hit == 0);
}

TEST_CASE("charpoly stays reducible before every row is touched") {
  // manual walk replaying the generator sequence; oracle for the tau >= t claim
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3;
    std::vector<std::vector<Int>> m(3, std::vector<Int>(3, Int(0)));
    for (int i = 0; i < n; ++i) m[(size_t)i][(size_t)i] = 1;
    std::vector<char> touched((size_t)n, 0);
    int count = 0;
    for (int step = 0; step < 200 && count < n; ++step) {
      std::uniform_int_distribution<int> pick(0, 2 * n * (n - 1) - 1);
      int idx = pick(rng);
      int c = idx % 2 == 0 ? 1 : -1;
      int pair = idx / 2;
      int i = pair / (n - 1);
      int off = pair % (n - 1);
      int j = off >= i ? off + 1 : off;
      for (int k = 0; k < n; ++k) m[(size_t)i][(size_t)k] += c * m[(size_t)j][(size_t)k];
      if (!touched[(size_t)i]) {
        touched[(size_t)i] = 1;
        ++count;
      }
      if (count < n) CHECK_FALSE(rational_irreducibility(charpoly_int(m)));
    }
  }
}
