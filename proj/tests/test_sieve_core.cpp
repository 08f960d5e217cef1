#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sievelab/sieve_core.hpp"
#include "test_util.hpp"

using namespace sievelab;

static SieveSystem uniform_residue_system(const std::vector<long>& primes) {
  SieveSystem sys;
  for (long p : primes) {
    SievePlace pl;
    pl.label = p;
    pl.size = (int)p;
    pl.density.assign((size_t)p, Rat(1, p));
    pl.in_omega.assign((size_t)p, 0);
    pl.in_omega[0] = 1;
    sys.places.push_back(pl);
  }
  return sys;
}

static SiftableSample integer_sample(long from, long to, const std::vector<long>& primes) {
  SiftableSample s;
  for (long n = from; n <= to; ++n) {
    SiftableSample::Item it;
    it.weight = 1;
    for (long p : primes) it.values.push_back((int)(((n % p) + p) % p));
    s.items.push_back(it);
  }
  return s;
}

TEST_CASE("compute_H on the two-prime uniform system") {
  auto sys = uniform_residue_system({2, 3});
  CHECK(compute_H(sys, SieveSupport::power_set(2)) == Rat(3));
  CHECK(compute_H(sys, SieveSupport::empty_only()) == Rat(1));
}

TEST_CASE("compute_H full power set equals the product formula") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 30; ++rep) {
    auto inst = testutil::random_instance(rng, 4, 5, 1);
    Rat h = compute_H(inst.system, SieveSupport::power_set((int)inst.system.places.size()));
    Rat prod = 1;
    for (const auto& pl : inst.system.places) prod /= (1 - pl.nu_omega());
    CHECK(h == prod);
  }
}

TEST_CASE("compute_H rejects nu(Omega) = 1") {
  SieveSystem sys;
  SievePlace pl;
  pl.label = 2;
  pl.size = 2;
  pl.density = {Rat(1, 2), Rat(1, 2)};
  pl.in_omega = {1, 1};
  sys.places.push_back(pl);
  CHECK_THROWS_AS(compute_H(sys, SieveSupport::power_set(1)), std::invalid_argument);
}

TEST_CASE("sifted_measure counts coprime residues") {
  auto sys = uniform_residue_system({2, 3, 5});
  auto sample = integer_sample(1, 30, {2, 3, 5});
  CHECK(sifted_measure(sample, sys) == Rat(8));

  SieveSystem empty;
  CHECK(sifted_measure(sample, empty) == Rat(30));
}

TEST_CASE("sifted_measure with Omega = all but one point") {
  SieveSystem sys;
  SievePlace pl;
  pl.label = 2;
  pl.size = 2;
  pl.density = {Rat(1, 2), Rat(1, 2)};
  pl.in_omega = {1, 0};  // Omega = Y \ {1}: survivors are odd items
  sys.places.push_back(pl);
  auto sample = integer_sample(1, 4, {2});
  CHECK(sifted_measure(sample, sys) == Rat(2));
}

TEST_CASE("gram_delta on the empty support is the total mass") {
  auto sys = uniform_residue_system({2, 3});
  auto sample = integer_sample(1, 7, {2, 3});
  OrthonormalBasisSpec basis;
  for (const auto& pl : sys.places) {
    std::vector<double> nu;
    for (const auto& r : pl.density) nu.push_back(r.get_d());
    basis.tables.push_back(testutil::gram_schmidt_basis(nu));
  }
  GramDelta g = gram_delta(sample, sys, SieveSupport::empty_only(), basis);
  CHECK(g.matrix.rows() == 1);
  CHECK(g.top_eigenvalue == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("gram_delta rejects a non-orthonormal basis") {
  auto sys = uniform_residue_system({2});
  auto sample = integer_sample(1, 4, {2});
  OrthonormalBasisSpec basis;
  basis.tables = {{{cd(1, 0), cd(1, 0)}, {cd(1, 0), cd(0.5, 0)}}};
  CHECK_THROWS_AS(gram_delta(sample, sys, SieveSupport::singletons(1), basis),
                  std::invalid_argument);
}

TEST_CASE("gram_delta rejects a support violating closure") {
  auto sys = uniform_residue_system({2, 3});
  auto sample = integer_sample(1, 4, {2, 3});
  OrthonormalBasisSpec basis;
  for (const auto& pl : sys.places) {
    std::vector<double> nu;
    for (const auto& r : pl.density) nu.push_back(r.get_d());
    basis.tables.push_back(testutil::gram_schmidt_basis(nu));
  }
  SieveSupport bad;
  bad.sets = {{}, {0, 1}};  // pair present without its singletons
  CHECK_THROWS_AS(gram_delta(sample, sys, bad, basis), std::invalid_argument);
}

TEST_CASE("row sum bound dominates the top eigenvalue") {
  GramDelta g;
  g.matrix = Eigen::MatrixXcd::Zero(1, 1);
  g.matrix(0, 0) = 3.5;
  CHECK(row_sum_delta_bound(g) == doctest::Approx(3.5));

  g.matrix = Eigen::MatrixXcd::Zero(2, 2);
  g.matrix(0, 0) = 2;
  g.matrix(1, 1) = 5;
  CHECK(row_sum_delta_bound(g) == doctest::Approx(5.0));
}

TEST_CASE("binary event system basics") {
  auto [sys, basis] = binary_event_system({Rat(1, 2)});
  CHECK(basis.tables[0][1][1] == cd(1, 0));
  CHECK(basis.tables[0][1][0] == cd(-1, 0));
  basis.validate(sys);  // p = 1/2 orthonormality

  auto [sys3, basis3] = binary_event_system({Rat(1, 3)});
  basis3.validate(sys3);  // <phi,1> = 0 and |phi| = 1 within 1e-12

  CHECK_THROWS_AS(binary_event_system({Rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(binary_event_system({Rat(0)}), std::invalid_argument);
}

TEST_CASE("two independent fair coins: sieve bound equals P(no event)") {
  std::vector<Rat> probs = {Rat(1, 2), Rat(1, 2)};
  auto [sys, basis] = binary_event_system(probs);
  auto sample = binary_product_sample(probs);
  auto support = SieveSupport::power_set(2);
  GramDelta g = gram_delta(sample, sys, support, basis);
  Rat h = compute_H(sys, support);
  CHECK(std::abs(g.top_eigenvalue - 1.0) < 1e-9);
  CHECK(std::abs(g.top_eigenvalue / h.get_d() - 0.25) < 1e-9);
  CHECK(sifted_measure(sample, sys) == Rat(1, 4));
}

TEST_CASE("pairwise independent events have vanishing singleton correlations") {
  std::vector<Rat> probs = {Rat(1, 2), Rat(1, 3), Rat(2, 5)};
  auto [sys, basis] = binary_event_system(probs);
  auto sample = binary_product_sample(probs);
  GramDelta g = gram_delta(sample, sys, SieveSupport::singletons(3), basis);
  for (Eigen::Index r = 1; r < g.matrix.rows(); ++r)
    for (Eigen::Index c = 1; c < g.matrix.cols(); ++c)
      if (r != c) CHECK(std::abs(g.matrix(r, c)) < 1e-12);
}

TEST_CASE("dual variance sieve on 1..6 with primes 2,3") {
  auto sys = uniform_residue_system({2, 3});
  auto sample = integer_sample(1, 6, {2, 3});
  OrthonormalBasisSpec basis;
  for (const auto& pl : sys.places) {
    std::vector<double> nu;
    for (const auto& r : pl.density) nu.push_back(r.get_d());
    basis.tables.push_back(testutil::gram_schmidt_basis(nu));
  }
  auto res = dual_variance_check(sample, sys, basis);
  CHECK(res.p_l == Rat(5, 6));
  CHECK(res.lhs == Rat(17, 6));
  CHECK(res.q_l == Rat(17, 36));
  CHECK(res.lhs.get_d() <= res.delta_q + 1e-9);
}

TEST_CASE("dual variance with empty Omega is zero") {
  SieveSystem sys;
  SievePlace pl;
  pl.label = 2;
  pl.size = 2;
  pl.density = {Rat(1, 2), Rat(1, 2)};
  pl.in_omega = {0, 0};
  sys.places.push_back(pl);
  SiftableSample sample;
  sample.items.push_back({Rat(1), {0}});
  OrthonormalBasisSpec basis;
  basis.tables.push_back(testutil::gram_schmidt_basis({0.5, 0.5}));
  auto res = dual_variance_check(sample, sys, basis);
  CHECK(res.lhs == Rat(0));
}

TEST_CASE("randomized: variance inequality holds on 100 instances") {
  std::mt19937_64 rng(202);
  for (int rep = 0; rep < 100; ++rep) {
    auto inst = testutil::random_instance(rng);
    auto res = dual_variance_check(inst.sample, inst.system, inst.basis);
    CHECK(res.lhs.get_d() <= res.delta_q * (1 + 1e-9) + 1e-9);
  }
}

TEST_CASE("randomized: sieve inequality sifted <= Delta/H and PSD Gram") {
  std::mt19937_64 rng(303);
  for (int rep = 0; rep < 100; ++rep) {
    auto inst = testutil::random_instance(rng);
    int k = (int)inst.system.places.size();
    auto support = SieveSupport::power_set(k);
    GramDelta g = gram_delta(inst.sample, inst.system, support, inst.basis);
    Rat h = compute_H(inst.system, support);
    Rat sifted = sifted_measure(inst.sample, inst.system);
    CHECK(sifted.get_d() <= g.top_eigenvalue / h.get_d() + 1e-9);
    CHECK(g.min_eigenvalue >= -1e-9 * g.top_eigenvalue);
    CHECK(row_sum_delta_bound(g) >= g.top_eigenvalue - 1e-9);
    CHECK(g.top_eigenvalue >= inst.sample.total_mass().get_d() - 1e-9);
  }
}
