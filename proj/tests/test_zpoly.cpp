#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sievelab/zpoly.hpp"

using namespace sievelab;

static ZPoly zp(std::initializer_list<long> coeffs) {
  ZPoly f;
  for (long c : coeffs) f.push_back(Int(c));
  return f;
}

TEST_CASE("charpoly_int of small matrices") {
  std::vector<std::vector<Int>> I3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(charpoly_int(I3) == zp({-1, 3, -3, 1}));  // (T-1)^3

  std::vector<std::vector<Int>> a = {{2, 1}, {1, 1}};  // det 1, trace 3
  CHECK(charpoly_int(a) == zp({1, -3, 1}));
}

TEST_CASE("known irreducibility calls") {
  CHECK_FALSE(rational_irreducibility(zp({1, -2, 1})));   // (T-1)^2
  CHECK(rational_irreducibility(zp({1, 0, 1})));          // T^2+1
  CHECK(rational_irreducibility(zp({-1, -1, 0, 1})));     // T^3-T-1
  CHECK(rational_irreducibility(zp({7, 0, 1})));
  CHECK_FALSE(rational_irreducibility(zp({-1, 0, 1})));   // (T-1)(T+1)
}

TEST_CASE("cases that defeat every mod-p certificate") {
  // x^4 + 1 is reducible mod every prime yet irreducible over Q
  CHECK(rational_irreducibility(zp({1, 0, 0, 0, 1})));
  // x^4 - x^2 + 1 (12th cyclotomic) likewise
  CHECK(rational_irreducibility(zp({1, 0, -1, 0, 1})));
  // x^4 + 4 = (x^2-2x+2)(x^2+2x+2): no rational roots yet reducible
  CHECK_FALSE(rational_irreducibility(zp({4, 0, 0, 0, 1})));
}

TEST_CASE("large-coefficient products are detected as reducible") {
  // (x^2 + 10^9 x + 7)(x^3 - 5)
  Int big = 1000000000;
  ZPoly a = {Int(7), big, Int(1)};
  ZPoly b = {Int(-5), Int(0), Int(0), Int(1)};
  ZPoly prod(6, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  CHECK_FALSE(rational_irreducibility(prod));
  CHECK(zpoly_divides_monic(a, prod));
  CHECK(zpoly_divides_monic(b, prod));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(rational_irreducibility(zp({1, 2})), std::invalid_argument);   // non-monic
  CHECK_THROWS_AS(rational_irreducibility(zp({1, 0, 0, 0, 0, 0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(rational_irreducibility(zp({5})), std::invalid_argument);
}

// naive complete oracle for monic cubics/quartics with small coefficients
static bool naive_irreducible(const ZPoly& f) {
  int d = zpoly_degree(f);
  // integer roots up to the Cauchy bound
  long cauchy = 1;
  for (int k = 0; k < d; ++k)
    cauchy = std::max(cauchy, (long)std::abs(f[(size_t)k].get_si()));
  cauchy += 1;
  for (long r = -cauchy; r <= cauchy; ++r)
    if (zpoly_eval(f, Int(r)) == 0) return false;
  if (d <= 3) return true;
  // quadratic factors x^2 + bx + c with Mignotte-ish coefficient bound
  long B = 4 * (cauchy + 1);
  for (long b = -B; b <= B; ++b)
    for (long c = -B; c <= B; ++c) {
      ZPoly h = {Int(c), Int(b), Int(1)};
      if (zpoly_divides_monic(h, f)) return false;
    }
  return true;
}

TEST_CASE("agreement with the naive oracle on random cubics and quartics") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> coeff(-20, 20);
  for (int rep = 0; rep < 500; ++rep) {
    ZPoly f = {Int(coeff(rng)), Int(coeff(rng)), Int(coeff(rng)), Int(1)};
    if (zpoly_degree(f) != 3) continue;
    CHECK(rational_irreducibility(f) == naive_irreducible(f));
  }
  for (int rep = 0; rep < 500; ++rep) {
    ZPoly f = {Int(coeff(rng)), Int(coeff(rng)), Int(coeff(rng)), Int(coeff(rng)), Int(1)};
    bool mine = rational_irreducibility(f);
    bool naive = naive_irreducible(f);
    CHECK(mine == naive);
  }
}

TEST_CASE("factor degree patterns mod p") {
  // T^2+1 splits mod 5 (roots 2, 3), inert mod 3
  CHECK(factor_degrees_mod(zp({1, 0, 1}), 5) == std::vector<int>{1, 1});
  CHECK(factor_degrees_mod(zp({1, 0, 1}), 3) == std::vector<int>{2});
}
