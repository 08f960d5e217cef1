#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "sievelab/serialization.hpp"
#include "test_util.hpp"

using namespace sievelab;

TEST_CASE("rational strings") {
  CHECK(rat_to_string(Rat(1, 3)) == "1/3");
  CHECK(rat_from_string("2/6") == Rat(1, 3));
  CHECK(rat_from_string("5") == Rat(5));
  CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
}

TEST_CASE("system and sample round-trip") {
  std::mt19937_64 rng(606);
  for (int rep = 0; rep < 20; ++rep) {
    auto inst = testutil::random_instance(rng);
    auto sys2 = system_from_json(to_json(inst.system));
    REQUIRE(sys2.places.size() == inst.system.places.size());
    for (size_t i = 0; i < sys2.places.size(); ++i) {
      CHECK(sys2.places[i].label == inst.system.places[i].label);
      CHECK(sys2.places[i].density == inst.system.places[i].density);
      CHECK(sys2.places[i].in_omega == inst.system.places[i].in_omega);
    }
    auto sample2 = sample_from_json(to_json(inst.sample));
    REQUIRE(sample2.items.size() == inst.sample.items.size());
    for (size_t i = 0; i < sample2.items.size(); ++i) {
      CHECK(sample2.items[i].weight == inst.sample.items[i].weight);
      CHECK(sample2.items[i].values == inst.sample.items[i].values);
    }
  }
}

TEST_CASE("gram round-trip preserves the matrix bit-exactly") {
  std::mt19937_64 rng(707);
  auto inst = testutil::random_instance(rng, 2, 3, 10);
  auto g = gram_delta(inst.sample, inst.system,
                      SieveSupport::power_set((int)inst.system.places.size()), inst.basis);
  auto g2 = gram_from_json(to_json(g));
  CHECK(g2.matrix.rows() == g.matrix.rows());
  for (Eigen::Index r = 0; r < g.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < g.matrix.cols(); ++c)
      CHECK(g2.matrix(r, c) == g.matrix(r, c));
  CHECK(g2.top_eigenvalue == g.top_eigenvalue);
  CHECK(g2.index.size() == g.index.size());
}

TEST_CASE("density tables serialize as p/q strings") {
  SieveSystem sys;
  SievePlace pl;
  pl.label = 3;
  pl.size = 3;
  pl.density = {Rat(1, 3), Rat(1, 3), Rat(1, 3)};
  pl.in_omega = {1, 0, 0};
  sys.places.push_back(pl);
  auto j = to_json(sys);
  CHECK(j["places"][0]["density"][0].get<std::string>() == "1/3");
  CHECK(j["places"][0]["omega"][0].get<int>() == 0);
}
