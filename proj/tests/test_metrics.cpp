#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qwalk/metrics.hpp"

using namespace qwalk;

namespace {

std::vector<double> random_dist(std::mt19937& rng, std::size_t n, bool normalize) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> out(n);
  double total = 0.0;
  for (auto& v : out) {
    v = dist(rng);
    total += v;
  }
  if (normalize) {
    for (auto& v : out) v /= total;
  }
  return out;
}

}  // namespace

TEST_CASE("similarity of a distribution with itself is 1") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = random_dist(rng, 16, trial % 2 == 0);
    CHECK(std::fabs(similarity(d, d) - 1.0) <= 1e-14);
  }
}

TEST_CASE("similarity of disjoint distributions is 0") {
  const std::vector<double> a = {1.0, 0.0, 0.5, 0.0};
  const std::vector<double> b = {0.0, 0.3, 0.0, 0.7};
  CHECK(similarity(a, b) == 0.0);
}

TEST_CASE("textbook half-overlap value") {
  const std::vector<double> a = {0.5, 0.5};
  const std::vector<double> b = {1.0, 0.0};
  CHECK(std::fabs(similarity(a, b) - 0.5) <= 1e-15);
}

TEST_CASE("similarity is exactly symmetric") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_dist(rng, 9, false);
    const auto b = random_dist(rng, 9, false);
    CHECK(similarity(a, b) == similarity(b, a));
  }
}

TEST_CASE("similarity is invariant under rescaling either argument") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> scale_dist(0.1, 50.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_dist(rng, 12, false);
    auto b = random_dist(rng, 12, false);
    const double base = similarity(a, b);
    const double scale = scale_dist(rng);
    for (auto& v : b) v *= scale;
    const double scaled = similarity(a, b);
    CHECK(std::fabs(scaled - base) <= 1e-13 * (1.0 + std::fabs(base)));
  }
}

TEST_CASE("similarity stays within [0, 1] up to roundoff") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_dist(rng, 10, true);
    const auto b = random_dist(rng, 10, true);
    const double s = similarity(a, b);
    CHECK(s >= 0.0);
    CHECK(s <= 1.0 + 1e-14);
  }
}

TEST_CASE("similarity input validation") {
  const std::vector<double> a = {0.5, 0.5};
  const std::vector<double> bad_len = {1.0};
  const std::vector<double> negative = {-0.1, 1.1};
  const std::vector<double> zero = {0.0, 0.0};
  const std::vector<double> empty;
  CHECK_THROWS_AS(similarity(a, bad_len), std::invalid_argument);
  CHECK_THROWS_AS(similarity(a, negative), std::invalid_argument);
  CHECK_THROWS_AS(similarity(a, zero), std::invalid_argument);
  CHECK_THROWS_AS(similarity(empty, empty), std::invalid_argument);
}

TEST_CASE("max_abs_difference basics") {
  const std::vector<double> a = {0.1, 0.5, 0.4};
  const std::vector<double> b = {0.2, 0.2, 0.6};
  CHECK(max_abs_difference(a, b) == max_abs_difference(b, a));
  CHECK(std::fabs(max_abs_difference(a, b) - 0.3) <= 1e-15);
  CHECK(max_abs_difference(a, a) == 0.0);
  CHECK_THROWS_AS(max_abs_difference(a, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("pair distribution overloads check labels and count diagonals once") {
  PairDistribution d0(Basis::ports, {1, 2});
  PairDistribution d1(Basis::ports, {1, 2});
  PairDistribution d2(Basis::positions, {-1, 1});
  PairDistribution d3(Basis::ports, {1, 3});

  d0.at(0, 0) = 1.0;
  d1.at(0, 1) = 1.0;
  CHECK(similarity(d0, d1) == 0.0);
  d1.at(0, 1) = 0.0;
  d1.at(0, 0) = 2.0;  // same shape, different scale
  CHECK(std::fabs(similarity(d0, d1) - 1.0) <= 1e-14);

  CHECK_THROWS_AS(similarity(d0, d2), std::invalid_argument);
  CHECK_THROWS_AS(similarity(d0, d3), std::invalid_argument);
  CHECK_THROWS_AS(max_abs_difference(d0, d2), std::invalid_argument);
  CHECK_THROWS_AS(max_abs_difference(d0, d3), std::invalid_argument);
}
