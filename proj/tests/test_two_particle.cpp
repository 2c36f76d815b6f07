#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <map>
#include <numbers>
#include <random>

#include "qwalk/kernels.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/two_particle.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;

NetworkSpec balanced(int steps) {
  NetworkSpec spec;
  spec.steps = steps;
  return spec;
}

NetworkSpec random_spec(int steps, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coupling(0.0, 1.0);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  NetworkSpec spec;
  spec.steps = steps;
  for (int t = 1; t <= steps; ++t) {
    for (int k = 1; k <= t; ++k) {
      spec.overrides[{t, k}] = CouplerSpec{coupling(rng), phase(rng)};
    }
  }
  return spec;
}

double position_entry(const PairDistribution& d, int j1, int j2, int steps) {
  const auto idx = [steps](int j) { return static_cast<std::size_t>((j + steps) / 2); };
  return d.at(idx(j1), idx(j2));
}

}  // namespace

TEST_CASE("exchange phase domain and labels") {
  CHECK_THROWS_AS(ExchangePhase(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(ExchangePhase(2.0 * kPi), std::invalid_argument);
  CHECK_THROWS_AS(ExchangePhase(std::nan("")), std::invalid_argument);

  CHECK(ExchangePhase(0.0).is_boson());
  CHECK_FALSE(ExchangePhase(0.0).is_fermion());
  CHECK(ExchangePhase(kPi).is_fermion());
  CHECK_FALSE(ExchangePhase(kPi).is_boson());
  CHECK(std::string(ExchangePhase(0.0).statistics_label()) == "boson");
  CHECK(std::string(ExchangePhase(kPi).statistics_label()) == "fermion");
  CHECK(std::string(ExchangePhase(kPi / 2).statistics_label()) == "anyon");

  CHECK(ExchangePhase(0.0).factor() == std::complex<double>{1.0, 0.0});
}

TEST_CASE("pair input validation") {
  const auto u = build_network_unitary(balanced(2));
  CHECK_THROWS_AS(pair_amplitudes(u, u, 2, 2, ExchangePhase(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(pair_amplitudes(u, u, 0, 2, ExchangePhase(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(pair_amplitudes(u, u, 1, 5, ExchangePhase(0.0)), std::invalid_argument);

  const auto u3 = build_network_unitary(balanced(3));
  CHECK_THROWS_AS(pair_amplitudes(u, u3, 1, 2, ExchangePhase(0.0)), std::invalid_argument);

  CHECK_THROWS_AS(separable_product_distribution(u, 2, 2), std::invalid_argument);
}

TEST_CASE("single splitter reproduces bunching and antibunching") {
  const auto u = build_network_unitary(balanced(1));

  const auto boson = pair_distribution(pair_amplitudes(u, u, 1, 2, ExchangePhase(0.0)));
  CHECK(std::fabs(boson.at(0, 0) - 0.5) <= 1e-14);
  CHECK(std::fabs(boson.at(1, 1) - 0.5) <= 1e-14);
  CHECK(std::fabs(boson.at(0, 1)) <= 1e-14);

  const auto fermion = pair_distribution(pair_amplitudes(u, u, 1, 2, ExchangePhase(kPi)));
  CHECK(std::fabs(fermion.at(0, 1) - 1.0) <= 1e-14);
  CHECK(fermion.at(0, 0) <= 1e-14);
  CHECK(fermion.at(1, 1) <= 1e-14);
}

TEST_CASE("fermion coincidences vanish on the port diagonal") {
  const auto u = build_network_unitary(balanced(4));
  const auto fermion = pair_distribution(pair_amplitudes(u, u, 4, 5, ExchangePhase(kPi)));
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(fermion.at(k, k) <= 1e-14);
  }
}

TEST_CASE("four-step fermion walk, regrouped to positions") {
  const auto u = build_network_unitary(balanced(4));
  const auto ports = pair_distribution(pair_amplitudes(u, u, 4, 5, ExchangePhase(kPi)));
  const auto pos = regroup_pair(ports, 4);

  const std::map<std::pair<int, int>, double> expected = {
      {{-4, -4}, 0.0},        {{-4, -2}, 1.0 / 64},  {{-4, 0}, 1.0 / 64},
      {{-4, 2}, 5.0 / 64},    {{-4, 4}, 1.0 / 64},   {{-2, -2}, 1.0 / 64},
      {{-2, 0}, 6.0 / 64},    {{-2, 2}, 34.0 / 64},  {{-2, 4}, 5.0 / 64},
      {{0, 0}, 1.0 / 64},     {{0, 2}, 6.0 / 64},    {{0, 4}, 1.0 / 64},
      {{2, 2}, 1.0 / 64},     {{2, 4}, 1.0 / 64},    {{4, 4}, 0.0},
  };
  for (const auto& [pair, value] : expected) {
    CHECK(std::fabs(position_entry(pos, pair.first, pair.second, 4) - value) <= 1e-12);
  }
  CHECK(std::fabs(pos.total() - 1.0) <= 1e-12);
}

TEST_CASE("pair distributions stay normalized for arbitrary networks") {
  for (int steps = 1; steps <= 5; ++steps) {
    const auto u = build_network_unitary(random_spec(steps, 300 + steps));
    for (const double phi : {0.0, kPi / 3, kPi, 4.2}) {
      const auto d = pair_distribution(pair_amplitudes(u, u, 1, 2 * steps, ExchangePhase(phi)));
      CHECK(std::fabs(d.total() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("phi and 2pi - phi give mirror-image statistics on real networks") {
  const auto u = build_network_unitary(balanced(4));
  for (const double phi : {0.4, 1.1, 2.0}) {
    const auto a = pair_distribution(pair_amplitudes(u, u, 4, 5, ExchangePhase(phi)));
    const auto b =
        pair_distribution(pair_amplitudes(u, u, 4, 5, ExchangePhase(2.0 * kPi - phi)));
    for (std::size_t i = 0; i < a.pair_count(); ++i) {
      CHECK(std::fabs(a.packed()[i] - b.packed()[i]) <= 1e-12);
    }
  }
}

TEST_CASE("anyon sweep endpoints equal direct boson and fermion runs bit for bit") {
  const auto u = build_network_unitary(balanced(4));
  const std::vector<ExchangePhase> phases = {ExchangePhase(0.0), ExchangePhase(kPi / 2),
                                             ExchangePhase(kPi)};
  const auto sweep = anyon_sweep(u, 4, 5, phases);
  REQUIRE(sweep.size() == 3);

  const auto boson = pair_distribution(pair_amplitudes(u, u, 4, 5, ExchangePhase(0.0)));
  const auto fermion = pair_distribution(pair_amplitudes(u, u, 4, 5, ExchangePhase(kPi)));
  CHECK(sweep.front() == boson);
  CHECK(sweep.back() == fermion);

  CHECK_THROWS_AS(anyon_sweep(u, 4, 5, std::span<const ExchangePhase>{}),
                  std::invalid_argument);
}

TEST_CASE("intermediate statistics interpolate the coincidence mass") {
  const auto u = build_network_unitary(balanced(4));
  const auto diag_mass = [&](double phi) {
    const auto d = pair_distribution(pair_amplitudes(u, u, 4, 5, ExchangePhase(phi)));
    double mass = 0.0;
    for (std::size_t k = 0; k < d.label_count(); ++k) mass += d.at(k, k);
    return mass;
  };
  const double boson_mass = diag_mass(0.0);
  const double half_mass = diag_mass(kPi / 2);
  const double fermion_mass = diag_mass(kPi);
  CHECK(std::fabs(boson_mass - 3.0 / 16) <= 1e-12);
  CHECK(std::fabs(half_mass - 3.0 / 32) <= 1e-12);
  CHECK(fermion_mass <= 1e-14);
  CHECK(boson_mass > half_mass);
  CHECK(half_mass > fermion_mass);
}

TEST_CASE("separable product on one splitter") {
  const auto u = build_network_unitary(balanced(1));
  const auto d = separable_product_distribution(u, 1, 2);
  CHECK(std::fabs(d.at(0, 0) - 0.25) <= 1e-14);
  CHECK(std::fabs(d.at(0, 1) - 0.5) <= 1e-14);
  CHECK(std::fabs(d.at(1, 1) - 0.25) <= 1e-14);
}

TEST_CASE("separable product is symmetric in its inputs and normalized") {
  const auto u = build_network_unitary(random_spec(4, 901));
  const auto a = separable_product_distribution(u, 2, 7);
  const auto b = separable_product_distribution(u, 7, 2);
  CHECK(a == b);
  CHECK(std::fabs(a.total() - 1.0) <= 1e-12);
}

TEST_CASE("scalar and avx2 backends produce bit-identical pair distributions") {
  if (!kernels::avx2_available()) return;
  const auto spec = random_spec(5, 555);

  kernels::select_backend(kernels::Backend::scalar);
  const auto u0 = build_network_unitary(spec);
  const auto d0 = pair_distribution(pair_amplitudes(u0, u0, 5, 6, ExchangePhase(1.25)));
  kernels::select_backend(kernels::Backend::avx2);
  const auto u1 = build_network_unitary(spec);
  const auto d1 = pair_distribution(pair_amplitudes(u1, u1, 5, 6, ExchangePhase(1.25)));
  kernels::select_auto();

  REQUIRE(d0.pair_count() == d1.pair_count());
  CHECK(std::memcmp(d0.packed().data(), d1.packed().data(),
                    d0.pair_count() * sizeof(double)) == 0);
}
