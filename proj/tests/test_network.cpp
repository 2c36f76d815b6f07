#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "qwalk/kernels.hpp"
#include "qwalk/network.hpp"

using namespace qwalk;

namespace {

NetworkSpec balanced(int steps) {
  NetworkSpec spec;
  spec.steps = steps;
  return spec;
}

NetworkSpec random_spec(int steps, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coupling(0.0, 1.0);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  NetworkSpec spec;
  spec.steps = steps;
  for (int t = 1; t <= steps; ++t) {
    for (int k = 1; k <= t; ++k) {
      spec.overrides[{t, k}] = CouplerSpec{coupling(rng), phase(rng)};
    }
  }
  return spec;
}

}  // namespace

TEST_CASE("coupler_matrix endpoints") {
  const double r = std::sqrt(0.5);

  const auto balanced_gate = coupler_matrix({0.5, 0.0});
  CHECK(balanced_gate[0] == std::complex<double>{r, 0.0});
  CHECK(balanced_gate[1].real() == -r);
  CHECK(balanced_gate[1].imag() == 0.0);
  CHECK(balanced_gate[2].real() == r);
  CHECK(balanced_gate[2].imag() == 0.0);
  CHECK(balanced_gate[3] == std::complex<double>{r, 0.0});

  const auto bar_gate = coupler_matrix({0.0, 0.3});
  CHECK(bar_gate[0] == std::complex<double>{1.0, 0.0});
  CHECK(std::abs(bar_gate[1]) == 0.0);
  CHECK(std::abs(bar_gate[2]) == 0.0);
  CHECK(bar_gate[3] == std::complex<double>{1.0, 0.0});

  const auto cross_gate = coupler_matrix({1.0, 0.0});
  CHECK(std::abs(cross_gate[0]) == 0.0);
  CHECK(std::abs(cross_gate[1] + std::complex<double>{1.0, 0.0}) == 0.0);
  CHECK(std::abs(cross_gate[2] - std::complex<double>{1.0, 0.0}) == 0.0);
  CHECK(std::abs(cross_gate[3]) == 0.0);
}

TEST_CASE("coupler_matrix phase factors") {
  const double theta = 0.7;
  const auto gate = coupler_matrix({0.3, theta});
  const double cross = std::sqrt(0.3);
  CHECK(std::abs(gate[1] - (-cross * std::exp(std::complex<double>{0.0, theta}))) < 1e-15);
  CHECK(std::abs(gate[2] - (cross * std::exp(std::complex<double>{0.0, -theta}))) < 1e-15);
  // The matrix is unitary for any (c, theta).
  const auto a = gate[0], b = gate[1], c = gate[2], d = gate[3];
  CHECK(std::abs(std::norm(a) + std::norm(c) - 1.0) < 1e-15);
  CHECK(std::abs(std::norm(b) + std::norm(d) - 1.0) < 1e-15);
  CHECK(std::abs(std::conj(a) * b + std::conj(c) * d) < 1e-15);
}

TEST_CASE("coupler validation") {
  CHECK_THROWS_AS(coupler_matrix({-0.1, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(coupler_matrix({1.1, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(coupler_matrix({std::nan(""), 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(coupler_matrix({0.5, std::nan("")}), std::invalid_argument);
}

TEST_CASE("coupler_rails walks the pyramid") {
  CHECK(coupler_rails(4, 1, 1) == std::pair{4, 5});
  CHECK(coupler_rails(4, 2, 1) == std::pair{3, 4});
  CHECK(coupler_rails(4, 2, 2) == std::pair{5, 6});
  CHECK(coupler_rails(4, 4, 1) == std::pair{1, 2});
  CHECK(coupler_rails(4, 4, 4) == std::pair{7, 8});
  CHECK(coupler_rails(1, 1, 1) == std::pair{1, 2});
  CHECK_THROWS_AS(coupler_rails(4, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(coupler_rails(4, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(coupler_rails(4, 0, 1), std::invalid_argument);
}

TEST_CASE("network validation") {
  CHECK_THROWS_AS(validate(balanced(0)), std::invalid_argument);
  CHECK_THROWS_AS(validate(balanced(-3)), std::invalid_argument);
  CHECK_THROWS_AS(build_network_unitary(balanced(0)), std::invalid_argument);

  NetworkSpec bad = balanced(4);
  bad.overrides[{5, 1}] = CouplerSpec{};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  NetworkSpec bad2 = balanced(4);
  bad2.overrides[{2, 3}] = CouplerSpec{};
  CHECK_THROWS_AS(validate(bad2), std::invalid_argument);

  NetworkSpec bad3 = balanced(3);
  bad3.default_coupler.cross_coupling = 2.0;
  CHECK_THROWS_AS(validate(bad3), std::invalid_argument);
}

TEST_CASE("one-step network is the canonical splitter") {
  const auto u = build_network_unitary(balanced(1));
  const double r = std::sqrt(0.5);
  REQUIRE(u.dim() == 2);
  CHECK(u.at(0, 0).real() == r);
  CHECK(u.at(0, 1).real() == -r);
  CHECK(u.at(1, 0).real() == r);
  CHECK(u.at(1, 1).real() == r);
  CHECK(u.at(0, 0).imag() == 0.0);
  CHECK(u.at(1, 1).imag() == 0.0);
}

TEST_CASE("four-step balanced walk from the two central rails") {
  const auto u = build_network_unitary(balanced(4));
  REQUIRE(u.dim() == 8);

  const double expected4[] = {1.0 / 16, 1.0 / 16, 1.0 / 16, 1.0 / 16,
                              1.0 / 16, 9.0 / 16, 1.0 / 16, 1.0 / 16};
  const auto p4 = single_particle_distribution(u, 4);
  REQUIRE(p4.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(std::fabs(p4[i] - expected4[i]) <= 1e-12);
  }

  // Launching one rail lower mirrors the walk top-to-bottom.
  const auto p5 = single_particle_distribution(u, 5);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(std::fabs(p5[i] - expected4[7 - i]) <= 1e-12);
  }
}

TEST_CASE("distributions are normalized") {
  for (int steps = 1; steps <= 6; ++steps) {
    const auto u = build_network_unitary(random_spec(steps, 100 + steps));
    for (int rail = 1; rail <= 2 * steps; ++rail) {
      const auto p = single_particle_distribution(u, rail);
      double total = 0.0;
      for (const double v : p) total += v;
      CHECK(std::fabs(total - 1.0) <= 1e-13);
    }
  }
}

TEST_CASE("unitarity residual stays below 1e-12") {
  for (int steps = 1; steps <= 10; ++steps) {
    CHECK(verify_unitarity(build_network_unitary(balanced(steps))) < 1e-12);
  }
  for (int steps = 1; steps <= 6; ++steps) {
    CHECK(verify_unitarity(build_network_unitary(random_spec(steps, 200 + steps))) < 1e-12);
  }
}

TEST_CASE("input rail bounds are enforced") {
  const auto u = build_network_unitary(balanced(4));
  CHECK_THROWS_AS(single_particle_distribution(u, 0), std::invalid_argument);
  CHECK_THROWS_AS(single_particle_distribution(u, 9), std::invalid_argument);
}

TEST_CASE("pass-through couplers leave their rails alone") {
  NetworkSpec spec = balanced(3);
  for (int t = 1; t <= 3; ++t) {
    for (int k = 1; k <= t; ++k) {
      spec.overrides[{t, k}] = CouplerSpec{0.0, 0.0};
    }
  }
  const auto u = build_network_unitary(spec);
  const auto id = ComplexMatrix::identity(6);
  CHECK(u == id);
}

TEST_CASE("scalar and avx2 backends build bit-identical unitaries") {
  if (!kernels::avx2_available()) return;
  const auto spec = random_spec(6, 777);

  kernels::select_backend(kernels::Backend::scalar);
  const auto u_scalar = build_network_unitary(spec);
  kernels::select_backend(kernels::Backend::avx2);
  const auto u_avx2 = build_network_unitary(spec);
  kernels::select_auto();

  REQUIRE(u_scalar.dim() == u_avx2.dim());
  const std::size_t bytes =
      static_cast<std::size_t>(u_scalar.dim()) * u_scalar.dim() * sizeof(std::complex<double>);
  CHECK(std::memcmp(u_scalar.raw(), u_avx2.raw(), bytes) == 0);
}
