#include "qwalk/network.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qwalk/kernels.hpp"

namespace qwalk {

void validate(const CouplerSpec& spec) {
  if (!std::isfinite(spec.cross_coupling) || spec.cross_coupling < 0.0 ||
      spec.cross_coupling > 1.0) {
    throw std::invalid_argument("coupler cross_coupling must lie in [0, 1]");
  }
  if (!std::isfinite(spec.phase)) {
    throw std::invalid_argument("coupler phase must be finite");
  }
}

std::array<std::complex<double>, 4> coupler_matrix(const CouplerSpec& spec) {
  validate(spec);
  const double bar = std::sqrt(1.0 - spec.cross_coupling);
  const double cross = std::sqrt(spec.cross_coupling);
  const std::complex<double> up{std::cos(spec.phase), std::sin(spec.phase)};
  return {std::complex<double>{bar, 0.0}, -cross * up,
          cross * std::conj(up), std::complex<double>{bar, 0.0}};
}

const CouplerSpec& NetworkSpec::coupler_at(int layer, int index) const {
  const auto it = overrides.find({layer, index});
  return it == overrides.end() ? default_coupler : it->second;
}

void validate(const NetworkSpec& spec) {
  if (spec.steps < 1) {
    throw std::invalid_argument("network must have at least one step");
  }
  validate(spec.default_coupler);
  for (const auto& [key, coupler] : spec.overrides) {
    const auto [layer, index] = key;
    if (layer < 1 || layer > spec.steps || index < 1 || index > layer) {
      throw std::invalid_argument("coupler override (" + std::to_string(layer) + ", " +
                                  std::to_string(index) + ") is outside the pyramid");
    }
    validate(coupler);
  }
}

std::pair<int, int> coupler_rails(int steps, int layer, int index) {
  if (steps < 1 || layer < 1 || layer > steps || index < 1 || index > layer) {
    throw std::invalid_argument("coupler position outside the pyramid");
  }
  const int a = steps - layer + 2 * index - 1;
  return {a, a + 1};
}

ModeUnitary build_network_unitary(const NetworkSpec& spec) {
  validate(spec);
  const int n = spec.rail_count();
  ModeUnitary u = ComplexMatrix::identity(n);
  const auto& k = kernels::ops();
  for (int layer = 1; layer <= spec.steps; ++layer) {
    for (int index = 1; index <= layer; ++index) {
      const auto [a, b] = coupler_rails(spec.steps, layer, index);
      const auto gate = coupler_matrix(spec.coupler_at(layer, index));
      // Left-multiplying by the layer unitary mixes rows a-1 and b-1 of U.
      k.apply_coupler(u.raw() + static_cast<std::size_t>(a - 1) * n * 2,
                      u.raw() + static_cast<std::size_t>(b - 1) * n * 2,
                      static_cast<std::size_t>(n),
                      reinterpret_cast<const double*>(gate.data()));
    }
  }
  return u;
}

std::vector<double> single_particle_distribution(const ModeUnitary& u, int input_rail) {
  const int n = u.dim();
  if (input_rail < 1 || input_rail > n) {
    throw std::invalid_argument("input_rail " + std::to_string(input_rail) +
                                " out of range for " + std::to_string(n) + "-rail network");
  }
  const auto col = column(u, input_rail - 1);
  std::vector<double> probs(static_cast<std::size_t>(n));
  kernels::ops().magnitude_squared(reinterpret_cast<const double*>(col.data()), probs.data(),
                                   col.size());
  return probs;
}

double verify_unitarity(const ModeUnitary& u) {
  const int n = u.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> acc{0.0, 0.0};
      for (int k = 0; k < n; ++k) {
        acc += std::conj(u.at(k, i)) * u.at(k, j);
      }
      if (i == j) acc -= 1.0;
      const double dev = std::abs(acc);
      if (dev > worst) worst = dev;
    }
  }
  return worst;
}

}  // namespace qwalk
