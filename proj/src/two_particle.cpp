#include "qwalk/two_particle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwalk/kernels.hpp"

namespace qwalk {

ExchangePhase::ExchangePhase(double phi) : phi_(phi) {
  if (!std::isfinite(phi) || phi < 0.0 || phi >= 2.0 * std::numbers::pi) {
    throw std::invalid_argument("exchange phase must lie in [0, 2*pi)");
  }
}

std::complex<double> ExchangePhase::factor() const {
  return {std::cos(phi_), std::sin(phi_)};
}

bool ExchangePhase::is_boson() const { return phi_ == 0.0; }

bool ExchangePhase::is_fermion() const { return phi_ == std::numbers::pi; }

const char* ExchangePhase::statistics_label() const {
  if (is_boson()) return "boson";
  if (is_fermion()) return "fermion";
  return "anyon";
}

namespace {

void check_pair_inputs(int dim_a, int dim_b, int input_i, int input_j) {
  if (dim_a != dim_b) {
    throw std::invalid_argument("particle unitaries must have equal dimensions");
  }
  if (input_i < 1 || input_i > dim_a || input_j < 1 || input_j > dim_a) {
    throw std::invalid_argument("input rail out of range 1.." + std::to_string(dim_a));
  }
  if (input_i == input_j) {
    throw std::invalid_argument("two-particle input rails must differ");
  }
}

}  // namespace

PairAmplitudes pair_amplitudes(const ModeUnitary& u_a, const ModeUnitary& u_b,
                               int input_i, int input_j, ExchangePhase phase) {
  check_pair_inputs(u_a.dim(), u_b.dim(), input_i, input_j);
  const int n = u_a.dim();
  const auto u = column(u_a, input_i - 1);
  const auto v = column(u_b, input_j - 1);
  const auto s = column(u_a, input_j - 1);
  const auto t = column(u_b, input_i - 1);
  const std::complex<double> w = phase.factor();
  PairAmplitudes out{ComplexMatrix(n), input_i, input_j, phase};
  kernels::ops().pair_outer(reinterpret_cast<const double*>(u.data()),
                            reinterpret_cast<const double*>(v.data()),
                            reinterpret_cast<const double*>(s.data()),
                            reinterpret_cast<const double*>(t.data()),
                            reinterpret_cast<const double*>(&w), out.psi.raw(),
                            static_cast<std::size_t>(n));
  return out;
}

PairDistribution pair_distribution(const PairAmplitudes& amps) {
  const int n = amps.psi.dim();
  std::vector<double> mags(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  kernels::ops().magnitude_squared(amps.psi.raw(), mags.data(), mags.size());

  std::vector<int> ports(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) ports[static_cast<std::size_t>(p)] = p + 1;
  PairDistribution dist(Basis::ports, std::move(ports));
  const auto nn = static_cast<std::size_t>(n);
  for (std::size_t k = 0; k < nn; ++k) {
    dist.at(k, k) = 0.5 * mags[k * nn + k];
    for (std::size_t l = k + 1; l < nn; ++l) {
      dist.at(k, l) = 0.5 * (mags[k * nn + l] + mags[l * nn + k]);
    }
  }
  return dist;
}

std::vector<PairDistribution> anyon_sweep(const ModeUnitary& u, int input_i, int input_j,
                                          std::span<const ExchangePhase> phases) {
  if (phases.empty()) throw std::invalid_argument("anyon sweep needs at least one phase");
  std::vector<PairDistribution> out;
  out.reserve(phases.size());
  for (const ExchangePhase& phase : phases) {
    out.push_back(pair_distribution(pair_amplitudes(u, u, input_i, input_j, phase)));
  }
  return out;
}

PairDistribution separable_product_distribution(const ModeUnitary& u, int input_i, int input_j) {
  check_pair_inputs(u.dim(), u.dim(), input_i, input_j);
  const auto pa = single_particle_distribution(u, input_i);
  const auto pb = single_particle_distribution(u, input_j);
  const auto n = pa.size();
  std::vector<int> ports(n);
  for (std::size_t p = 0; p < n; ++p) ports[p] = static_cast<int>(p) + 1;
  PairDistribution dist(Basis::ports, std::move(ports));
  for (std::size_t k = 0; k < n; ++k) {
    dist.at(k, k) = pa[k] * pb[k];
    for (std::size_t l = k + 1; l < n; ++l) {
      dist.at(k, l) = pa[k] * pb[l] + pa[l] * pb[k];
    }
  }
  return dist;
}

}  // namespace qwalk
