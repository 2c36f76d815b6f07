#include "qwalk/fock_oracle.hpp"

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace qwalk {
namespace {

struct PathWalker {
  const NetworkSpec& spec;
  std::vector<std::array<std::complex<double>, 4>> gates;  // per layer, all couplers
  std::vector<std::complex<double>> port_amps;

  explicit PathWalker(const NetworkSpec& s) : spec(s), port_amps(s.rail_count()) {
    for (int layer = 1; layer <= spec.steps; ++layer) {
      for (int index = 1; index <= layer; ++index) {
        gates.push_back(coupler_matrix(spec.coupler_at(layer, index)));
      }
    }
  }

  const std::array<std::complex<double>, 4>& gate(int layer, int index) const {
    // Layers 1..layer-1 hold 1 + 2 + ... + (layer-1) couplers.
    return gates[static_cast<std::size_t>((layer - 1) * layer / 2 + index - 1)];
  }

  // Depth-first over layers: at each layer the photon either sits on a rail
  // no coupler touches (amplitude passes through) or enters coupler (a, a+1)
  // and branches to both output rails.
  void descend(int layer, int rail, std::complex<double> amp) {
    if (layer > spec.steps) {
      port_amps[static_cast<std::size_t>(rail - 1)] += amp;
      return;
    }
    const int lo = spec.steps - layer + 1;
    const int hi = spec.steps + layer;
    if (rail < lo || rail > hi) {
      descend(layer + 1, rail, amp);
      return;
    }
    const int index = (rail - lo) / 2 + 1;
    const auto [a, b] = coupler_rails(spec.steps, layer, index);
    const auto& g = gate(layer, index);
    const int in = (rail == a) ? 0 : 1;   // column of the 2x2 gate
    descend(layer + 1, a, amp * g[static_cast<std::size_t>(in)]);
    descend(layer + 1, b, amp * g[static_cast<std::size_t>(2 + in)]);
  }
};

void check_oracle_inputs(const ModeUnitary& u, int input_i, int input_j) {
  const int n = u.dim();
  if (input_i < 1 || input_i > n || input_j < 1 || input_j > n) {
    throw std::invalid_argument("input rail out of range 1.." + std::to_string(n));
  }
  if (input_i == input_j) {
    throw std::invalid_argument("two-particle input rails must differ");
  }
}

std::vector<int> port_labels(int n) {
  std::vector<int> ports(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) ports[static_cast<std::size_t>(p)] = p + 1;
  return ports;
}

}  // namespace

std::vector<double> single_particle_path_oracle(const NetworkSpec& spec, int input_rail) {
  validate(spec);
  if (spec.steps > 20) {
    throw std::invalid_argument("path oracle supports at most 20 steps");
  }
  if (input_rail < 1 || input_rail > spec.rail_count()) {
    throw std::invalid_argument("input_rail out of range");
  }
  PathWalker walker(spec);
  walker.descend(1, input_rail, {1.0, 0.0});
  std::vector<double> probs(walker.port_amps.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = std::norm(walker.port_amps[i]);
  }
  return probs;
}

PairDistribution boson_pair_oracle(const ModeUnitary& u, int input_i, int input_j) {
  check_oracle_inputs(u, input_i, input_j);
  const int n = u.dim();
  const int ci = input_i - 1;
  const int cj = input_j - 1;
  PairDistribution dist(Basis::ports, port_labels(n));
  for (int k = 0; k < n; ++k) {
    for (int l = k; l < n; ++l) {
      // perm of [[U[k][I], U[k][J]], [U[l][I], U[l][J]]]
      const std::complex<double> perm = u.at(k, ci) * u.at(l, cj) + u.at(k, cj) * u.at(l, ci);
      const double p = std::norm(perm);
      dist.at(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) =
          (k == l) ? 0.5 * p : p;
    }
  }
  return dist;
}

PairDistribution fermion_pair_oracle(const ModeUnitary& u, int input_i, int input_j) {
  check_oracle_inputs(u, input_i, input_j);
  const int n = u.dim();
  const int ci = input_i - 1;
  const int cj = input_j - 1;
  PairDistribution dist(Basis::ports, port_labels(n));
  for (int k = 0; k < n; ++k) {
    for (int l = k; l < n; ++l) {
      const std::complex<double> det = u.at(k, ci) * u.at(l, cj) - u.at(k, cj) * u.at(l, ci);
      dist.at(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) = std::norm(det);
    }
  }
  return dist;
}

}  // namespace qwalk
