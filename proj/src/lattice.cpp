#include "qwalk/lattice.hpp"

#include <stdexcept>
#include <string>

namespace qwalk {

std::vector<int> lattice_positions(int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int j = -steps; j <= steps; j += 2) out.push_back(j);
  return out;
}

int port_to_position(int port, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (port < 1 || port > 2 * steps) {
    throw std::invalid_argument("port " + std::to_string(port) + " out of range 1.." +
                                std::to_string(2 * steps));
  }
  if (port == 1) return -steps;
  if (port == 2 * steps) return steps;
  return -steps + 2 * (port / 2);
}

namespace {

std::size_t position_index(int position, int steps) {
  return static_cast<std::size_t>((position + steps) / 2);
}

}  // namespace

std::vector<double> regroup_single(std::span<const double> port_probs, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (port_probs.size() != static_cast<std::size_t>(2 * steps)) {
    throw std::invalid_argument("expected " + std::to_string(2 * steps) + " port probabilities");
  }
  std::vector<double> out(static_cast<std::size_t>(steps) + 1, 0.0);
  for (int port = 1; port <= 2 * steps; ++port) {
    out[position_index(port_to_position(port, steps), steps)] +=
        port_probs[static_cast<std::size_t>(port - 1)];
  }
  return out;
}

PairDistribution regroup_pair(const PairDistribution& ports, int steps) {
  if (ports.basis() != Basis::ports) {
    throw std::invalid_argument("regroup_pair expects a port-basis distribution");
  }
  if (ports.label_count() != static_cast<std::size_t>(2 * steps)) {
    throw std::invalid_argument("port distribution does not match step count");
  }
  PairDistribution out(Basis::positions, lattice_positions(steps));
  const std::size_t n = ports.label_count();
  for (std::size_t i = 0; i < n; ++i) {
    const auto pi = position_index(port_to_position(static_cast<int>(i) + 1, steps), steps);
    for (std::size_t j = i; j < n; ++j) {
      const auto pj = position_index(port_to_position(static_cast<int>(j) + 1, steps), steps);
      out.at(pi, pj) += ports.at(i, j);
    }
  }
  return out;
}

}  // namespace qwalk
