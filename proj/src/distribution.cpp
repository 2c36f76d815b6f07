#include "qwalk/distribution.hpp"

#include <stdexcept>
#include <utility>

namespace qwalk {

const char* basis_name(Basis b) {
  return b == Basis::ports ? "ports" : "positions";
}

Basis basis_from_name(const std::string& name) {
  if (name == "ports") return Basis::ports;
  if (name == "positions") return Basis::positions;
  throw std::invalid_argument("unknown basis '" + name + "' (expected ports or positions)");
}

PairDistribution::PairDistribution(Basis basis, std::vector<int> labels)
    : basis_(basis), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  probs_.assign(n * (n + 1) / 2, 0.0);
}

std::size_t PairDistribution::pack(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const std::size_t n = labels_.size();
  if (j >= n) throw std::out_of_range("pair index out of range");
  // Row-packed upper triangle: row i starts after i rows of lengths n, n-1, ...
  return i * n - i * (i - 1) / 2 + (j - i);
}

double PairDistribution::total() const {
  double t = 0.0;
  for (const double p : probs_) t += p;
  return t;
}

}  // namespace qwalk
