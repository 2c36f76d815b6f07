#include "qwalk/metrics.hpp"

#include <stdexcept>

#include "qwalk/kernels.hpp"

namespace qwalk {
namespace {

void check_pair_metric_inputs(const PairDistribution& d0, const PairDistribution& d1) {
  if (d0.basis() != d1.basis()) {
    throw std::invalid_argument("pair distributions use different bases");
  }
  if (d0.labels() != d1.labels()) {
    throw std::invalid_argument("pair distributions use different mode labels");
  }
}

}  // namespace

double similarity(std::span<const double> d0, std::span<const double> d1) {
  if (d0.size() != d1.size()) {
    throw std::invalid_argument("distributions differ in length");
  }
  if (d0.empty()) throw std::invalid_argument("distributions are empty");
  for (std::size_t i = 0; i < d0.size(); ++i) {
    if (!(d0[i] >= 0.0) || !(d1[i] >= 0.0)) {
      throw std::invalid_argument("distributions must be non-negative");
    }
  }
  double sums[3];
  kernels::ops().bhattacharyya_sums(d0.data(), d1.data(), d0.size(), sums);
  if (sums[1] <= 0.0 || sums[2] <= 0.0) {
    throw std::invalid_argument("distributions must have positive total mass");
  }
  return (sums[0] * sums[0]) / (sums[1] * sums[2]);
}

double similarity(const PairDistribution& d0, const PairDistribution& d1) {
  check_pair_metric_inputs(d0, d1);
  return similarity(std::span<const double>(d0.packed()), std::span<const double>(d1.packed()));
}

double max_abs_difference(std::span<const double> d0, std::span<const double> d1) {
  if (d0.size() != d1.size()) {
    throw std::invalid_argument("distributions differ in length");
  }
  return kernels::ops().max_abs_diff(d0.data(), d1.data(), d0.size());
}

double max_abs_difference(const PairDistribution& d0, const PairDistribution& d1) {
  check_pair_metric_inputs(d0, d1);
  return max_abs_difference(std::span<const double>(d0.packed()),
                            std::span<const double>(d1.packed()));
}

}  // namespace qwalk
