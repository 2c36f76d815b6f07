#pragma once

#include <span>

#include "qwalk/distribution.hpp"

namespace qwalk {

/// Similarity S = (sum_j sqrt(d_j d'_j))^2 / (sum_j d_j * sum_j d'_j).
///
/// Self-normalizing, so unnormalized inputs are fine; S is symmetric and
/// invariant under scaling either argument. Throws if the spans differ in
/// length, contain negatives, or either sums to zero.
double similarity(std::span<const double> d0, std::span<const double> d1);

/// Same score over packed pair distributions; diagonal entries enter once.
/// Requires matching basis and labels.
double similarity(const PairDistribution& d0, const PairDistribution& d1);

double max_abs_difference(std::span<const double> d0, std::span<const double> d1);
double max_abs_difference(const PairDistribution& d0, const PairDistribution& d1);

}  // namespace qwalk
