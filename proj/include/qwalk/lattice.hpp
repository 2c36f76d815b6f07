#pragma once

#include <span>
#include <vector>

#include "qwalk/distribution.hpp"

namespace qwalk {

/// Walker positions reachable after `steps` steps: -T, -T+2, ..., +T.
std::vector<int> lattice_positions(int steps);

/// Detector port -> lattice position for a T-step pyramid with N = 2T ports.
///
/// Interior ports pair up across rail boundaries: ports 2k and 2k+1 both map
/// to position -T + 2k. The two edge ports 1 and 2T map alone to -T and +T.
int port_to_position(int port, int steps);

/// Regroup a length-2T port distribution onto the T+1 lattice positions.
/// Total probability is preserved exactly up to float addition.
std::vector<double> regroup_single(std::span<const double> port_probs, int steps);

/// Pairwise regrouping: unordered port pairs accumulate onto unordered
/// position pairs through port_to_position.
PairDistribution regroup_pair(const PairDistribution& ports, int steps);

}  // namespace qwalk
