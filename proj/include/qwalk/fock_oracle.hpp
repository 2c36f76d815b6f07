#pragma once

#include <vector>

#include "qwalk/distribution.hpp"
#include "qwalk/network.hpp"

namespace qwalk {

// Brute-force cross-checks for the matrix pipeline. Everything here is
// written against first principles (path sums, permanents, determinants)
// with plain scalar arithmetic and no shared kernel code.

/// Single-particle port distribution by enumerating every coupler path
/// through the pyramid and summing amplitudes. Throws for steps > 20.
std::vector<double> single_particle_path_oracle(const NetworkSpec& spec, int input_rail);

/// Two-boson pair probabilities from 2x2 permanents of the submatrices of u.
PairDistribution boson_pair_oracle(const ModeUnitary& u, int input_i, int input_j);

/// Two-fermion pair probabilities from 2x2 determinants. Coincident pairs
/// are exactly zero in IEEE arithmetic (x*y - y*x).
PairDistribution fermion_pair_oracle(const ModeUnitary& u, int input_i, int input_j);

}  // namespace qwalk
