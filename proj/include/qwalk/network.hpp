#pragma once

#include <array>
#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "qwalk/complex_matrix.hpp"

namespace qwalk {

/// One directional coupler: cross-coupling ratio c in [0, 1] plus a relative
/// phase theta. c = 1/2, theta = 0 is the balanced 50/50 splitter; c = 0 is a
/// pass-through and c = 1 a full crossover.
struct CouplerSpec {
  double cross_coupling = 0.5;
  double phase = 0.0;
};

void validate(const CouplerSpec& spec);

/// 2x2 mode matrix of a coupler, row-major over (upper, lower) rails:
///
///   [ sqrt(1-c)            -sqrt(c) e^{+i theta} ]
///   [ sqrt(c) e^{-i theta}  sqrt(1-c)            ]
///
/// Rows are outputs, columns inputs. At (c, theta) = (1/2, 0) this is the
/// canonical balanced splitter (1/sqrt(2)) [[1, -1], [1, 1]].
std::array<std::complex<double>, 4> coupler_matrix(const CouplerSpec& spec);

/// Pyramid of couplers implementing a T-step walk on N = 2T rails.
///
/// Rails are numbered 1..N from top to bottom. Layer t (1-based) holds t
/// couplers; coupler k of layer t acts on the rail pair returned by
/// coupler_rails. Couplers not listed in `overrides` use `default_coupler`.
struct NetworkSpec {
  int steps = 0;
  CouplerSpec default_coupler{};
  std::map<std::pair<int, int>, CouplerSpec> overrides;  // key: (layer t, index k), 1-based

  int rail_count() const { return 2 * steps; }
  const CouplerSpec& coupler_at(int layer, int index) const;
};

/// Throws std::invalid_argument for steps < 1, malformed couplers, or
/// override keys outside the pyramid.
void validate(const NetworkSpec& spec);

/// Rails (a, a+1) touched by coupler k of layer t: a = T - t + 2k - 1.
std::pair<int, int> coupler_rails(int steps, int layer, int index);

/// Unitary mapping input rail amplitudes to output rail amplitudes,
/// element (out, in), 0-indexed internally as rail - 1.
using ModeUnitary = ComplexMatrix;

ModeUnitary build_network_unitary(const NetworkSpec& spec);

/// |U[k][input_rail - 1]|^2 over output rails k. input_rail is 1-based.
std::vector<double> single_particle_distribution(const ModeUnitary& u, int input_rail);

/// max_ij |(U^dagger U - I)_ij|, a cheap unitarity residual.
double verify_unitarity(const ModeUnitary& u);

}  // namespace qwalk
