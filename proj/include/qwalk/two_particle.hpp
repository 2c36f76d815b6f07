#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qwalk/complex_matrix.hpp"
#include "qwalk/distribution.hpp"
#include "qwalk/network.hpp"

namespace qwalk {

/// Exchange phase phi of the two-particle input state, radians in [0, 2pi).
/// phi = 0 reproduces bosons, phi = pi fermions, anything else a generalized
/// (anyonic) symmetry.
class ExchangePhase {
 public:
  explicit ExchangePhase(double phi);

  double value() const { return phi_; }
  std::complex<double> factor() const;  // e^{i phi}

  bool is_boson() const;
  bool is_fermion() const;
  const char* statistics_label() const;  // "boson" | "fermion" | "anyon"

  friend bool operator==(const ExchangePhase&, const ExchangePhase&) = default;

 private:
  double phi_;
};

/// Joint amplitudes psi[K][L] of finding particle a in port K+1 and particle
/// b in port L+1, for the symmetrized input (|I>_a |J>_b + e^{i phi} |J>_a |I>_b)/sqrt(2):
///
///   psi[K][L] = Ua[K][I] Ub[L][J] + e^{i phi} Ua[K][J] Ub[L][I]
///
/// (stored without the 1/sqrt(2); pair_distribution carries the 1/2).
struct PairAmplitudes {
  ComplexMatrix psi;
  int input_i = 0;  // 1-based input rails
  int input_j = 0;
  ExchangePhase phase{0.0};
};

/// u_a and u_b are the mode unitaries seen by each particle (identical for an
/// unpolarized device). input_i and input_j are 1-based and must differ.
PairAmplitudes pair_amplitudes(const ModeUnitary& u_a, const ModeUnitary& u_b,
                               int input_i, int input_j, ExchangePhase phase);

/// Unordered detection probabilities: off-diagonal pairs take
/// (|psi[K][L]|^2 + |psi[L][K]|^2) / 2, coincident pairs |psi[K][K]|^2 / 2.
PairDistribution pair_distribution(const PairAmplitudes& amps);

/// One pair distribution per phase, computed by the identical code path as
/// pair_distribution so sweep endpoints match direct calls bit for bit.
std::vector<PairDistribution> anyon_sweep(const ModeUnitary& u, int input_i, int input_j,
                                          std::span<const ExchangePhase> phases);

/// Distinguishable-particle baseline: product of the two single-particle
/// distributions folded onto unordered pairs.
PairDistribution separable_product_distribution(const ModeUnitary& u, int input_i, int input_j);

}  // namespace qwalk
