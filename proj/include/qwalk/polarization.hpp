#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qwalk/distribution.hpp"
#include "qwalk/network.hpp"
#include "qwalk/two_particle.hpp"

namespace qwalk {

/// Piecewise-linear lookup from coupler tilt angle to the V/H coupling ratio,
/// for devices characterized empirically. Exact at the calibration nodes,
/// throws outside the calibrated range.
class TiltCalibration {
 public:
  explicit TiltCalibration(std::vector<std::pair<double, double>> points);

  double ratio_at(double angle) const;
  const std::vector<std::pair<double, double>>& points() const { return points_; }

 private:
  std::vector<std::pair<double, double>> points_;  // (angle, ratio), angles ascending
};

/// Polarization-dependent coupler behaviour. A physical coupler of strength
/// kappa * ell cross-couples sin^2(kappa * ell) of the horizontal light and
/// sin^2(ratio_vh * kappa * ell) of the vertical, so ratio_vh = 1 is a
/// polarization-independent device.
struct PolarizedCouplerModel {
  double coupling_strength = 0.0;  // kappa * ell applied to every coupler
  double ratio_vh = 1.0;
  double birefringent_phase = 0.0;  // global phase picked up by V light
  std::map<std::pair<int, int>, double> strength_overrides;  // per (layer, index)
};

void validate(const PolarizedCouplerModel& model);

/// NetworkSpec seen by H (or V) light: cross-couplings from the model's
/// strengths, phases inherited from `base`.
NetworkSpec horizontal_spec(const NetworkSpec& base, const PolarizedCouplerModel& model);
NetworkSpec vertical_spec(const NetworkSpec& base, const PolarizedCouplerModel& model);

/// (U_H, U_V). With ratio_vh = 1 and zero birefringent phase the two are
/// identical bit for bit.
std::pair<ModeUnitary, ModeUnitary> polarized_network(const NetworkSpec& base,
                                                      const PolarizedCouplerModel& model);

/// Similarity of each polarization's walk output against the ideal design
/// distribution of `base`, in the requested basis. `diagonal` and
/// `antidiagonal` probe the +/- superpositions, whose port distributions are
/// the equal mixture of the H and V ones (no H/V interference after the
/// polarization-insensitive detectors).
struct IndependenceReport {
  double horizontal = 0.0;
  double vertical = 0.0;
  double diagonal = 0.0;
  double antidiagonal = 0.0;
};

IndependenceReport polarization_independence_report(const NetworkSpec& base,
                                                    const PolarizedCouplerModel& model,
                                                    int input_rail,
                                                    Basis basis = Basis::positions);

/// Two-particle distribution when the entangled pair rides orthogonal
/// polarizations: particle a sees U_H, particle b sees U_V.
PairDistribution entangled_with_imperfections(const NetworkSpec& base,
                                              const PolarizedCouplerModel& model,
                                              int input_i, int input_j, ExchangePhase phase);

}  // namespace qwalk
