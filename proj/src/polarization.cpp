#include "qwalk/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qwalk/lattice.hpp"
#include "qwalk/metrics.hpp"

namespace qwalk {

TiltCalibration::TiltCalibration(std::vector<std::pair<double, double>> points)
    : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw std::invalid_argument("tilt calibration needs at least two points");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].first) || !std::isfinite(points_[i].second) ||
        points_[i].second <= 0.0) {
      throw std::invalid_argument("tilt calibration entries must be finite with ratio > 0");
    }
    if (i > 0 && points_[i].first <= points_[i - 1].first) {
      throw std::invalid_argument("tilt calibration angles must be strictly increasing");
    }
  }
}

double TiltCalibration::ratio_at(double angle) const {
  if (!std::isfinite(angle) || angle < points_.front().first || angle > points_.back().first) {
    throw std::invalid_argument("tilt angle " + std::to_string(angle) +
                                " outside the calibrated range");
  }
  const auto it = std::lower_bound(points_.begin(), points_.end(), angle,
                                   [](const auto& p, double a) { return p.first < a; });
  if (it->first == angle) return it->second;
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double t = (angle - lo.first) / (hi.first - lo.first);
  return lo.second + t * (hi.second - lo.second);
}

void validate(const PolarizedCouplerModel& model) {
  if (!std::isfinite(model.coupling_strength)) {
    throw std::invalid_argument("coupling_strength must be finite");
  }
  if (!std::isfinite(model.ratio_vh) || model.ratio_vh <= 0.0) {
    throw std::invalid_argument("ratio_vh must be finite and positive");
  }
  if (!std::isfinite(model.birefringent_phase)) {
    throw std::invalid_argument("birefringent_phase must be finite");
  }
  for (const auto& [key, strength] : model.strength_overrides) {
    if (!std::isfinite(strength)) {
      throw std::invalid_argument("coupler strength override must be finite");
    }
    (void)key;
  }
}

namespace {

NetworkSpec spec_for_scale(const NetworkSpec& base, const PolarizedCouplerModel& model,
                           double scale) {
  validate(base);
  validate(model);
  for (const auto& [key, strength] : model.strength_overrides) {
    if (key.first < 1 || key.first > base.steps || key.second < 1 || key.second > key.first) {
      throw std::invalid_argument("coupler strength override (" + std::to_string(key.first) +
                                  ", " + std::to_string(key.second) +
                                  ") is outside the pyramid");
    }
    (void)strength;
  }
  NetworkSpec out = base;
  out.overrides.clear();
  for (int layer = 1; layer <= base.steps; ++layer) {
    for (int index = 1; index <= layer; ++index) {
      const auto it = model.strength_overrides.find({layer, index});
      const double strength =
          it == model.strength_overrides.end() ? model.coupling_strength : it->second;
      const double s = std::sin(scale * strength);
      out.overrides[{layer, index}] =
          CouplerSpec{s * s, base.coupler_at(layer, index).phase};
    }
  }
  return out;
}

}  // namespace

NetworkSpec horizontal_spec(const NetworkSpec& base, const PolarizedCouplerModel& model) {
  return spec_for_scale(base, model, 1.0);
}

NetworkSpec vertical_spec(const NetworkSpec& base, const PolarizedCouplerModel& model) {
  return spec_for_scale(base, model, model.ratio_vh);
}

std::pair<ModeUnitary, ModeUnitary> polarized_network(const NetworkSpec& base,
                                                      const PolarizedCouplerModel& model) {
  ModeUnitary u_h = build_network_unitary(horizontal_spec(base, model));
  ModeUnitary u_v = build_network_unitary(vertical_spec(base, model));
  if (model.birefringent_phase != 0.0) {
    u_v = scaled(u_v, std::complex<double>{std::cos(model.birefringent_phase),
                                           std::sin(model.birefringent_phase)});
  }
  return {std::move(u_h), std::move(u_v)};
}

IndependenceReport polarization_independence_report(const NetworkSpec& base,
                                                    const PolarizedCouplerModel& model,
                                                    int input_rail, Basis basis) {
  const auto [u_h, u_v] = polarized_network(base, model);
  const ModeUnitary ideal = build_network_unitary(base);

  auto dist = [&](const ModeUnitary& u) {
    auto probs = single_particle_distribution(u, input_rail);
    if (basis == Basis::positions) return regroup_single(probs, base.steps);
    return probs;
  };

  const auto p_ideal = dist(ideal);
  const auto p_h = dist(u_h);
  const auto p_v = dist(u_v);
  std::vector<double> p_mix(p_h.size());
  for (std::size_t i = 0; i < p_h.size(); ++i) p_mix[i] = 0.5 * (p_h[i] + p_v[i]);

  IndependenceReport report;
  report.horizontal = similarity(p_h, p_ideal);
  report.vertical = similarity(p_v, p_ideal);
  report.diagonal = similarity(p_mix, p_ideal);
  report.antidiagonal = report.diagonal;
  return report;
}

PairDistribution entangled_with_imperfections(const NetworkSpec& base,
                                              const PolarizedCouplerModel& model,
                                              int input_i, int input_j, ExchangePhase phase) {
  const auto [u_h, u_v] = polarized_network(base, model);
  return pair_distribution(pair_amplitudes(u_h, u_v, input_i, input_j, phase));
}

}  // namespace qwalk
