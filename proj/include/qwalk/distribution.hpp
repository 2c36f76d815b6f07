#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qwalk {

enum class Basis { ports, positions };

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& name);

/// Probability over unordered mode pairs {j1 <= j2}, stored packed in
/// lexicographic (j1, j2) order over `labels` x `labels`. Labels are either
/// port numbers 1..2T or lattice positions -T..T in steps of 2.
class PairDistribution {
 public:
  PairDistribution() = default;
  PairDistribution(Basis basis, std::vector<int> labels);

  Basis basis() const { return basis_; }
  const std::vector<int>& labels() const { return labels_; }
  std::size_t label_count() const { return labels_.size(); }
  std::size_t pair_count() const { return probs_.size(); }

  /// Probability of the unordered pair of label indices (i, j), any order.
  double& at(std::size_t i, std::size_t j) { return probs_[pack(i, j)]; }
  double at(std::size_t i, std::size_t j) const { return probs_[pack(i, j)]; }

  const std::vector<double>& packed() const { return probs_; }
  std::vector<double>& packed() { return probs_; }

  double total() const;

  friend bool operator==(const PairDistribution&, const PairDistribution&) = default;

 private:
  std::size_t pack(std::size_t i, std::size_t j) const;

  Basis basis_ = Basis::ports;
  std::vector<int> labels_;
  std::vector<double> probs_;
};

}  // namespace qwalk
