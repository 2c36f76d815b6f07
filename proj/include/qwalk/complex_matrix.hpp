#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qwalk {

/// Dense square complex matrix, row-major, contiguous storage.
///
/// Element (row, col) lives at data()[row * dim + col]; raw() exposes the
/// same buffer as interleaved (re, im) doubles for the compute kernels.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim);

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  std::complex<double>& at(int row, int col) { return data_[index(row, col)]; }
  const std::complex<double>& at(int row, int col) const { return data_[index(row, col)]; }

  std::complex<double>* data() { return data_.data(); }
  const std::complex<double>* data() const { return data_.data(); }

  double* raw() { return reinterpret_cast<double*>(data_.data()); }
  const double* raw() const { return reinterpret_cast<const double*>(data_.data()); }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(col);
  }

  int dim_ = 0;
  std::vector<std::complex<double>> data_;
};

/// C = A * B via the active kernel backend. Dimensions must match.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

/// Scale every entry by a complex factor.
ComplexMatrix scaled(const ComplexMatrix& m, std::complex<double> factor);

/// Copy of column `col` (0-indexed) as a contiguous vector.
std::vector<std::complex<double>> column(const ComplexMatrix& m, int col);

}  // namespace qwalk
