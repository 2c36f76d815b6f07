#include "qwalk/complex_matrix.hpp"

#include <stdexcept>

#include "qwalk/kernels.hpp"

namespace qwalk {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("matrix dimension must be non-negative");
  data_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), {0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = {1.0, 0.0};
  return m;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions do not match");
  const auto n = static_cast<std::size_t>(a.dim());
  ComplexMatrix c(a.dim());
  kernels::ops().cgemm(a.raw(), b.raw(), c.raw(), n, n, n);
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      r.at(i, j) = std::conj(m.at(j, i));
    }
  }
  return r;
}

ComplexMatrix scaled(const ComplexMatrix& m, std::complex<double> factor) {
  ComplexMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      r.at(i, j) = factor * m.at(i, j);
    }
  }
  return r;
}

std::vector<std::complex<double>> column(const ComplexMatrix& m, int col) {
  if (col < 0 || col >= m.dim()) throw std::invalid_argument("column index out of range");
  std::vector<std::complex<double>> out(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) out[static_cast<std::size_t>(i)] = m.at(i, col);
  return out;
}

}  // namespace qwalk
