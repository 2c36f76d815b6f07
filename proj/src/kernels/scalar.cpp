#include "qwalk/kernels.hpp"

#include <cmath>
#include <cstring>

// Scalar reference kernels. The AVX2 versions replay these exact operation
// sequences lane-wise, so keep the arithmetic spelled out: no fused forms, no
// reassociation. The build disables FP contraction for the same reason.

namespace qwalk::kernels {
namespace {

void cgemm_scalar(const double* a, const double* b, double* c,
                  std::size_t m, std::size_t k, std::size_t n) {
  std::memset(c, 0, m * n * 2 * sizeof(double));
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * n * 2;
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[(i * k + p) * 2];
      const double ai = a[(i * k + p) * 2 + 1];
      const double* brow = b + p * n * 2;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j * 2];
        const double bi = brow[j * 2 + 1];
        crow[j * 2] += ar * br - ai * bi;
        crow[j * 2 + 1] += ar * bi + ai * br;
      }
    }
  }
}

void apply_coupler_scalar(double* row_a, double* row_b, std::size_t n, const double* g) {
  const double g00r = g[0], g00i = g[1], g01r = g[2], g01i = g[3];
  const double g10r = g[4], g10i = g[5], g11r = g[6], g11i = g[7];
  for (std::size_t j = 0; j < n; ++j) {
    const double ar = row_a[j * 2], ai = row_a[j * 2 + 1];
    const double br = row_b[j * 2], bi = row_b[j * 2 + 1];
    row_a[j * 2] = (g00r * ar - g00i * ai) + (g01r * br - g01i * bi);
    row_a[j * 2 + 1] = (g00r * ai + g00i * ar) + (g01r * bi + g01i * br);
    row_b[j * 2] = (g10r * ar - g10i * ai) + (g11r * br - g11i * bi);
    row_b[j * 2 + 1] = (g10r * ai + g10i * ar) + (g11r * bi + g11i * br);
  }
}

void pair_outer_scalar(const double* u, const double* v, const double* s, const double* t,
                       const double* w, double* psi, std::size_t n) {
  const double wr = w[0], wi = w[1];
  for (std::size_t k = 0; k < n; ++k) {
    const double ur = u[k * 2], ui = u[k * 2 + 1];
    const double sr = s[k * 2], si = s[k * 2 + 1];
    double* row = psi + k * n * 2;
    for (std::size_t l = 0; l < n; ++l) {
      const double vr = v[l * 2], vi = v[l * 2 + 1];
      const double tr = t[l * 2], ti = t[l * 2 + 1];
      const double pr = ur * vr - ui * vi;
      const double pi = ur * vi + ui * vr;
      const double qr = sr * tr - si * ti;
      const double qi = sr * ti + si * tr;
      const double xr = wr * qr - wi * qi;
      const double xi = wr * qi + wi * qr;
      row[l * 2] = pr + xr;
      row[l * 2 + 1] = pi + xi;
    }
  }
}

void magnitude_squared_scalar(const double* z, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = z[i * 2], im = z[i * 2 + 1];
    out[i] = re * re + im * im;
  }
}

void bhattacharyya_sums_scalar(const double* a, const double* b, std::size_t n, double sums[3]) {
  double sp = 0.0, sa = 0.0, sb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sp += std::sqrt(a[i] * b[i]);
    sa += a[i];
    sb += b[i];
  }
  sums[0] = sp;
  sums[1] = sa;
  sums[2] = sb;
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > m) m = d;
  }
  return m;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{
      cgemm_scalar,
      apply_coupler_scalar,
      pair_outer_scalar,
      magnitude_squared_scalar,
      bhattacharyya_sums_scalar,
      max_abs_diff_scalar,
  };
  return table;
}

}  // namespace qwalk::kernels
