#include "qwalk/kernels.hpp"

#ifndef __AVX2__
#error "avx2.cpp must be compiled with -mavx2"
#endif

#include <cmath>
#include <cstring>
#include <immintrin.h>

// AVX2 kernels. Each vector lane performs the same multiply/add sequence as
// the scalar reference, so the element-wise kernels match it bit for bit.
// Vectors hold two interleaved complex numbers: [re0, im0, re1, im1].

namespace qwalk::kernels {
namespace {

// (zr, zi) * vec for two complex lanes: even lane zr*re - zi*im, odd lane
// zr*im + zi*re, via addsub on the swapped product.
inline __m256d cmul_bcast(__m256d zr, __m256d zi, __m256d vec) {
  const __m256d t1 = _mm256_mul_pd(zr, vec);
  const __m256d swapped = _mm256_permute_pd(vec, 0x5);
  const __m256d t2 = _mm256_mul_pd(zi, swapped);
  return _mm256_addsub_pd(t1, t2);
}

void cgemm_avx2(const double* a, const double* b, double* c,
                std::size_t m, std::size_t k, std::size_t n) {
  std::memset(c, 0, m * n * 2 * sizeof(double));
  const std::size_t n2 = (n / 2) * 2;
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * n * 2;
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[(i * k + p) * 2];
      const double ai = a[(i * k + p) * 2 + 1];
      const __m256d var = _mm256_set1_pd(ar);
      const __m256d vai = _mm256_set1_pd(ai);
      const double* brow = b + p * n * 2;
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        const __m256d vb = _mm256_loadu_pd(brow + j * 2);
        const __m256d prod = cmul_bcast(var, vai, vb);
        const __m256d vc = _mm256_loadu_pd(crow + j * 2);
        _mm256_storeu_pd(crow + j * 2, _mm256_add_pd(vc, prod));
      }
      for (; j < n; ++j) {
        const double br = brow[j * 2];
        const double bi = brow[j * 2 + 1];
        crow[j * 2] += ar * br - ai * bi;
        crow[j * 2 + 1] += ar * bi + ai * br;
      }
    }
  }
}

void apply_coupler_avx2(double* row_a, double* row_b, std::size_t n, const double* g) {
  const __m256d g00r = _mm256_set1_pd(g[0]), g00i = _mm256_set1_pd(g[1]);
  const __m256d g01r = _mm256_set1_pd(g[2]), g01i = _mm256_set1_pd(g[3]);
  const __m256d g10r = _mm256_set1_pd(g[4]), g10i = _mm256_set1_pd(g[5]);
  const __m256d g11r = _mm256_set1_pd(g[6]), g11i = _mm256_set1_pd(g[7]);
  const std::size_t n2 = (n / 2) * 2;
  std::size_t j = 0;
  for (; j < n2; j += 2) {
    const __m256d va = _mm256_loadu_pd(row_a + j * 2);
    const __m256d vb = _mm256_loadu_pd(row_b + j * 2);
    const __m256d na = _mm256_add_pd(cmul_bcast(g00r, g00i, va), cmul_bcast(g01r, g01i, vb));
    const __m256d nb = _mm256_add_pd(cmul_bcast(g10r, g10i, va), cmul_bcast(g11r, g11i, vb));
    _mm256_storeu_pd(row_a + j * 2, na);
    _mm256_storeu_pd(row_b + j * 2, nb);
  }
  for (; j < n; ++j) {
    const double ar = row_a[j * 2], ai = row_a[j * 2 + 1];
    const double br = row_b[j * 2], bi = row_b[j * 2 + 1];
    row_a[j * 2] = (g[0] * ar - g[1] * ai) + (g[2] * br - g[3] * bi);
    row_a[j * 2 + 1] = (g[0] * ai + g[1] * ar) + (g[2] * bi + g[3] * br);
    row_b[j * 2] = (g[4] * ar - g[5] * ai) + (g[6] * br - g[7] * bi);
    row_b[j * 2 + 1] = (g[4] * ai + g[5] * ar) + (g[6] * bi + g[7] * br);
  }
}

void pair_outer_avx2(const double* u, const double* v, const double* s, const double* t,
                     const double* w, double* psi, std::size_t n) {
  const __m256d vwr = _mm256_set1_pd(w[0]);
  const __m256d vwi = _mm256_set1_pd(w[1]);
  const std::size_t n2 = (n / 2) * 2;
  for (std::size_t k = 0; k < n; ++k) {
    const double ur = u[k * 2], ui = u[k * 2 + 1];
    const double sr = s[k * 2], si = s[k * 2 + 1];
    const __m256d vur = _mm256_set1_pd(ur), vui = _mm256_set1_pd(ui);
    const __m256d vsr = _mm256_set1_pd(sr), vsi = _mm256_set1_pd(si);
    double* row = psi + k * n * 2;
    std::size_t l = 0;
    for (; l < n2; l += 2) {
      const __m256d vv = _mm256_loadu_pd(v + l * 2);
      const __m256d vt = _mm256_loadu_pd(t + l * 2);
      const __m256d p = cmul_bcast(vur, vui, vv);
      const __m256d q = cmul_bcast(vsr, vsi, vt);
      const __m256d x = cmul_bcast(vwr, vwi, q);
      _mm256_storeu_pd(row + l * 2, _mm256_add_pd(p, x));
    }
    for (; l < n; ++l) {
      const double vr = v[l * 2], vi = v[l * 2 + 1];
      const double tr = t[l * 2], ti = t[l * 2 + 1];
      const double pr = ur * vr - ui * vi;
      const double pi = ur * vi + ui * vr;
      const double qr = sr * tr - si * ti;
      const double qi = sr * ti + si * tr;
      const double xr = w[0] * qr - w[1] * qi;
      const double xi = w[0] * qi + w[1] * qr;
      row[l * 2] = pr + xr;
      row[l * 2 + 1] = pi + xi;
    }
  }
}

void magnitude_squared_avx2(const double* z, double* out, std::size_t n) {
  const std::size_t n4 = (n / 4) * 4;
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    const __m256d va = _mm256_loadu_pd(z + i * 2);
    const __m256d vb = _mm256_loadu_pd(z + i * 2 + 4);
    const __m256d sa = _mm256_mul_pd(va, va);
    const __m256d sb = _mm256_mul_pd(vb, vb);
    // hadd pairs within 128-bit halves: [|z0|^2, |z2|^2, |z1|^2, |z3|^2]
    const __m256d h = _mm256_hadd_pd(sa, sb);
    const __m256d r = _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) {
    const double re = z[i * 2], im = z[i * 2 + 1];
    out[i] = re * re + im * im;
  }
}

void bhattacharyya_sums_avx2(const double* a, const double* b, std::size_t n, double sums[3]) {
  __m256d vsp = _mm256_setzero_pd();
  __m256d vsa = _mm256_setzero_pd();
  __m256d vsb = _mm256_setzero_pd();
  const std::size_t n4 = (n / 4) * 4;
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    vsp = _mm256_add_pd(vsp, _mm256_sqrt_pd(_mm256_mul_pd(va, vb)));
    vsa = _mm256_add_pd(vsa, va);
    vsb = _mm256_add_pd(vsb, vb);
  }
  alignas(32) double lp[4], la[4], lb[4];
  _mm256_store_pd(lp, vsp);
  _mm256_store_pd(la, vsa);
  _mm256_store_pd(lb, vsb);
  double sp = (lp[0] + lp[1]) + (lp[2] + lp[3]);
  double sa = (la[0] + la[1]) + (la[2] + la[3]);
  double sb = (lb[0] + lb[1]) + (lb[2] + lb[3]);
  for (; i < n; ++i) {
    sp += std::sqrt(a[i] * b[i]);
    sa += a[i];
    sb += b[i];
  }
  sums[0] = sp;
  sums[1] = sa;
  sums[2] = sb;
}

double max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d vm = _mm256_setzero_pd();
  const std::size_t n4 = (n / 4) * 4;
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    vm = _mm256_max_pd(vm, _mm256_andnot_pd(sign, d));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vm);
  double m = lanes[0];
  if (lanes[1] > m) m = lanes[1];
  if (lanes[2] > m) m = lanes[2];
  if (lanes[3] > m) m = lanes[3];
  for (; i < n; ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > m) m = d;
  }
  return m;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops table{
      cgemm_avx2,
      apply_coupler_avx2,
      pair_outer_avx2,
      magnitude_squared_avx2,
      bhattacharyya_sums_avx2,
      max_abs_diff_avx2,
  };
  return table;
}

}  // namespace qwalk::kernels
