#pragma once

#include <cstddef>
#include <string>

namespace qwalk::kernels {

// Low-level numeric kernels over interleaved complex buffers (re, im pairs).
// Every entry point exists in a scalar reference version and, on x86-64, an
// AVX2 version. The element-wise kernels are bit-identical across backends;
// the reductions (bhattacharyya_sums) may differ by accumulation order and
// are equivalence-tested to tolerance instead.
struct Ops {
  // c = a * b for row-major complex matrices: a is m x k, b is k x n, c is m x n.
  void (*cgemm)(const double* a, const double* b, double* c,
                std::size_t m, std::size_t k, std::size_t n);

  // In-place 2x2 rotation of two length-n complex rows:
  //   (row_a, row_b) <- (g00 * row_a + g01 * row_b, g10 * row_a + g11 * row_b)
  // gate holds the 2x2 complex matrix as 8 doubles, row-major interleaved.
  void (*apply_coupler)(double* row_a, double* row_b, std::size_t n, const double* gate);

  // psi[k * n + l] = u[k] * v[l] + w * (s[k] * t[l]) over complex vectors of
  // length n; w points at a single complex scalar.
  void (*pair_outer)(const double* u, const double* v, const double* s, const double* t,
                     const double* w, double* psi, std::size_t n);

  // out[i] = |z_i|^2 for n complex entries.
  void (*magnitude_squared)(const double* z, double* out, std::size_t n);

  // sums[0] = sum sqrt(a_i * b_i), sums[1] = sum a_i, sums[2] = sum b_i.
  // Inputs are plain double arrays (probabilities), not complex.
  void (*bhattacharyya_sums)(const double* a, const double* b, std::size_t n, double sums[3]);

  // max_i |a_i - b_i| over plain double arrays; 0 for n == 0.
  double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
};

enum class Backend { scalar, avx2 };

/// Table currently in use by the library.
const Ops& ops();

Backend active_backend();
const char* backend_name(Backend b);

/// True when the running CPU (and this build) can execute the AVX2 kernels.
bool avx2_available();

/// Force a backend. Throws std::invalid_argument if it is unavailable.
void select_backend(Backend b);

/// Restore runtime auto-detection (AVX2 when available, scalar otherwise).
void select_auto();

/// Parse "auto" | "scalar" | "avx2" and apply it. Throws on anything else.
void select_backend_by_name(const std::string& name);

/// Reference tables, independent of the active selection.
const Ops& scalar_ops();
const Ops& avx2_ops();  // only valid to call through if avx2_available()

}  // namespace qwalk::kernels
