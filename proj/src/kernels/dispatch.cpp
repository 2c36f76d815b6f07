#include "qwalk/kernels.hpp"

#include <stdexcept>

namespace qwalk::kernels {
namespace {

Backend detect() {
  return avx2_available() ? Backend::avx2 : Backend::scalar;
}

Backend& current() {
  static Backend b = detect();
  return b;
}

}  // namespace

bool avx2_available() {
#if defined(QWALK_ENABLE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

#if !defined(QWALK_ENABLE_AVX2)
const Ops& avx2_ops() {
  throw std::logic_error("AVX2 kernels were not built into this binary");
}
#endif

const Ops& ops() {
  return current() == Backend::avx2 ? avx2_ops() : scalar_ops();
}

Backend active_backend() { return current(); }

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

void select_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_available()) {
    throw std::invalid_argument("AVX2 kernels are unavailable on this machine");
  }
  current() = b;
}

void select_auto() { current() = detect(); }

void select_backend_by_name(const std::string& name) {
  if (name == "auto") {
    select_auto();
  } else if (name == "scalar") {
    select_backend(Backend::scalar);
  } else if (name == "avx2") {
    select_backend(Backend::avx2);
  } else {
    throw std::invalid_argument("unknown kernel backend '" + name +
                                "' (expected auto, scalar, or avx2)");
  }
}

}  // namespace qwalk::kernels
