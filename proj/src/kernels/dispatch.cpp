#include <cstdlib>

#include "kernels_internal.h"

namespace fpde::kernels {

#if defined(FPDE_HAVE_AVX2_KERNEL)
LogAbsKernel avx2_kernel_if_supported();  // defined in the -mavx2 TU
#endif

LogAbsKernel avx2_log_abs_kernel() {
#if defined(FPDE_HAVE_AVX2_KERNEL)
  return avx2_kernel_if_supported();
#else
  return nullptr;
#endif
}

namespace {

struct Selection {
  LogAbsKernel fn;
  const char* name;
};

Selection select() {
  if (!std::getenv("FPDE_FORCE_SCALAR")) {
    if (LogAbsKernel k = avx2_log_abs_kernel()) return {k, "avx2"};
  }
  return {&log_abs_eval_scalar, "scalar"};
}

const Selection& cached() {
  static Selection s = select();
  return s;
}

}  // namespace

LogAbsKernel active_log_abs_kernel() { return cached().fn; }

const char* active_log_abs_kernel_name() { return cached().name; }

}  // namespace fpde::kernels
