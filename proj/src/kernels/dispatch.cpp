#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "ubisim/kernels/kernels.hpp"

namespace ubisim {

KernelParams KernelParams::from(const ModelParams& p) {
  KernelParams k;
  k.necessity_total = p.necessity_total;
  k.necessity_below = std::nextafter(p.necessity_total, 0.0);
  k.d_portion = p.acceptance_ratio * p.necessity_total;
  k.savings_weight = p.savings_weight;
  k.unmet_penalty = p.unmet_penalty;
  k.ubi_amount = p.ubi_amount;
  k.keep = 1.0 - p.decay_rate;
  for (Action a : kAllActions) {
    k.wage[index_of(a)] = p.wage(a);
    k.disutility[index_of(a)] = p.disutility(a);
  }
  return k;
}

namespace {

constexpr StepKernels kScalar{"scalar", &kernels::decide_scalar, &kernels::settle_scalar};
#if defined(UBISIM_HAS_AVX2_KERNELS)
constexpr StepKernels kAvx2{"avx2", &kernels::decide_avx2, &kernels::settle_avx2};
#endif

KernelPath path_from_env() {
  const char* env = std::getenv("UBISIM_KERNEL");
  if (env == nullptr) return KernelPath::Auto;
  const std::string_view v(env);
  if (v == "scalar") return KernelPath::Scalar;
  if (v == "avx2") return KernelPath::Avx2;
  return KernelPath::Auto;
}

}  // namespace

bool avx2_available() {
#if defined(UBISIM_HAS_AVX2_KERNELS)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

const StepKernels& select_kernels(KernelPath path) {
  if (path == KernelPath::Auto) path = path_from_env();
  switch (path) {
    case KernelPath::Scalar:
      return kScalar;
    case KernelPath::Avx2:
#if defined(UBISIM_HAS_AVX2_KERNELS)
      if (avx2_available()) return kAvx2;
#endif
      throw std::runtime_error("AVX2 kernels requested but not available on this build/CPU");
    case KernelPath::Auto:
      break;
  }
#if defined(UBISIM_HAS_AVX2_KERNELS)
  if (avx2_available()) return kAvx2;
#endif
  return kScalar;
}

}  // namespace ubisim
