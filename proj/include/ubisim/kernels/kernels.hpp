#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "ubisim/core/params.hpp"

namespace ubisim {

/// Which implementation of the per-agent step kernels to run.
enum class KernelPath {
  Auto,    // AVX2 when the CPU has it, else scalar; UBISIM_KERNEL overrides
  Scalar,  // reference path, built directly on evaluate_action / settle_necessities
  Avx2,
};

/// Parameters pre-broadcast for the kernels.
struct KernelParams {
  double necessity_total = 0.0;
  double necessity_below = 0.0;  // largest double below necessity_total
  double d_portion = 0.0;
  double savings_weight = 0.0;
  double unmet_penalty = 0.0;
  double ubi_amount = 0.0;
  double keep = 1.0;  // 1 - decay_rate
  std::array<double, 3> wage{};
  std::array<double, 3> disutility{};

  static KernelParams from(const ModelParams& params);
};

struct KernelContext {
  const ModelParams& params;
  KernelParams k;
};

/// Per-agent decision outputs. `action` and `fallback` hold Action values.
struct DecideOutput {
  std::span<std::uint8_t> action;
  std::span<std::uint8_t> fallback;  // best of N and 0
  std::span<double> margin;          // U_E - max(U_N, U_0)
};

/// Evaluates all three actions for every agent and records the argmax.
/// Balances are read after UBI has been credited.
using DecideFn = void (*)(const KernelContext&, std::span<const double> alpha,
                          std::span<const double> d, std::span<const double> y,
                          DecideOutput out);

struct SettleIo {
  std::span<const std::uint8_t> action;
  std::span<double> d;
  std::span<double> y;
  std::span<double> d_spent;
  std::span<double> y_spent;
  std::span<double> d_decayed;
  std::span<std::uint8_t> unmet;
};

/// Credits the wage of the chosen action, settles necessities and decays the
/// carried D, updating balances in place.
using SettleFn = void (*)(const KernelContext&, SettleIo io);

struct StepKernels {
  std::string_view name;
  DecideFn decide = nullptr;
  SettleFn settle = nullptr;
};

/// True when the AVX2 kernels were compiled in and the CPU supports them.
bool avx2_available();

/// Resolves a path to a kernel set. Throws std::runtime_error when AVX2 is
/// requested explicitly but unavailable.
const StepKernels& select_kernels(KernelPath path);

namespace kernels {

void decide_scalar(const KernelContext& ctx, std::span<const double> alpha,
                   std::span<const double> d, std::span<const double> y,
                   DecideOutput out);
void settle_scalar(const KernelContext& ctx, SettleIo io);

#if defined(UBISIM_HAS_AVX2_KERNELS)
void decide_avx2(const KernelContext& ctx, std::span<const double> alpha,
                 std::span<const double> d, std::span<const double> y,
                 DecideOutput out);
void settle_avx2(const KernelContext& ctx, SettleIo io);
#endif

}  // namespace kernels
}  // namespace ubisim
