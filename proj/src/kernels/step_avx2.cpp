// AVX2 step kernels, four agents per iteration. Every operation is an IEEE
// add/sub/mul/sqrt/min/max/compare in the same order as the scalar path, so
// results match it bit for bit. Tails go through the scalar kernels.
#include <immintrin.h>

#include "ubisim/kernels/kernels.hpp"

namespace ubisim::kernels {
namespace {

constexpr std::size_t kLanes = 4;

struct Broadcast {
  __m256d n, n_below, d_portion, beta, penalty, keep;
  __m256d wage[3], disutility[3];

  explicit Broadcast(const KernelParams& k)
      : n(_mm256_set1_pd(k.necessity_total)),
        n_below(_mm256_set1_pd(k.necessity_below)),
        d_portion(_mm256_set1_pd(k.d_portion)),
        beta(_mm256_set1_pd(k.savings_weight)),
        penalty(_mm256_set1_pd(k.unmet_penalty)),
        keep(_mm256_set1_pd(k.keep)) {
    for (int a = 0; a < 3; ++a) {
      wage[a] = _mm256_set1_pd(k.wage[a]);
      disutility[a] = _mm256_set1_pd(k.disutility[a]);
    }
  }
};

inline __m256d utility(const Broadcast& b, __m256d alpha, __m256d d_spent, __m256d y_due,
                       __m256d y, int action) {
  const __m256d y_in = _mm256_add_pd(y, b.wage[action]);
  const __m256d y_spent = _mm256_min_pd(y_in, y_due);
  const __m256d unmet = _mm256_cmp_pd(y_in, y_due, _CMP_LT_OQ);
  const __m256d residual = _mm256_sub_pd(y_in, y_spent);
  const __m256d partial = _mm256_min_pd(_mm256_add_pd(d_spent, y_spent), b.n_below);
  const __m256d satisfied = _mm256_blendv_pd(b.n, partial, unmet);

  __m256d u = _mm256_sqrt_pd(satisfied);
  u = _mm256_add_pd(u, _mm256_mul_pd(b.beta, _mm256_sqrt_pd(residual)));
  u = _mm256_sub_pd(u, _mm256_mul_pd(alpha, b.disutility[action]));
  u = _mm256_sub_pd(u, _mm256_and_pd(unmet, b.penalty));
  return u;
}

}  // namespace

void decide_avx2(const KernelContext& ctx, std::span<const double> alpha,
                 std::span<const double> d, std::span<const double> y, DecideOutput out) {
  const Broadcast b(ctx.k);
  const std::size_t n = alpha.size();
  const std::size_t body = n - n % kLanes;

  for (std::size_t i = 0; i < body; i += kLanes) {
    const __m256d va = _mm256_loadu_pd(alpha.data() + i);
    const __m256d vd = _mm256_loadu_pd(d.data() + i);
    const __m256d vy = _mm256_loadu_pd(y.data() + i);

    const __m256d d_spent = _mm256_min_pd(vd, b.d_portion);
    const __m256d y_due = _mm256_sub_pd(b.n, d_spent);

    const __m256d ue = utility(b, va, d_spent, y_due, vy, 0);
    const __m256d un = utility(b, va, d_spent, y_due, vy, 1);
    const __m256d u0 = utility(b, va, d_spent, y_due, vy, 2);

    const __m256d e_wins = _mm256_and_pd(_mm256_cmp_pd(ue, un, _CMP_GE_OQ),
                                         _mm256_cmp_pd(ue, u0, _CMP_GE_OQ));
    const __m256d n_wins = _mm256_cmp_pd(un, u0, _CMP_GE_OQ);
    _mm256_storeu_pd(out.margin.data() + i, _mm256_sub_pd(ue, _mm256_max_pd(u0, un)));

    const int e_bits = _mm256_movemask_pd(e_wins);
    const int n_bits = _mm256_movemask_pd(n_wins);
    for (std::size_t lane = 0; lane < kLanes; ++lane) {
      const std::uint8_t fallback = ((n_bits >> lane) & 1) ? 1 : 2;
      out.fallback[i + lane] = fallback;
      out.action[i + lane] = ((e_bits >> lane) & 1) ? 0 : fallback;
    }
  }

  if (body < n) {
    decide_scalar(ctx, alpha.subspan(body), d.subspan(body), y.subspan(body),
                  {out.action.subspan(body), out.fallback.subspan(body),
                   out.margin.subspan(body)});
  }
}

void settle_avx2(const KernelContext& ctx, SettleIo io) {
  const Broadcast b(ctx.k);
  const std::size_t n = io.d.size();
  const std::size_t body = n - n % kLanes;
  const auto& wage = ctx.k.wage;

  for (std::size_t i = 0; i < body; i += kLanes) {
    const __m256d vd = _mm256_loadu_pd(io.d.data() + i);
    const __m256d vy = _mm256_loadu_pd(io.y.data() + i);
    const __m256d vw = _mm256_set_pd(wage[io.action[i + 3]], wage[io.action[i + 2]],
                                     wage[io.action[i + 1]], wage[io.action[i]]);

    const __m256d y_in = _mm256_add_pd(vy, vw);
    const __m256d d_spent = _mm256_min_pd(vd, b.d_portion);
    const __m256d y_due = _mm256_sub_pd(b.n, d_spent);
    const __m256d y_spent = _mm256_min_pd(y_in, y_due);
    const __m256d unmet = _mm256_cmp_pd(y_in, y_due, _CMP_LT_OQ);
    const __m256d post_d = _mm256_sub_pd(vd, d_spent);
    const __m256d post_y = _mm256_sub_pd(y_in, y_spent);
    const __m256d carried = _mm256_mul_pd(post_d, b.keep);

    _mm256_storeu_pd(io.d_spent.data() + i, d_spent);
    _mm256_storeu_pd(io.y_spent.data() + i, y_spent);
    _mm256_storeu_pd(io.d_decayed.data() + i, _mm256_sub_pd(post_d, carried));
    _mm256_storeu_pd(io.d.data() + i, carried);
    _mm256_storeu_pd(io.y.data() + i, post_y);

    const int bits = _mm256_movemask_pd(unmet);
    for (std::size_t lane = 0; lane < kLanes; ++lane) io.unmet[i + lane] = (bits >> lane) & 1;
  }

  if (body < n) {
    settle_scalar(ctx, {io.action.subspan(body), io.d.subspan(body), io.y.subspan(body),
                        io.d_spent.subspan(body), io.y_spent.subspan(body),
                        io.d_decayed.subspan(body), io.unmet.subspan(body)});
  }
}

}  // namespace ubisim::kernels
