#include "ladder_kernel.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#if defined(ZLAB_VECTOR_KERNEL) && defined(__x86_64__)
#include <immintrin.h>
extern "C" __attribute__((target("avx2,fma"))) __m256d _ZGVdN4v_cos(__m256d);
extern "C" __attribute__((target("avx512f"))) __m512d _ZGVeN8v_cos(__m512d);
#define ZLAB_X86_DISPATCH 1
#endif

namespace zlab::detail {

namespace {

#include "rs_coefficients.inc"

constexpr std::size_t kTableSize = std::size_t{1} << 14;
constexpr std::size_t kPad = 8;

// 2 pi = kC1 + kC2 to about 1e-32.
constexpr double kC1 = 6.283185307179586232;
constexpr double kC2 = 2.4492935982947064e-16;
constexpr double kInvTwoPi = 0.15915494309189535;

// ln n as an unevaluated sum hi + lo, and n^{-1/2}.
struct Tables {
    std::vector<double> ln_hi;
    std::vector<double> ln_lo;
    std::vector<double> inv_sqrt;
    double rs[5][kRsTaylorLength];
    int rs_length[5];  // coefficients beyond this are below 1e-20 on |z| <= 1/2

    Tables() : ln_hi(kTableSize + kPad), ln_lo(kTableSize + kPad), inv_sqrt(kTableSize + kPad) {
        for (std::size_t n = 1; n < kTableSize; ++n) {
            const double hi = static_cast<double>(std::log(static_cast<long double>(n)));
            const long double y = static_cast<long double>(n) * std::exp(-static_cast<long double>(hi)) - 1.0L;
            ln_hi[n] = hi;
            ln_lo[n] = static_cast<double>(std::log1p(y));
            inv_sqrt[n] = 1.0 / std::sqrt(static_cast<double>(n));
        }
        for (int k = 0; k < 5; ++k) {
            rs_length[k] = 1;
            double scale = 1.0;
            for (int i = 0; i < kRsTaylorLength; ++i) {
                rs[k][i] = static_cast<double>(kRsTaylor[k][i]);
                if (std::fabs(rs[k][i]) * scale > 1e-20) rs_length[k] = i + 1;
                scale *= 0.5;
            }
        }
    }
};

const Tables& tables() {
    static const Tables instance;
    return instance;
}

// t ln n reduced modulo 2 pi, returned as theta_red minus it.
inline double scalar_term(const Tables& tb, double t, double theta_red, std::size_t n) {
    const double p = t * tb.ln_hi[n];
    const double e = std::fma(t, tb.ln_hi[n], -p) + t * tb.ln_lo[n];
    const double k = std::nearbyint(p * kInvTwoPi);
    const double r = std::fma(-k, kC1, p);  // exact
    const double arg = (theta_red - r) - (e - k * kC2);
    return tb.inv_sqrt[n] * std::cos(arg);
}

using SumFn = double (*)(const Tables&, double, double, std::size_t);

double cosine_sum_scalar(const Tables& tb, double t, double theta_red, std::size_t last) {
    double total = 0.0;
    for (std::size_t n = 1; n <= last; ++n) total += scalar_term(tb, t, theta_red, n);
    return total;
}

#ifdef ZLAB_X86_DISPATCH
__attribute__((target("avx2,fma"))) double cosine_sum_avx2(const Tables& tb, double t, double theta_red,
                                                           std::size_t last) {
    const __m256d vt = _mm256_set1_pd(t);
    const __m256d vtheta = _mm256_set1_pd(theta_red);
    const __m256d vc1 = _mm256_set1_pd(-kC1);
    const __m256d vc2 = _mm256_set1_pd(kC2);
    const __m256d vinv = _mm256_set1_pd(kInvTwoPi);
    __m256d acc = _mm256_setzero_pd();
    std::size_t n = 1;
    for (; n + 3 <= last; n += 4) {
        const __m256d lh = _mm256_loadu_pd(&tb.ln_hi[n]);
        const __m256d ll = _mm256_loadu_pd(&tb.ln_lo[n]);
        const __m256d p = _mm256_mul_pd(vt, lh);
        const __m256d e = _mm256_add_pd(_mm256_fmsub_pd(vt, lh, p), _mm256_mul_pd(vt, ll));
        const __m256d k = _mm256_round_pd(_mm256_mul_pd(p, vinv), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        const __m256d r = _mm256_fmadd_pd(k, vc1, p);
        const __m256d arg = _mm256_sub_pd(_mm256_sub_pd(vtheta, r), _mm256_sub_pd(e, _mm256_mul_pd(k, vc2)));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(&tb.inv_sqrt[n]), _ZGVdN4v_cos(arg), acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; n <= last; ++n) total += scalar_term(tb, t, theta_red, n);
    return total;
}

__attribute__((target("avx512f"))) double cosine_sum_avx512(const Tables& tb, double t, double theta_red,
                                                           std::size_t last) {
    const __m512d vt = _mm512_set1_pd(t);
    const __m512d vtheta = _mm512_set1_pd(theta_red);
    const __m512d vc1 = _mm512_set1_pd(-kC1);
    const __m512d vc2 = _mm512_set1_pd(kC2);
    const __m512d vinv = _mm512_set1_pd(kInvTwoPi);
    __m512d acc = _mm512_setzero_pd();
    std::size_t n = 1;
    for (; n + 7 <= last; n += 8) {
        const __m512d lh = _mm512_loadu_pd(&tb.ln_hi[n]);
        const __m512d ll = _mm512_loadu_pd(&tb.ln_lo[n]);
        const __m512d p = _mm512_mul_pd(vt, lh);
        const __m512d e = _mm512_add_pd(_mm512_fmsub_pd(vt, lh, p), _mm512_mul_pd(vt, ll));
        const __m512d k = _mm512_roundscale_pd(_mm512_mul_pd(p, vinv), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        const __m512d r = _mm512_fmadd_pd(k, vc1, p);
        const __m512d arg = _mm512_sub_pd(_mm512_sub_pd(vtheta, r), _mm512_sub_pd(e, _mm512_mul_pd(k, vc2)));
        acc = _mm512_fmadd_pd(_mm512_loadu_pd(&tb.inv_sqrt[n]), _ZGVeN8v_cos(arg), acc);
    }
    alignas(64) double lanes[8];
    _mm512_store_pd(lanes, acc);
    double total = ((lanes[0] + lanes[1]) + (lanes[2] + lanes[3])) + ((lanes[4] + lanes[5]) + (lanes[6] + lanes[7]));
    for (; n <= last; ++n) total += scalar_term(tb, t, theta_red, n);
    return total;
}
#endif

SumFn select_kernel() {
#ifdef ZLAB_X86_DISPATCH
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx512f")) return cosine_sum_avx512;
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return cosine_sum_avx2;
#endif
    return cosine_sum_scalar;
}

}  // namespace

double cosine_sum(double t, double theta_red, int N) {
    static const SumFn kernel = select_kernel();
    return kernel(tables(), t, theta_red, static_cast<std::size_t>(N));
}

double rs_series(double p, double inv_alpha) {
    const Tables& tb = tables();
    const double z = p - 0.5;
    double series = 0.0;
    double scale = 1.0;
    for (int k = 0; k < 5; ++k) {
        double c = 0.0;
        for (int i = tb.rs_length[k] - 1; i >= 0; --i) c = c * z + tb.rs[k][i];
        series += c * scale;
        scale *= inv_alpha;
    }
    return series;
}

}  // namespace zlab::detail
