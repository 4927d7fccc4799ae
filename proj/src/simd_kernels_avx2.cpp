// AVX2+FMA kernel bodies. This TU is compiled with -mavx2 -mfma; callers reach
// it only through the runtime-dispatched entry points in simd_kernels.cpp.
#include <immintrin.h>

#include "crossdiff/simd_kernels.hpp"

namespace crossdiff::simd {

namespace {

inline double hsum(__m256d v) {
    // Fixed reduction order: (0+2) + (1+3).
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double dot_avx2(const double* w, const double* v, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(v + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i + 4), _mm256_loadu_pd(v + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(v + i), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += w[i] * v[i];
    return acc;
}

double dual_dot_avx2(const double* w1, const double* v1, const double* w2, const double* v2,
                     std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w1 + i), _mm256_loadu_pd(v1 + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(w2 + i), _mm256_loadu_pd(v2 + i), acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += w1[i] * v1[i] + w2[i] * v2[i];
    return acc;
}

}  // namespace crossdiff::simd
