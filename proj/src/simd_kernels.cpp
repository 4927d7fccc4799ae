#include "crossdiff/simd_kernels.hpp"

#include <cstdlib>
#include <stdexcept>

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace crossdiff::simd {

double dot_scalar(const double* w, const double* v, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * v[i];
    return acc;
}

double dual_dot_scalar(const double* w1, const double* v1, const double* w2, const double* v2,
                       std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w1[i] * v1[i] + w2[i] * v2[i];
    return acc;
}

#if defined(__aarch64__)
double dot_neon(const double* w, const double* v, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(w + i), vld1q_f64(v + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(w + i + 2), vld1q_f64(v + i + 2));
    }
    double acc = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) acc += w[i] * v[i];
    return acc;
}

double dual_dot_neon(const double* w1, const double* v1, const double* w2, const double* v2,
                     std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(w1 + i), vld1q_f64(v1 + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(w2 + i), vld1q_f64(v2 + i));
    }
    double acc = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) acc += w1[i] * v1[i] + w2[i] * v2[i];
    return acc;
}
#endif

namespace {

bool avx2_supported() {
#if defined(CROSSDIFF_HAVE_AVX2_TU) && defined(__x86_64__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend pick_default() {
    if (const char* env = std::getenv("CROSSDIFF_SIMD")) {
        const std::string s(env);
        if (s == "scalar") return Backend::scalar;
        if (s == "avx2" && avx2_supported()) return Backend::avx2;
#if defined(__aarch64__)
        if (s == "neon") return Backend::neon;
#endif
        // "auto" or unusable request falls through to detection
    }
#if defined(__aarch64__)
    return Backend::neon;
#else
    return avx2_supported() ? Backend::avx2 : Backend::scalar;
#endif
}

struct Dispatch {
    Backend backend;
    double (*dot)(const double*, const double*, std::size_t);
    double (*dual)(const double*, const double*, const double*, const double*, std::size_t);
};

Dispatch make_dispatch(Backend b) {
    switch (b) {
#ifdef CROSSDIFF_HAVE_AVX2_TU
        case Backend::avx2: return {b, dot_avx2, dual_dot_avx2};
#endif
#if defined(__aarch64__)
        case Backend::neon: return {b, dot_neon, dual_dot_neon};
#endif
        default: return {Backend::scalar, dot_scalar, dual_dot_scalar};
    }
}

Dispatch& dispatch() {
    static Dispatch d = make_dispatch(pick_default());
    return d;
}

}  // namespace

double dot(const double* w, const double* v, std::size_t n) { return dispatch().dot(w, v, n); }

double dual_dot(const double* w1, const double* v1, const double* w2, const double* v2,
                std::size_t n) {
    return dispatch().dual(w1, v1, w2, v2, n);
}

Backend active_backend() { return dispatch().backend; }

bool set_backend(Backend b) {
    for (Backend avail : available_backends()) {
        if (avail == b) {
            dispatch() = make_dispatch(b);
            return true;
        }
    }
    return false;
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out{Backend::scalar};
    if (avx2_supported()) out.push_back(Backend::avx2);
#if defined(__aarch64__)
    out.push_back(Backend::neon);
#endif
    return out;
}

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "?";
}

}  // namespace crossdiff::simd
