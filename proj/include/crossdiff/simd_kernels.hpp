#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace crossdiff::simd {

// The convolution fields xi/zeta reduce to dense dot products of a kernel-table
// slice against the cell values. dual_dot fuses the two per-row products
// (self + cross kernel) into one pass; it is the hot loop of every time step.
//
// Kernels are selected once at startup from cpuid (override with set_backend or
// the CROSSDIFF_SIMD environment variable: "scalar", "avx2", "neon", "auto").
// Each backend has a fixed accumulation order, so results are deterministic
// per backend; scalar is the strict left-to-right reference the others are
// equivalence-tested against.

enum class Backend { scalar, avx2, neon };

double dot(const double* w, const double* v, std::size_t n);
double dual_dot(const double* w1, const double* v1, const double* w2, const double* v2,
                std::size_t n);

Backend active_backend();
bool set_backend(Backend b);  // false if unavailable on this host
std::vector<Backend> available_backends();
std::string backend_name(Backend b);

// Direct entry points for equivalence tests.
double dot_scalar(const double* w, const double* v, std::size_t n);
double dual_dot_scalar(const double* w1, const double* v1, const double* w2, const double* v2,
                       std::size_t n);
#ifdef CROSSDIFF_HAVE_AVX2_TU
double dot_avx2(const double* w, const double* v, std::size_t n);
double dual_dot_avx2(const double* w1, const double* v1, const double* w2, const double* v2,
                     std::size_t n);
#endif
#if defined(__aarch64__)
double dot_neon(const double* w, const double* v, std::size_t n);
double dual_dot_neon(const double* w1, const double* v1, const double* w2, const double* v2,
                     std::size_t n);
#endif

}  // namespace crossdiff::simd
