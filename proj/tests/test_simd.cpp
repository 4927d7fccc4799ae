#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "crossdiff/simd_kernels.hpp"

using namespace crossdiff::simd;

namespace {

std::vector<double> random_vec(std::mt19937& rng, std::size_t n, double scale) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

long double dot_reference(const double* w, const double* v, std::size_t n) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<long double>(w[i]) * v[i];
    return acc;
}

}  // namespace

TEST_CASE("scalar kernel matches extended-precision reference") {
    std::mt19937 rng(11);
    for (std::size_t n : {1u, 2u, 3u, 7u, 64u, 255u, 801u}) {
        const auto w = random_vec(rng, n, 3.0);
        const auto v = random_vec(rng, n, 2.0);
        const long double ref = dot_reference(w.data(), v.data(), n);
        const double got = dot_scalar(w.data(), v.data(), n);
        CHECK(std::abs(static_cast<double>(ref) - got) <=
              1e-13 * (std::abs(static_cast<double>(ref)) + 1.0));
    }
}

TEST_CASE("all available backends agree with the scalar reference") {
    std::mt19937 rng(23);
    const Backend initial = active_backend();
    for (Backend backend : available_backends()) {
        REQUIRE(set_backend(backend));
        CHECK(active_backend() == backend);
        for (std::size_t n : {1u, 3u, 4u, 5u, 8u, 15u, 16u, 17u, 63u, 64u, 65u, 256u, 799u}) {
            const auto w1 = random_vec(rng, n, 4.0);
            const auto v1 = random_vec(rng, n, 1.5);
            const auto w2 = random_vec(rng, n, 2.5);
            const auto v2 = random_vec(rng, n, 3.5);
            const double ref_d = dot_scalar(w1.data(), v1.data(), n);
            const double ref_dd = dual_dot_scalar(w1.data(), v1.data(), w2.data(), v2.data(), n);
            const double got_d = dot(w1.data(), v1.data(), n);
            const double got_dd = dual_dot(w1.data(), v1.data(), w2.data(), v2.data(), n);
            const double scale_d = std::abs(ref_d) + n * 4.0;
            const double scale_dd = std::abs(ref_dd) + n * 8.0;
            CHECK(std::abs(got_d - ref_d) <= 1e-13 * scale_d);
            CHECK(std::abs(got_dd - ref_dd) <= 1e-13 * scale_dd);
        }
    }
    set_backend(initial);
}

TEST_CASE("kernels are deterministic per backend") {
    std::mt19937 rng(37);
    const Backend initial = active_backend();
    const auto w = random_vec(rng, 513, 2.0);
    const auto v = random_vec(rng, 513, 2.0);
    for (Backend backend : available_backends()) {
        REQUIRE(set_backend(backend));
        const double first = dot(w.data(), v.data(), w.size());
        for (int k = 0; k < 10; ++k) CHECK(dot(w.data(), v.data(), w.size()) == first);
    }
    set_backend(initial);
}

TEST_CASE("backend names and availability") {
    const auto available = available_backends();
    REQUIRE(!available.empty());
    CHECK(available.front() == Backend::scalar);
    for (Backend b : available) CHECK(!backend_name(b).empty());
#ifndef CROSSDIFF_HAVE_AVX2_TU
    CHECK(!set_backend(Backend::avx2));
#endif
}
