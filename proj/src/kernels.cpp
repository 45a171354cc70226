// SPDX-License-Identifier: Apache-2.0
//
// corrcov — coverage and rate analysis for cellular downlinks with correlated interferers
// Copyright (C) 2026 The corrcov authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "corrcov/kernels.hpp"

#include <stdexcept>

namespace corrcov::kernels {

#ifdef CORRCOV_HAVE_AVX2_TU
namespace detail {
double dot_avx2(const double* a, const double* b, std::size_t n);
double dot_rev_avx2(const double* a, const double* b, std::size_t n);
} // namespace detail
#endif

#ifdef CORRCOV_HAVE_NEON_TU
namespace detail {
double dot_neon(const double* a, const double* b, std::size_t n);
double dot_rev_neon(const double* a, const double* b, std::size_t n);
} // namespace detail
#endif

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * b[i];
    return acc;
}

double dot_rev_scalar(const double* a, const double* b, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * b[n - 1 - i];
    return acc;
}

Backend pick_backend()
{
#ifdef CORRCOV_HAVE_AVX2_TU
    if (__builtin_cpu_supports("avx2"))
        return Backend::avx2;
#endif
#ifdef CORRCOV_HAVE_NEON_TU
    return Backend::neon; // baseline on aarch64
#endif
    return Backend::scalar;
}

const Backend g_backend = pick_backend();

} // namespace

const char* backend_name(Backend b)
{
    switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
    }
    return "?";
}

Backend active_backend() { return g_backend; }

std::vector<Backend> available_backends()
{
    std::vector<Backend> out{Backend::scalar};
#ifdef CORRCOV_HAVE_AVX2_TU
    if (__builtin_cpu_supports("avx2"))
        out.push_back(Backend::avx2);
#endif
#ifdef CORRCOV_HAVE_NEON_TU
    out.push_back(Backend::neon);
#endif
    return out;
}

double dot_with(Backend backend, const double* a, const double* b, std::size_t n)
{
    switch (backend) {
    case Backend::scalar: return dot_scalar(a, b, n);
#ifdef CORRCOV_HAVE_AVX2_TU
    case Backend::avx2: return detail::dot_avx2(a, b, n);
#endif
#ifdef CORRCOV_HAVE_NEON_TU
    case Backend::neon: return detail::dot_neon(a, b, n);
#endif
    default: throw std::invalid_argument("kernel backend not compiled in");
    }
}

double dot_rev_with(Backend backend, const double* a, const double* b, std::size_t n)
{
    switch (backend) {
    case Backend::scalar: return dot_rev_scalar(a, b, n);
#ifdef CORRCOV_HAVE_AVX2_TU
    case Backend::avx2: return detail::dot_rev_avx2(a, b, n);
#endif
#ifdef CORRCOV_HAVE_NEON_TU
    case Backend::neon: return detail::dot_rev_neon(a, b, n);
#endif
    default: throw std::invalid_argument("kernel backend not compiled in");
    }
}

double dot(const double* a, const double* b, std::size_t n)
{
    return dot_with(g_backend, a, b, n);
}

double dot_rev(const double* a, const double* b, std::size_t n)
{
    return dot_rev_with(g_backend, a, b, n);
}

} // namespace corrcov::kernels
