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

// Compiled with -mavx2 -mfma; callers gate on __builtin_cpu_supports("avx2").

#include <cstddef>
#include <immintrin.h>

namespace corrcov::kernels::detail {

namespace {

inline double hsum256(__m256d v)
{
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

} // namespace

double dot_avx2(const double* a, const double* b, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double acc = hsum256(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i)
        acc += a[i] * b[i];
    return acc;
}

double dot_rev_avx2(const double* a, const double* b, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d b0 = _mm256_permute4x64_pd(_mm256_loadu_pd(b + n - 4 - i), _MM_SHUFFLE(0, 1, 2, 3));
        __m256d b1 = _mm256_permute4x64_pd(_mm256_loadu_pd(b + n - 8 - i), _MM_SHUFFLE(0, 1, 2, 3));
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), b0, acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), b1, acc1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256d b0 = _mm256_permute4x64_pd(_mm256_loadu_pd(b + n - 4 - i), _MM_SHUFFLE(0, 1, 2, 3));
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), b0, acc0);
    }
    double acc = hsum256(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i)
        acc += a[i] * b[n - 1 - i];
    return acc;
}

} // namespace corrcov::kernels::detail
