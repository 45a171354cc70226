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

#ifndef CORRCOV_KERNELS_HPP
#define CORRCOV_KERNELS_HPP

#include <cstddef>
#include <vector>

namespace corrcov::kernels {

// Arithmetic kernels behind the series accumulator and the Monte Carlo
// weighted sums. A scalar reference implementation always exists; AVX2/NEON
// variants are selected once at startup based on the running CPU. All
// variants must agree with the reference to accumulation rounding
// (equivalence-tested, see tests/test_kernels.cpp).

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);

// Backend chosen for this process.
Backend active_backend();

// Backends usable on this machine (always contains Backend::scalar).
std::vector<Backend> available_backends();

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// sum_i a[i] * b[n-1-i]  (one operand traversed backwards)
double dot_rev(const double* a, const double* b, std::size_t n);

// Direct entry points for a specific backend; used by the equivalence tests.
double dot_with(Backend backend, const double* a, const double* b, std::size_t n);
double dot_rev_with(Backend backend, const double* a, const double* b, std::size_t n);

} // namespace corrcov::kernels

#endif
