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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corrcov/kernels.hpp"
#include "corrcov/rng.hpp"

#include <vector>

using namespace corrcov;

namespace {

std::vector<double> random_vec(std::size_t n, RandomStream& rng)
{
    std::vector<double> v(n);
    for (auto& x : v)
        x = 2.0 * rng.uniform() - 1.0;
    return v;
}

} // namespace

TEST_CASE("scalar dot and dot_rev agree with a naive loop")
{
    RandomStream rng(1);
    const auto a = random_vec(37, rng);
    const auto b = random_vec(37, rng);
    double expect = 0.0, expect_rev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        expect += a[i] * b[i];
        expect_rev += a[i] * b[a.size() - 1 - i];
    }
    CHECK(kernels::dot_with(kernels::Backend::scalar, a.data(), b.data(), a.size()) ==
          doctest::Approx(expect).epsilon(1e-14));
    CHECK(kernels::dot_rev_with(kernels::Backend::scalar, a.data(), b.data(), a.size()) ==
          doctest::Approx(expect_rev).epsilon(1e-14));
}

TEST_CASE("all available backends match the scalar reference")
{
    RandomStream rng(2);
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 15u, 16u, 33u, 1000u, 1023u}) {
        const auto a = random_vec(n, rng);
        const auto b = random_vec(n, rng);
        const double ref = kernels::dot_with(kernels::Backend::scalar, a.data(), b.data(), n);
        const double ref_rev =
            kernels::dot_rev_with(kernels::Backend::scalar, a.data(), b.data(), n);
        for (auto backend : kernels::available_backends()) {
            INFO("backend ", kernels::backend_name(backend), " n ", n);
            CHECK(kernels::dot_with(backend, a.data(), b.data(), n) ==
                  doctest::Approx(ref).epsilon(1e-12));
            CHECK(kernels::dot_rev_with(backend, a.data(), b.data(), n) ==
                  doctest::Approx(ref_rev).epsilon(1e-12));
        }
    }
}

TEST_CASE("dispatched entry points use a compiled-in backend")
{
    const auto backends = kernels::available_backends();
    bool found = false;
    for (auto b : backends)
        found = found || b == kernels::active_backend();
    CHECK(found);

    // dispatched == direct call through the active backend
    RandomStream rng(3);
    const auto a = random_vec(129, rng);
    const auto b = random_vec(129, rng);
    CHECK(kernels::dot(a.data(), b.data(), a.size()) ==
          kernels::dot_with(kernels::active_backend(), a.data(), b.data(), a.size()));
    CHECK(kernels::dot_rev(a.data(), b.data(), a.size()) ==
          kernels::dot_rev_with(kernels::active_backend(), a.data(), b.data(), a.size()));
}
