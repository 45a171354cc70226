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

#include "corrcov/fading.hpp"
#include "corrcov/rng.hpp"

#include <cmath>

using namespace corrcov;

TEST_CASE("fixed seed reproduces the exact sample sequence")
{
    RandomStream a(42, 7), b(42, 7);
    for (int i = 0; i < 1000; ++i)
        CHECK(a.next_u64() == b.next_u64());

    RandomStream g1(42, 7), g2(42, 7);
    for (int i = 0; i < 100; ++i)
        CHECK(g1.gamma(0.7, 2.0) == g2.gamma(0.7, 2.0));
}

TEST_CASE("distinct streams differ")
{
    RandomStream a(42, 0), b(42, 1);
    int same = 0;
    for (int i = 0; i < 64; ++i)
        same += a.next_u64() == b.next_u64();
    CHECK(same == 0);
}

TEST_CASE("gamma moments: exponential special case")
{
    RandomStream rng(11);
    const long n = 1000000;
    double sum = 0.0;
    for (long i = 0; i < n; ++i)
        sum += sample_gamma(1.0, 1.0, rng);
    const double mean = sum / n;
    // exponential: mean 1, sd 1 -> 3 standard errors = 0.003
    CHECK(std::abs(mean - 1.0) < 0.003);
}

TEST_CASE("gamma moments: shape below one")
{
    RandomStream rng(12);
    const long n = 1000000;
    double sum = 0.0, sum2 = 0.0;
    for (long i = 0; i < n; ++i) {
        const double g = sample_gamma(0.5, 2.0, rng);
        sum += g;
        sum2 += g * g;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    // G(0.5, 2): mean 1, var 2 -> 3 SE of the mean = 3 sqrt(2/n)
    CHECK(std::abs(mean - 1.0) < 3.0 * std::sqrt(2.0 / n));
    CHECK(var == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("normal and log-normal moments")
{
    RandomStream rng(13);
    const long n = 500000;
    double s = 0.0, s2 = 0.0, ln = 0.0;
    for (long i = 0; i < n; ++i) {
        const double z = rng.normal();
        s += z;
        s2 += z * z;
    }
    CHECK(std::abs(s / n) < 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.01));

    const double sigma = 10.0 / 8.686;
    for (long i = 0; i < n; ++i)
        ln += rng.lognormal_db(10.0);
    // E[exp(sigma Z)] = exp(sigma^2/2)
    CHECK(ln / n == doctest::Approx(std::exp(0.5 * sigma * sigma)).epsilon(0.02));
}
