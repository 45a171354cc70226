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

#ifndef CORRCOV_RNG_HPP
#define CORRCOV_RNG_HPP

#include <array>
#include <cstdint>

namespace corrcov {

// Deterministic random stream (xoshiro256++, SplitMix64-seeded).
//
// Streams are addressed by (seed, stream): Monte Carlo workers each own the
// stream whose index is their trial block, so results are reproducible and
// independent of the number of threads. The same (seed, stream) always yields
// the same sequence on every platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    // uniform on (0,1)
    double uniform();

    // standard normal (Marsaglia polar method)
    double normal();

    // gamma variate, shape > 0, scale > 0 (Marsaglia–Tsang; shape < 1 via
    // the boost G(a) = G(a+1) * U^(1/a))
    double gamma(double shape, double scale);

    // exp(sigma * Z) with sigma = sigma_db / 8.686 (zero-median log-normal
    // shadowing in dB units)
    double lognormal_db(double sigma_db);

private:
    std::array<std::uint64_t, 4> state_;
    double spare_normal_ = 0.0;
    bool have_spare_ = false;
};

} // namespace corrcov

#endif
