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

#ifndef CORRCOV_CORRELATION_HPP
#define CORRCOV_CORRELATION_HPP

#include "corrcov/rng.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace corrcov {

class NotPsdError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LengthMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Full             — entries sqrt(rho^|p-q|) everywhere off the diagonal.
// EtaMuInterleaved — 2N x 2N; rows 2i-1, 2i belong to interferer i's two
//                    gamma components. Entry (i, j) is zero whenever i + j is
//                    odd (1-based), i.e. in-phase and quadrature components
//                    never correlate; same-parity entries follow
//                    sqrt(rho^|p-q|) over the interferer indices p, q.
enum class CorrelationStructure { Full, EtaMuInterleaved };

struct CorrelationModel {
    int n = 0;
    double rho = 0.0;
    CorrelationStructure structure = CorrelationStructure::Full;
    std::vector<double> entries; // row-major n x n, symmetric, unit diagonal

    double entry(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }

    // model restricted to the given (sorted, unique) index subset
    CorrelationModel submodel(std::span<const int> keep) const;
};

// Builds the correlation matrix and verifies positive semidefiniteness
// (min eigenvalue >= -1e-10). Throws NotPsdError otherwise.
CorrelationModel build_correlation(int n, double rho, CorrelationStructure structure);

// Diagonal weights lambda_i and the eigenvalues lambda_hat_i of A = D C,
// both sorted ascending. Computed from the symmetric similar matrix
// C^(1/2) D C^(1/2) so the eigenvalues are real to machine precision.
// Construction enforces: trace preservation (1e-9 relative), the prefix
// product chain prod_{i<=k} lambda_i >= prod_{i<=k} lambda_hat_i, and
// majorizes(lambda_hats, lambdas).
struct EigenSpectrum {
    std::vector<double> lambdas;
    std::vector<double> lambda_hats;
};

EigenSpectrum weighted_spectrum(std::span<const double> weights, const CorrelationModel& corr);

// True iff a majorizes b: with both sorted ascending,
// sum_{i<=k} b_i >= sum_{i<=k} a_i for k < n and equal totals
// (1e-9 relative tolerance).
bool majorizes(std::span<const double> a, std::span<const double> b, double rel_tol = 1e-9);

// Randomized Schur-convexity check of f(v) = prod (1/(1 + k v_i))^a over
// majorization pairs x > y built by averaging T-transforms.
struct WitnessReport {
    int trials = 0;
    int violations = 0;
    double max_violation = 0.0;
};

WitnessReport is_schur_convex_witness(double k, double a, int n, int trials, RandomStream& rng);

} // namespace corrcov

#endif
