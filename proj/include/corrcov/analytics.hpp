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

#ifndef CORRCOV_ANALYTICS_HPP
#define CORRCOV_ANALYTICS_HPP

#include "corrcov/special.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace corrcov {

class NumericalInstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Nakagami variants carry N weights (lambda or the eigen-weights lambda_hat);
// EtaMu variants carry the 2N interleaved component weights.
enum class CoverageVariant { NakagamiIndep, NakagamiCorr, EtaMuIndep, EtaMuCorr };

struct CoverageQuery {
    double m = 1.0;              // user Nakagami shape
    double T = 1.0;              // linear SIR threshold
    double r = 1.0;              // user distance
    double alpha = 2.5;          // path-loss exponent
    std::vector<double> weights; // lambda_i or lambda_hat_i
    double interferer_shape = 1.0; // m_c or mu_c
    CoverageVariant variant = CoverageVariant::NakagamiIndep;

    void validate() const;
};

// P(SIR > T) for a unit-mean Nakagami-m user against the weighted gamma
// interference sum:
//   Gamma(N b + m) / (Gamma(N b + 1) Gamma(m)) * prod x_i^b *
//   F_D^(N)[1-m; b..b; N b + 1; x],  x_i = 1 / (T r^alpha m lambda_i + 1).
// The gamma prefactor is evaluated in log space. Zero weights contribute no
// interference and are dropped exactly. Results outside [-1e-9, 1+1e-9]
// raise NumericalInstabilityError; inside, they are clamped to [0, 1].
double coverage_probability(const CoverageQuery& query, const TruncationPolicy& policy = {});

// Rayleigh-user (m = 1) closed form: prod (1/(T r^alpha lambda_i + 1))^shape.
double rayleigh_coverage(double t_lin, double r, double alpha,
                         std::span<const double> weights, double shape);

// Machine-checkable form of the grouped-series comparison: per monomial
// group, the shared coefficient K_{i,j} and the group value under the
// independent weights and under the eigen-weights.
struct GroupComparison {
    TermGroup group;
    double indep_value = 0.0;
    double corr_value = 0.0;
    int dominant = 0; // +1 correlated side larger, -1 independent, 0 equal
};

struct ComparisonReport {
    double m = 1.0;
    double interferer_shape = 1.0;
    std::vector<GroupComparison> groups;
};

ComparisonReport compare_appendix_series(const CoverageQuery& indep, const CoverageQuery& corr,
                                         int max_order);

} // namespace corrcov

#endif
