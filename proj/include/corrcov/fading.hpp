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

#ifndef CORRCOV_FADING_HPP
#define CORRCOV_FADING_HPP

#include "corrcov/rng.hpp"

#include <utility>

namespace corrcov {

// dB-to-neper divisor used throughout the shadowing formulas.
inline constexpr double kDbToNeper = 8.686;

enum class FadingKind { Gamma, EtaMu, CompositeGamma };

// One channel's fading law for the received power.
//   Gamma          — Nakagami-m power, unit mean: G(m, 1/m)
//   EtaMu          — eta-mu power, unit mean (shape mu, power ratio eta)
//   CompositeGamma — gamma moment-match of Nakagami-m x log-normal shadowing:
//                    G(beta, gamma_scale), mean exp((sigma_db/8.686)^2 / 2)
struct FadingSpec {
    FadingKind kind = FadingKind::Gamma;
    double m = 1.0;
    double eta = 1.0;
    double mu = 1.0;
    double sigma_db = 0.0;
    double beta = 1.0;
    double gamma_scale = 1.0;

    static FadingSpec nakagami(double m);
    static FadingSpec eta_mu(double eta, double mu);
    static FadingSpec composite(double m, double sigma_db);

    void validate() const; // throws std::invalid_argument

    // shape of one gamma building block of this law (m, mu, or beta)
    double component_shape() const;
};

// The two gamma components whose independent sum is one eta-mu power
// variate. Unit-mean convention: shapes mu, scales 1/(mu(1+eta^-1)) and
// 1/(mu(1+eta)); the eta = 1, mu = m/2 case collapses to G(m, 1/m).
struct GammaComponentPair {
    double shape1 = 1.0, scale1 = 1.0;
    double shape2 = 1.0, scale2 = 1.0;
};

// Density of the eta-mu power law at x >= 0. Throws std::domain_error for
// x < 0. Even in eta <-> 1/eta.
double eta_mu_pdf(const FadingSpec& spec, double x);

GammaComponentPair decompose_eta_mu(const FadingSpec& spec);

// Gamma moment-match of the composite (Nakagami-m x log-normal) law:
// beta = m / ((m+1) e^w - m), gamma = ((1+m)/m) e^{3w/2} - e^{w/2},
// w = (sigma_db/8.686)^2.
std::pair<double, double> composite_params(double m, double sigma_db);

// Correlation coefficient of two composite powers from the short-term
// coefficient rho_s and the shadowing coefficient rho_sh.
double composite_correlation(double rho_s, double rho_sh, double m, double sigma_db);

// One gamma variate (delegates to the stream's Marsaglia-Tsang sampler).
double sample_gamma(double shape, double scale, RandomStream& rng);

// One power draw from the law (EtaMu draws the two-component sum).
double sample_fading_power(const FadingSpec& spec, RandomStream& rng);

} // namespace corrcov

#endif
