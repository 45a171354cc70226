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

#include "corrcov/fading.hpp"

#include "corrcov/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace corrcov {

FadingSpec FadingSpec::nakagami(double m)
{
    FadingSpec s;
    s.kind = FadingKind::Gamma;
    s.m = m;
    s.validate();
    return s;
}

FadingSpec FadingSpec::eta_mu(double eta, double mu)
{
    FadingSpec s;
    s.kind = FadingKind::EtaMu;
    s.eta = eta;
    s.mu = mu;
    s.validate();
    return s;
}

FadingSpec FadingSpec::composite(double m, double sigma_db)
{
    FadingSpec s;
    s.kind = FadingKind::CompositeGamma;
    s.m = m;
    s.sigma_db = sigma_db;
    auto [beta, gamma_scale] = composite_params(m, sigma_db);
    s.beta = beta;
    s.gamma_scale = gamma_scale;
    s.validate();
    return s;
}

void FadingSpec::validate() const
{
    switch (kind) {
    case FadingKind::Gamma:
        if (!(m > 0.0))
            throw std::invalid_argument("FadingSpec: Nakagami shape m must be positive");
        break;
    case FadingKind::EtaMu:
        if (!(eta > 0.0) || !std::isfinite(eta))
            throw std::invalid_argument("FadingSpec: eta must be in (0, inf)");
        if (!(mu > 0.0))
            throw std::invalid_argument("FadingSpec: mu must be positive");
        break;
    case FadingKind::CompositeGamma: {
        if (!(m > 0.0) || sigma_db < 0.0)
            throw std::invalid_argument("FadingSpec: composite needs m > 0, sigma_db >= 0");
        auto [b, g] = composite_params(m, sigma_db);
        if (std::abs(beta - b) > 1e-9 * b || std::abs(gamma_scale - g) > 1e-9 * g)
            throw std::invalid_argument(
                "FadingSpec: beta/gamma_scale inconsistent with (m, sigma_db)");
        break;
    }
    }
}

double FadingSpec::component_shape() const
{
    switch (kind) {
    case FadingKind::Gamma: return m;
    case FadingKind::EtaMu: return mu;
    case FadingKind::CompositeGamma: return beta;
    }
    return m;
}

double eta_mu_pdf(const FadingSpec& spec, double x)
{
    if (spec.kind != FadingKind::EtaMu)
        throw std::invalid_argument("eta_mu_pdf: spec must be EtaMu");
    spec.validate();
    if (x < 0.0)
        throw std::domain_error("eta_mu_pdf: x must be nonnegative");
    if (x == 0.0) {
        if (spec.mu > 0.5)
            return 0.0;
        if (spec.mu < 0.5)
            return std::numeric_limits<double>::infinity();
        // mu = 1/2: finite limit handled below
    }

    const double mu = spec.mu;
    const double eta = spec.eta;
    const double h = (2.0 + 1.0 / eta + eta) / 4.0;
    const double H = std::abs(1.0 / eta - eta) / 4.0; // density is even in the sign of H
    const double nu = mu - 0.5;

    // f = C0 * x^(mu-1/2) * (mu x)^(mu-1/2) * exp(-2 mu h x) * I_nu(z)/(z/2)^nu,
    // z = 2 mu H x. Assembled in log space; the Bessel ratio form absorbs the
    // H^(mu-1/2) division and the eta = 1 (H = 0) limit.
    const double z = 2.0 * mu * H * x;
    double logf = std::log(2.0) + 0.5 * std::log(M_PI) + (mu + 0.5) * std::log(mu) +
                  mu * std::log(h) - std::lgamma(mu) - 2.0 * mu * h * x +
                  log_bessel_i_ratio(nu, z);
    if (nu != 0.0)
        logf += nu * (std::log(x) + std::log(mu * x));
    return std::exp(logf);
}

GammaComponentPair decompose_eta_mu(const FadingSpec& spec)
{
    if (spec.kind != FadingKind::EtaMu)
        throw std::invalid_argument("decompose_eta_mu: spec must be EtaMu");
    spec.validate();

    // Unit-mean convention: scale product check 2 mu (h +- H) = mu (1 + eta^-+1),
    // so the component MGFs multiply exactly to the eta-mu power MGF.
    GammaComponentPair pair;
    pair.shape1 = spec.mu;
    pair.shape2 = spec.mu;
    pair.scale1 = 1.0 / (spec.mu * (1.0 + 1.0 / spec.eta));
    pair.scale2 = 1.0 / (spec.mu * (1.0 + spec.eta));
    return pair;
}

std::pair<double, double> composite_params(double m, double sigma_db)
{
    if (!(m > 0.0) || sigma_db < 0.0)
        throw std::invalid_argument("composite_params: need m > 0, sigma_db >= 0");
    const double w = (sigma_db / kDbToNeper) * (sigma_db / kDbToNeper);
    const double beta = m / ((m + 1.0) * std::exp(w) - m);
    const double gamma_scale =
        (1.0 + m) / m * std::exp(1.5 * w) - std::exp(0.5 * w);
    return {beta, gamma_scale};
}

double composite_correlation(double rho_s, double rho_sh, double m, double sigma_db)
{
    if (rho_s < 0.0 || rho_s > 1.0 || rho_sh < 0.0 || rho_sh > 1.0)
        throw std::invalid_argument("composite_correlation: coefficients must be in [0, 1]");
    if (!(m > 0.0) || sigma_db < 0.0)
        throw std::invalid_argument("composite_correlation: need m > 0, sigma_db >= 0");
    if (sigma_db == 0.0)
        return rho_s; // no shadowing layer
    const double w = (sigma_db / kDbToNeper) * (sigma_db / kDbToNeper);
    const double inv_em1 = 1.0 / (std::exp(w) - 1.0);
    return (rho_s * inv_em1 + rho_sh * m + rho_s * rho_sh) / (m + inv_em1 + 1.0);
}

double sample_gamma(double shape, double scale, RandomStream& rng)
{
    return rng.gamma(shape, scale);
}

double sample_fading_power(const FadingSpec& spec, RandomStream& rng)
{
    switch (spec.kind) {
    case FadingKind::Gamma:
        return rng.gamma(spec.m, 1.0 / spec.m);
    case FadingKind::EtaMu: {
        const GammaComponentPair pair = decompose_eta_mu(spec);
        return rng.gamma(pair.shape1, pair.scale1) + rng.gamma(pair.shape2, pair.scale2);
    }
    case FadingKind::CompositeGamma:
        return rng.gamma(spec.beta, spec.gamma_scale);
    }
    throw std::logic_error("sample_fading_power: unknown kind");
}

} // namespace corrcov
