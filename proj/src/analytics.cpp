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

#include "corrcov/analytics.hpp"

#include <algorithm>
#include <cmath>

namespace corrcov {

void CoverageQuery::validate() const
{
    if (!(m > 0.0))
        throw std::invalid_argument("CoverageQuery: user shape m must be positive");
    if (!(T > 0.0))
        throw std::invalid_argument("CoverageQuery: threshold T must be positive");
    if (!(r > 0.0))
        throw std::invalid_argument("CoverageQuery: distance r must be positive");
    if (!(interferer_shape > 0.0))
        throw std::invalid_argument("CoverageQuery: interferer shape must be positive");
    if (weights.empty())
        throw std::invalid_argument("CoverageQuery: need at least one weight");
    for (double w : weights)
        if (w < 0.0)
            throw std::invalid_argument("CoverageQuery: weights must be nonnegative");
    const bool eta_mu =
        variant == CoverageVariant::EtaMuIndep || variant == CoverageVariant::EtaMuCorr;
    if (eta_mu && weights.size() % 2 != 0)
        throw std::invalid_argument("CoverageQuery: eta-mu variants carry 2N weights");
}

double coverage_probability(const CoverageQuery& query, const TruncationPolicy& policy)
{
    query.validate();

    const double k = query.T * std::pow(query.r, query.alpha) * query.m;
    const double b = query.interferer_shape;

    std::vector<double> x;
    x.reserve(query.weights.size());
    for (double w : query.weights) {
        if (w == 0.0)
            continue; // no interference from this component; drop exactly
        x.push_back(1.0 / (k * w + 1.0));
    }
    if (x.empty())
        return 1.0; // no interference at all: SIR is infinite

    const double n_eff = static_cast<double>(x.size());
    double log_k = std::lgamma(n_eff * b + query.m) - std::lgamma(n_eff * b + 1.0) -
                   std::lgamma(query.m);
    for (double xi : x)
        log_k += b * std::log(xi);

    LauricellaArgs args;
    args.a = 1.0 - query.m;
    args.b.assign(x.size(), b);
    args.c = n_eff * b + 1.0;
    args.x = x;
    const double fd = lauricella_fd(args, policy);

    const double value = std::exp(log_k) * fd;
    if (value < -1e-9 || value > 1.0 + 1e-9)
        throw NumericalInstabilityError("coverage_probability: value " +
                                        std::to_string(value) + " outside [0, 1]");
    return std::clamp(value, 0.0, 1.0);
}

double rayleigh_coverage(double t_lin, double r, double alpha,
                         std::span<const double> weights, double shape)
{
    if (!(t_lin >= 0.0))
        throw std::invalid_argument("rayleigh_coverage: threshold must be nonnegative");
    const double k = t_lin * std::pow(r, alpha);
    double log_c = 0.0;
    for (double w : weights) {
        if (w < 0.0)
            throw std::invalid_argument("rayleigh_coverage: weights must be nonnegative");
        log_c -= shape * std::log1p(k * w);
    }
    return std::exp(log_c);
}

ComparisonReport compare_appendix_series(const CoverageQuery& indep, const CoverageQuery& corr,
                                         int max_order)
{
    indep.validate();
    corr.validate();
    if (indep.weights.size() != corr.weights.size())
        throw std::invalid_argument("compare_appendix_series: weight counts differ");
    if (indep.m != corr.m || indep.interferer_shape != corr.interferer_shape ||
        indep.T != corr.T || indep.r != corr.r || indep.alpha != corr.alpha)
        throw std::invalid_argument("compare_appendix_series: queries differ beyond weights");

    const double k = indep.T * std::pow(indep.r, indep.alpha) * indep.m;
    const auto to_x = [k](const std::vector<double>& w) {
        std::vector<double> x(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            x[i] = 1.0 / (k * w[i] + 1.0);
        return x;
    };
    const std::vector<double> x_indep = to_x(indep.weights);
    const std::vector<double> x_corr = to_x(corr.weights);

    const int n = static_cast<int>(x_indep.size());
    const double b = indep.interferer_shape;
    const TermGroupExpansion expansion =
        expand_fd_terms(1.0 - indep.m, b, n * b + 1.0, n, max_order);

    ComparisonReport report;
    report.m = indep.m;
    report.interferer_shape = b;
    report.groups.reserve(expansion.groups.size());
    for (const auto& group : expansion.groups) {
        GroupComparison cmp;
        cmp.group = group;
        cmp.indep_value = monomial_symmetric(group.exponents, x_indep);
        cmp.corr_value = monomial_symmetric(group.exponents, x_corr);
        const double tol = 1e-12 * std::max({1.0, std::abs(cmp.indep_value),
                                             std::abs(cmp.corr_value)});
        if (cmp.corr_value > cmp.indep_value + tol)
            cmp.dominant = 1;
        else if (cmp.indep_value > cmp.corr_value + tol)
            cmp.dominant = -1;
        report.groups.push_back(std::move(cmp));
    }
    return report;
}

} // namespace corrcov
