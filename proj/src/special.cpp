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

#include "corrcov/special.hpp"

#include "corrcov/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace corrcov {

double pochhammer(double a, unsigned n)
{
    double p = 1.0;
    for (unsigned k = 0; k < n; ++k)
        p *= a + static_cast<double>(k);
    return p;
}

void LauricellaArgs::validate() const
{
    if (b.size() != x.size())
        throw std::invalid_argument("lauricella_fd: b and x must have equal length");
    if (!(c > 0.0))
        throw std::invalid_argument("lauricella_fd: c must be positive");
    for (double xi : x)
        if (std::abs(xi) >= 1.0)
            throw NonConvergentError("lauricella_fd: max|x_i| >= 1, series does not converge");
}

namespace {

// a within 1e-12 of a nonpositive integer terminates the series exactly.
bool terminating_order(double a, long& order)
{
    if (a > 0.5)
        return false;
    const double r = std::round(a);
    if (std::abs(a - r) > 1e-12 * std::max(1.0, std::abs(a)))
        return false;
    order = static_cast<long>(-r);
    return true;
}

} // namespace

double lauricella_fd(const LauricellaArgs& args, const TruncationPolicy& policy)
{
    args.validate();
    const std::size_t n = args.x.size();
    const double a = args.a;
    const double c = args.c;

    long exact_degrees = 0;
    const bool terminating = terminating_order(a, exact_degrees);
    const long degree_cap =
        terminating ? exact_degrees : static_cast<long>(policy.max_total_degree);

    if (n == 0 || degree_cap == 0)
        return 1.0; // only the all-zero multi-index survives

    // coeff[s] holds c_s scaled by 2^coeff_exp; psum[s] holds p_{s+1}.
    // (a)_s/(c)_s is kept as ratio_mant * 2^ratio_exp so deep series with
    // large c never underflow mid-computation.
    std::vector<double> coeff, psum, xpow(args.x);
    coeff.reserve(static_cast<std::size_t>(std::min<long>(degree_cap + 1, 4096)));
    psum.reserve(coeff.capacity());
    coeff.push_back(1.0);
    int coeff_exp = 0;

    double total = 1.0;
    double ratio_mant = 1.0;
    int ratio_exp = 0;
    int below = 0;

    for (long s = 0; s < degree_cap; ++s) {
        double p = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            p += args.b[k] * xpow[k];
            xpow[k] *= args.x[k];
        }
        psum.push_back(p);

        const double conv =
            kernels::dot_rev(psum.data(), coeff.data(), static_cast<std::size_t>(s) + 1);
        double cs = conv / static_cast<double>(s + 1);
        coeff.push_back(cs);

        if (std::abs(cs) > 0x1p+800) {
            for (double& v : coeff)
                v = std::ldexp(v, -512);
            coeff_exp += 512;
            cs = coeff.back();
        }

        ratio_mant *= (a + static_cast<double>(s)) / (c + static_cast<double>(s));
        if (ratio_mant != 0.0 && std::abs(ratio_mant) < 0x1p-512) {
            ratio_mant = std::ldexp(ratio_mant, 512);
            ratio_exp -= 512;
        }
        const double term = std::ldexp(ratio_mant * cs, ratio_exp + coeff_exp);
        total += term;

        if (!terminating) {
            if (std::abs(term) < policy.rel_tol * std::abs(total)) {
                if (++below >= policy.consecutive_below)
                    return total;
            } else {
                below = 0;
            }
        }
    }

    if (!terminating)
        throw BudgetExceededError(
            "lauricella_fd: tail above tolerance at total degree " +
            std::to_string(policy.max_total_degree));
    return total;
}

namespace {

// Partitions of s into parts <= s, reverse-lexicographic: (s), (s-1,1), ...
void enumerate_partitions(int s, int max_part, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out)
{
    if (s == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(s, max_part); part >= 1; --part) {
        cur.push_back(part);
        enumerate_partitions(s - part, part, cur, out);
        cur.pop_back();
    }
}

double factorial(int n)
{
    double f = 1.0;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

// Augmented monomial via power sums:
// mt(l1..lr) = p_{l1} mt(l2..lr) - sum_t mt(l2,..,lt+l1,..,lr)
double augmented_monomial(std::vector<int> parts, std::span<const double> powersums)
{
    if (parts.empty())
        return 1.0;
    const int head = parts.front();
    std::vector<int> rest(parts.begin() + 1, parts.end());
    double value = powersums[static_cast<std::size_t>(head)] * augmented_monomial(rest, powersums);
    for (std::size_t t = 0; t < rest.size(); ++t) {
        std::vector<int> merged(rest);
        merged[t] += head;
        value -= augmented_monomial(merged, powersums);
    }
    return value;
}

} // namespace

double monomial_symmetric(std::span<const int> exponents, std::span<const double> x)
{
    if (exponents.empty())
        return 1.0;
    int max_needed = 0;
    for (int e : exponents) {
        if (e <= 0)
            throw std::invalid_argument("monomial_symmetric: exponents must be positive");
        max_needed += e;
    }

    std::vector<double> powersums(static_cast<std::size_t>(max_needed) + 1, 0.0);
    for (double xi : x) {
        double p = 1.0;
        for (int k = 1; k <= max_needed; ++k) {
            p *= xi;
            powersums[static_cast<std::size_t>(k)] += p;
        }
    }

    std::vector<int> parts(exponents.begin(), exponents.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    double value = augmented_monomial(parts, powersums);

    // divide by the multiplicities of repeated exponents
    double mult = 1.0;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        mult *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return value / mult;
}

TermGroupExpansion expand_fd_terms(double a, double b, double c, int n_vars, int max_order)
{
    if (max_order < 0 || max_order > 6)
        throw std::invalid_argument("expand_fd_terms: max_order must be in [0, 6]");
    if (n_vars < 1)
        throw std::invalid_argument("expand_fd_terms: need at least one variable");

    TermGroupExpansion expansion;
    expansion.a = a;
    expansion.b = b;
    expansion.c = c;
    expansion.n_vars = n_vars;
    expansion.max_order = max_order;

    for (int s = 1; s <= max_order; ++s) {
        std::vector<std::vector<int>> partitions;
        std::vector<int> cur;
        enumerate_partitions(s, s, cur, partitions);

        int j = 0;
        for (const auto& parts : partitions) {
            ++j;
            TermGroup group;
            group.total_order = s;
            group.index_in_order = j;
            group.exponents = parts;

            double k = pochhammer(a, static_cast<unsigned>(s)) /
                       pochhammer(c, static_cast<unsigned>(s));
            for (int e : parts)
                k *= pochhammer(b, static_cast<unsigned>(e)) / factorial(e);
            group.coefficient = k;
            expansion.groups.push_back(std::move(group));
        }
    }
    return expansion;
}

double log_bessel_i_ratio(double nu, double z)
{
    if (!(nu > -1.0))
        throw std::invalid_argument("log_bessel_i_ratio: nu must exceed -1");
    z = std::abs(z);

    if (z <= 30.0) {
        // sum_k (z^2/4)^k / (k! Gamma(k+nu+1)); positive terms only
        const double q = 0.25 * z * z;
        double term = 1.0 / std::tgamma(nu + 1.0);
        double sum = term;
        for (int k = 1; k < 200; ++k) {
            term *= q / (static_cast<double>(k) * (nu + static_cast<double>(k)));
            sum += term;
            if (term < sum * 1e-17)
                break;
        }
        return std::log(sum);
    }

    // I_nu(z) ~ e^z / sqrt(2 pi z) * sum_k (-1)^k a_k(nu) / z^k,
    // a_k = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (k! 8^k)
    const double mu4 = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 14; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu4 - odd * odd) / (8.0 * static_cast<double>(k) * z);
        sum += term;
    }
    return z - 0.5 * std::log(2.0 * M_PI * z) + std::log(sum) - nu * std::log(0.5 * z);
}

} // namespace corrcov
