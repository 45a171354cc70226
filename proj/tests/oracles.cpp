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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corrcov::oracles {

namespace {

double poch(double a, int n)
{
    double p = 1.0;
    for (int k = 0; k < n; ++k)
        p *= a + k;
    return p;
}

double factorial(int n)
{
    double f = 1.0;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

void fd_recurse(double a, std::span<const double> b, double c, std::span<const double> x,
                int cap, std::size_t dim, std::vector<int>& idx, double& total)
{
    if (dim == x.size()) {
        int s = 0;
        for (int i : idx)
            s += i;
        double term = poch(a, s) / poch(c, s);
        for (std::size_t k = 0; k < x.size(); ++k)
            term *= poch(b[k], idx[k]) * std::pow(x[k], idx[k]) / factorial(idx[k]);
        total += term;
        return;
    }
    for (int i = 0; i <= cap; ++i) {
        idx[dim] = i;
        fd_recurse(a, b, c, x, cap, dim + 1, idx, total);
    }
}

} // namespace

double fd_bruteforce(double a, std::span<const double> b, double c,
                     std::span<const double> x, int cap)
{
    std::vector<int> idx(x.size(), 0);
    double total = 0.0;
    fd_recurse(a, b, c, x, cap, 0, idx, total);
    return total;
}

double gauss_2f1(double a, double b, double c, double x, int max_terms, double tol)
{
    double total = 0.0;
    for (int k = 0; k < max_terms; ++k) {
        const double term = poch(a, k) * poch(b, k) / poch(c, k) * std::pow(x, k) / factorial(k);
        total += term;
        if (k > 2 && std::abs(term) < tol * std::abs(total))
            break;
    }
    return total;
}

namespace {

double simpson(const std::function<double(double)>& f, double lo, double hi, double flo,
               double fmid, double fhi)
{
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

double simpson_recurse(const std::function<double(double)>& f, double lo, double hi, double flo,
                       double fmid, double fhi, double whole, double tol, int depth)
{
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
    const double flm = f(lmid), frm = f(rmid);
    const double left = simpson(f, lo, mid, flo, flm, fmid);
    const double right = simpson(f, mid, hi, fmid, frm, fhi);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_recurse(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
           simpson_recurse(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi, double tol,
                        int max_depth)
{
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo), fmid = f(mid), fhi = f(hi);
    const double whole = simpson(f, lo, hi, flo, fmid, fhi);
    return simpson_recurse(f, lo, hi, flo, fmid, fhi, whole, tol, max_depth);
}

std::vector<double> jacobi_eigenvalues(std::vector<double> mat, int n)
{
    auto at = [&](int i, int j) -> double& { return mat[static_cast<std::size_t>(i) * n + j]; };

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                off += at(i, j) * at(i, j);
        if (off < 1e-26)
            break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-300)
                    continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cch = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * cch;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = cch * akp - s * akq;
                    at(k, q) = s * akp + cch * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = cch * apk - s * aqk;
                    at(q, k) = s * apk + cch * aqk;
                }
            }
        }
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        eig[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& pdf,
                   double x_max, int grid_points)
{
    // cumulative Simpson on a uniform grid, then normalize
    std::vector<double> cdf(static_cast<std::size_t>(grid_points) + 1, 0.0);
    const double h = x_max / grid_points;
    double acc = 0.0;
    double prev = pdf(0.0);
    for (int i = 1; i <= grid_points; ++i) {
        const double xl = (i - 1) * h, xr = i * h;
        const double fm = pdf(0.5 * (xl + xr));
        const double fr = pdf(xr);
        acc += h / 6.0 * (prev + 4.0 * fm + fr);
        cdf[static_cast<std::size_t>(i)] = acc;
        prev = fr;
    }
    for (auto& v : cdf)
        v /= acc;

    auto cdf_at = [&](double x) {
        if (x <= 0.0)
            return 0.0;
        if (x >= x_max)
            return 1.0;
        const double pos = x / h;
        const int i = static_cast<int>(pos);
        const double frac = pos - i;
        return cdf[static_cast<std::size_t>(i)] * (1.0 - frac) +
               cdf[static_cast<std::size_t>(i) + 1] * frac;
    };

    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double dist = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double c = cdf_at(samples[i]);
        dist = std::max(dist, std::abs(c - static_cast<double>(i) / n));
        dist = std::max(dist, std::abs(static_cast<double>(i + 1) / n - c));
    }
    return dist;
}

namespace {

double beta_variate(double a, double b, RandomStream& rng)
{
    const double x = rng.gamma(a, 1.0);
    const double y = rng.gamma(b, 1.0);
    return x / (x + y);
}

} // namespace

std::vector<double> gar1_gamma(double shape, double scale, double rho, int n, RandomStream& rng)
{
    std::vector<double> out(static_cast<std::size_t>(n));
    out[0] = rng.gamma(shape, scale);
    for (int i = 1; i < n; ++i) {
        double thinned = 0.0;
        if (rho > 0.0)
            thinned = beta_variate(shape * rho, shape * (1.0 - rho), rng) *
                      out[static_cast<std::size_t>(i - 1)];
        const double innovation =
            (rho < 1.0) ? rng.gamma(shape * (1.0 - rho), scale) : 0.0;
        out[static_cast<std::size_t>(i)] = thinned + innovation;
    }
    return out;
}

CorrelatedLognormal::CorrelatedLognormal(double sigma_db, double rho_l, int n)
    : n_(n), sigma_(sigma_db / 8.686)
{
    const double s2 = sigma_ * sigma_;
    const double em1 = std::exp(s2) - 1.0;

    // Gaussian correlations matching the target log-normal correlations
    std::vector<double> cov(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double target = std::pow(rho_l, std::abs(i - j));
            cov[static_cast<std::size_t>(i) * n + j] =
                (i == j) ? 1.0 : std::log1p(target * em1) / s2;
        }

    // plain Cholesky; the solved matrix is PD for the parameter ranges used
    chol_.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double sum = cov[static_cast<std::size_t>(i) * n + j];
            for (int k = 0; k < j; ++k)
                sum -= chol_[static_cast<std::size_t>(i) * n + k] *
                       chol_[static_cast<std::size_t>(j) * n + k];
            if (i == j) {
                if (sum <= 0.0)
                    throw std::runtime_error("CorrelatedLognormal: matrix not PD");
                chol_[static_cast<std::size_t>(i) * n + j] = std::sqrt(sum);
            } else {
                chol_[static_cast<std::size_t>(i) * n + j] =
                    sum / chol_[static_cast<std::size_t>(j) * n + j];
            }
        }
    }
}

std::vector<double> CorrelatedLognormal::sample(RandomStream& rng) const
{
    std::vector<double> z(static_cast<std::size_t>(n_));
    for (auto& v : z)
        v = rng.normal();
    std::vector<double> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        double v = 0.0;
        for (int k = 0; k <= i; ++k)
            v += chol_[static_cast<std::size_t>(i) * n_ + k] * z[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(i)] = std::exp(sigma_ * v);
    }
    return out;
}

} // namespace corrcov::oracles
