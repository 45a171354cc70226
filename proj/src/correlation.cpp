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

#include "corrcov/correlation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace corrcov {

namespace {

constexpr double kPsdTolerance = 1e-10;

Eigen::MatrixXd to_eigen(const CorrelationModel& corr)
{
    Eigen::MatrixXd c(corr.n, corr.n);
    for (int i = 0; i < corr.n; ++i)
        for (int j = 0; j < corr.n; ++j)
            c(i, j) = corr.entry(i, j);
    return c;
}

} // namespace

CorrelationModel CorrelationModel::submodel(std::span<const int> keep) const
{
    CorrelationModel sub;
    sub.n = static_cast<int>(keep.size());
    sub.rho = rho;
    sub.structure = structure;
    sub.entries.resize(static_cast<std::size_t>(sub.n) * sub.n);
    for (int i = 0; i < sub.n; ++i)
        for (int j = 0; j < sub.n; ++j)
            sub.entries[static_cast<std::size_t>(i) * sub.n + j] = entry(keep[i], keep[j]);
    return sub;
}

CorrelationModel build_correlation(int n, double rho, CorrelationStructure structure)
{
    if (n < 1)
        throw std::invalid_argument("build_correlation: n must be positive");
    if (rho < 0.0 || rho > 1.0)
        throw std::invalid_argument("build_correlation: rho must be in [0, 1]");
    if (structure == CorrelationStructure::EtaMuInterleaved && n % 2 != 0)
        throw std::invalid_argument("build_correlation: interleaved structure needs even n");

    CorrelationModel model;
    model.n = n;
    model.rho = rho;
    model.structure = structure;
    model.entries.assign(static_cast<std::size_t>(n) * n, 0.0);

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v;
            if (i == j) {
                v = 1.0;
            } else if (structure == CorrelationStructure::Full) {
                v = std::sqrt(std::pow(rho, std::abs(i - j)));
            } else if ((i + j) % 2 != 0) {
                v = 0.0; // cross terms between in-phase and quadrature lanes
            } else {
                // same-parity lanes of distinct interferers
                v = std::sqrt(std::pow(rho, std::abs(i / 2 - j / 2)));
            }
            model.entries[static_cast<std::size_t>(i) * n + j] = v;
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(model),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw SolverError("build_correlation: eigensolver failed");
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -kPsdTolerance)
        throw NotPsdError("build_correlation: matrix not PSD (min eigenvalue " +
                          std::to_string(min_eig) + ")");
    return model;
}

EigenSpectrum weighted_spectrum(std::span<const double> weights, const CorrelationModel& corr)
{
    const int n = corr.n;
    if (static_cast<int>(weights.size()) != n)
        throw LengthMismatchError("weighted_spectrum: weight count != matrix size");
    for (double w : weights)
        if (!(w > 0.0))
            throw std::invalid_argument("weighted_spectrum: weights must be positive");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> csolver(to_eigen(corr));
    if (csolver.info() != Eigen::Success)
        throw SolverError("weighted_spectrum: eigensolver failed on C");

    // C^(1/2) with tiny negative eigenvalues of C clipped to zero
    Eigen::VectorXd sqrt_vals = csolver.eigenvalues();
    for (int i = 0; i < n; ++i) {
        if (sqrt_vals(i) < -kPsdTolerance)
            throw NotPsdError("weighted_spectrum: correlation matrix not PSD");
        sqrt_vals(i) = std::sqrt(std::max(sqrt_vals(i), 0.0));
    }
    const Eigen::MatrixXd croot =
        csolver.eigenvectors() * sqrt_vals.asDiagonal() * csolver.eigenvectors().transpose();

    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i)
        d(i) = weights[static_cast<std::size_t>(i)];

    // A = D C is similar to the symmetric C^(1/2) D C^(1/2)
    const Eigen::MatrixXd sym = croot * d.asDiagonal() * croot;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> asolver(sym, Eigen::EigenvaluesOnly);
    if (asolver.info() != Eigen::Success)
        throw SolverError("weighted_spectrum: eigensolver failed on C^(1/2) D C^(1/2)");

    EigenSpectrum spectrum;
    spectrum.lambdas.assign(weights.begin(), weights.end());
    std::sort(spectrum.lambdas.begin(), spectrum.lambdas.end());
    spectrum.lambda_hats.resize(static_cast<std::size_t>(n));
    const double trace = std::accumulate(spectrum.lambdas.begin(), spectrum.lambdas.end(), 0.0);
    for (int i = 0; i < n; ++i) {
        double v = asolver.eigenvalues()(i);
        if (v < -kPsdTolerance * std::max(1.0, trace))
            throw SolverError("weighted_spectrum: negative eigenvalue beyond tolerance");
        spectrum.lambda_hats[static_cast<std::size_t>(i)] = std::max(v, 0.0);
    }
    std::sort(spectrum.lambda_hats.begin(), spectrum.lambda_hats.end());

    // trace preservation
    const double trace_hat =
        std::accumulate(spectrum.lambda_hats.begin(), spectrum.lambda_hats.end(), 0.0);
    if (std::abs(trace - trace_hat) > 1e-9 * std::max(1.0, std::abs(trace)))
        throw SolverError("weighted_spectrum: trace not preserved");

    // prefix product chain (products of the k smallest): prod lambda >= prod lambda_hat
    double prod = 1.0, prod_hat = 1.0;
    for (int k = 0; k < n; ++k) {
        prod *= spectrum.lambdas[static_cast<std::size_t>(k)];
        prod_hat *= spectrum.lambda_hats[static_cast<std::size_t>(k)];
        if (prod_hat > prod + 1e-9 * std::max(1.0, std::abs(prod)))
            throw SolverError("weighted_spectrum: eigenvalue product chain violated");
    }

    if (!majorizes(spectrum.lambda_hats, spectrum.lambdas))
        throw SolverError("weighted_spectrum: eigenvalues do not majorize weights");
    return spectrum;
}

bool majorizes(std::span<const double> a, std::span<const double> b, double rel_tol)
{
    if (a.size() != b.size())
        throw LengthMismatchError("majorizes: vectors differ in length");

    std::vector<double> as(a.begin(), a.end());
    std::vector<double> bs(b.begin(), b.end());
    std::sort(as.begin(), as.end());
    std::sort(bs.begin(), bs.end());

    double scale = 0.0;
    for (double v : as)
        scale += std::abs(v);
    const double slack = rel_tol * std::max(1.0, scale);

    double pa = 0.0, pb = 0.0;
    for (std::size_t k = 0; k + 1 < as.size(); ++k) {
        pa += as[k];
        pb += bs[k];
        if (pb < pa - slack)
            return false;
    }
    pa += as.empty() ? 0.0 : as.back();
    pb += bs.empty() ? 0.0 : bs.back();
    return std::abs(pa - pb) <= slack;
}

WitnessReport is_schur_convex_witness(double k, double a, int n, int trials, RandomStream& rng)
{
    if (n < 2)
        throw std::invalid_argument("is_schur_convex_witness: need n >= 2");

    auto f = [&](const std::vector<double>& v) {
        double logf = 0.0;
        for (double vi : v)
            logf -= a * std::log1p(k * vi);
        return std::exp(logf);
    };

    WitnessReport report;
    report.trials = trials;
    std::vector<double> x(static_cast<std::size_t>(n)), y;
    for (int t = 0; t < trials; ++t) {
        for (auto& xi : x)
            xi = 0.05 + 4.0 * rng.uniform();
        y = x;
        // each T-transform moves a coordinate pair toward its mean: x > y
        const int steps = 1 + static_cast<int>(rng.next_u64() % static_cast<unsigned>(2 * n));
        for (int s = 0; s < steps; ++s) {
            const int i = static_cast<int>(rng.next_u64() % static_cast<unsigned>(n));
            int j = static_cast<int>(rng.next_u64() % static_cast<unsigned>(n - 1));
            if (j >= i)
                ++j;
            const double lam = rng.uniform();
            const double yi = y[static_cast<std::size_t>(i)], yj = y[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = lam * yi + (1.0 - lam) * yj;
            y[static_cast<std::size_t>(j)] = (1.0 - lam) * yi + lam * yj;
        }
        const double fx = f(x), fy = f(y);
        const double violation = fy - fx; // Schur-convexity demands f(x) >= f(y)
        if (violation > 1e-12 * std::max(1.0, std::abs(fy))) {
            ++report.violations;
            report.max_violation = std::max(report.max_violation, violation);
        }
    }
    return report;
}

} // namespace corrcov
