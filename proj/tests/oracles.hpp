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

// Test-only reference implementations, deliberately independent of the
// library's evaluation paths.

#ifndef CORRCOV_TESTS_ORACLES_HPP
#define CORRCOV_TESTS_ORACLES_HPP

#include "corrcov/rng.hpp"

#include <functional>
#include <span>
#include <vector>

namespace corrcov::oracles {

// Lauricella F_D by explicit multi-index enumeration: every index runs
// 0..cap, each term built from scratch.
double fd_bruteforce(double a, std::span<const double> b, double c,
                     std::span<const double> x, int cap);

// Gauss 2F1 by direct series summation.
double gauss_2f1(double a, double b, double c, double x, int max_terms = 100000,
                 double tol = 1e-16);

// Adaptive Simpson quadrature on [lo, hi].
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double tol = 1e-10, int max_depth = 40);

// Eigenvalues of a symmetric matrix (row-major n x n) by cyclic Jacobi
// rotations, sorted ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> mat, int n);

// Kolmogorov-Smirnov distance between samples and a numeric CDF obtained by
// cumulative Simpson integration of `pdf` on [0, x_max].
double ks_distance(std::vector<double> samples, const std::function<double(double)>& pdf,
                   double x_max, int grid_points = 20000);

// Stationary gamma AR(1) by beta thinning: exact G(shape, scale) marginals
// with corr(X_p, X_q) = rho^|p-q|.
std::vector<double> gar1_gamma(double shape, double scale, double rho, int n,
                               RandomStream& rng);

// Correlated log-normal shadowing exp(sigma * V): the Gaussian correlations
// solve (e^{sigma^2 g} - 1)/(e^{sigma^2} - 1) = rho_l^|p-q| pairwise; sampled
// through a Cholesky factor built once.
class CorrelatedLognormal {
public:
    CorrelatedLognormal(double sigma_db, double rho_l, int n);
    std::vector<double> sample(RandomStream& rng) const;

private:
    int n_;
    double sigma_;
    std::vector<double> chol_; // row-major lower triangle
};

} // namespace corrcov::oracles

#endif
