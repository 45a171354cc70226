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

#ifndef CORRCOV_SPECIAL_HPP
#define CORRCOV_SPECIAL_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace corrcov {

// Series arguments outside the convergence region max|x_i| < 1.
class NonConvergentError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Truncation budget exhausted before the tail dropped below tolerance.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Pochhammer symbol (a)_n as the n-term rising product. The product form
// keeps the exact zeros of (a)_n for nonpositive integer a, which the
// gamma-ratio form loses.
double pochhammer(double a, unsigned n);

// Stop once the absolute degree-s term falls below rel_tol times the partial
// sum for consecutive_below consecutive degrees; give up (throw) at
// max_total_degree. Terminating series (a a nonpositive integer) ignore the
// tolerance and sum exactly |a| + 1 degrees.
struct TruncationPolicy {
    double rel_tol = 1e-12;
    int consecutive_below = 2;
    int max_total_degree = 20000;
};

// Arguments of the Lauricella function of the fourth kind,
// F_D^(N)[a; b_1..b_N; c; x_1..x_N].
struct LauricellaArgs {
    double a = 0.0;
    std::vector<double> b;
    double c = 1.0;
    std::vector<double> x;

    void validate() const; // throws std::invalid_argument / NonConvergentError
};

// Series value of F_D, summed in total-degree order. The degree-s inner sum
// over multi-indices is accumulated through the coefficients c_s of
// prod_k (1 - x_k t)^(-b_k), via (s+1) c_{s+1} = sum_j p_{j+1} c_{s-j} with
// power sums p_n = sum_k b_k x_k^n; the partial sums are identical to
// explicit multi-index summation by total degree.
double lauricella_fd(const LauricellaArgs& args, const TruncationPolicy& policy = {});

// One grouped term of the equal-b series expansion: the coefficient K_{i,j}
// together with the exponent pattern of its monomial group (a partition of
// the total order, e.g. {2,1} for sum_{i != j} x_i^2 x_j).
struct TermGroup {
    int total_order = 0;       // i
    int index_in_order = 0;    // j, 1-based, patterns ordered (i) > (i-1,1) > ...
    std::vector<int> exponents;
    double coefficient = 0.0;  // K_{i,j}
};

struct TermGroupExpansion {
    double a = 0.0, b = 0.0, c = 1.0;
    int n_vars = 0;
    int max_order = 0;
    std::vector<TermGroup> groups;
};

// Grouped expansion of F_D^(N)[a; b..b; c; x] by monomial pattern, up to
// total order max_order (<= 6). K_{i,j} = (a)_i (b)_{e_1} ... (b)_{e_r} /
// ((c)_i e_1! ... e_r!) for exponent pattern (e_1 >= ... >= e_r).
TermGroupExpansion expand_fd_terms(double a, double b, double c, int n_vars, int max_order);

// Monomial symmetric polynomial: sum of all distinct monomials whose
// exponent multiset equals `exponents`, evaluated at x.
double monomial_symmetric(std::span<const int> exponents, std::span<const double> x);

// log of I_nu(z) / (z/2)^nu for nu > -1, z >= 0; even in z. Power series up
// to z = 30, scaled asymptotic expansion beyond.
double log_bessel_i_ratio(double nu, double z);

} // namespace corrcov

#endif
