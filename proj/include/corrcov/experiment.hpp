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

#ifndef CORRCOV_EXPERIMENT_HPP
#define CORRCOV_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace corrcov {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind { Figure2, Figure3, Figure4, Figure5, TheoremCheck, Custom };

ExperimentKind parse_kind(const std::string& name);
std::string kind_name(ExperimentKind kind);

// Resolved experiment parameters. Optional fields fall back to the kind's
// defaults (the paper-figure setups) when unset.
struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::Figure2;

    std::optional<double> m;        // user Nakagami shape
    std::optional<double> m_c;      // interferer Nakagami shape
    std::optional<double> mu_c;     // eta-mu shape
    std::optional<double> eta;      // eta-mu power ratio
    std::optional<double> alpha;    // path-loss exponent
    std::optional<double> t_db;     // SIR threshold in dB
    std::optional<double> rho;      // small-scale-only correlation base
    std::optional<double> rho_s;    // short-term coefficient (shadowed scenarios)
    std::optional<double> rho_l;    // shadowing coefficient
    std::optional<double> sigma_db; // shadow standard deviation
    std::optional<long> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::vector<double>> distances; // normalized (0,1]
    std::optional<double> cell_radius;
    std::optional<double> azimuth_deg;

    // "rho_s": AR base is the short-term coefficient; "composite": AR base is
    // composite_correlation(rho_s, rho_l, m, sigma_db)
    std::optional<std::string> corr_base;

    std::string out_path; // base path; ".csv"/".json" appended (default: kind name)
};

// Kind defaults matching the figure captions (figure2: m_c=1, alpha=2.5,
// T=3 dB, rho=0.8; figure3: m=1, sigma=10 dB, mu_c=1, eta=2; figure4/5:
// m=m_i=1, sigma=10 dB).
ExperimentSpec default_spec(ExperimentKind kind);

// Parses "a:b:n" into n evenly spaced points from a to b.
std::vector<double> parse_distance_grid(const std::string& text);

ExperimentSpec spec_from_json_file(const std::string& path);

// Invariant violations (correlations out of range, too few trials, geometry
// that pushes the series arguments onto the convergence boundary, ...).
// Empty means the spec is runnable.
std::vector<std::string> validate_config(const ExperimentSpec& spec);

// Executes the experiment, writing <out>.csv (plot-ready, one row per
// distance point per variant, the resolved config embedded as a '#' header
// line) and <out>.json (full metadata). Returns 0 on success, 3 if a
// theorem-check failed. Throws ConfigError for unrunnable specs.
int run_experiment(const ExperimentSpec& spec);

} // namespace corrcov

#endif
