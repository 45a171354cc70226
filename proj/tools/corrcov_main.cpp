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

#include "corrcov/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

// Exit codes: 0 success, 2 config error, 3 theorem-check failure.
constexpr int kConfigError = 2;

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"corrcov — coverage and rate experiments for cellular downlinks "
                 "with correlated interferers"};
    app.require_subcommand(1);

    // ---- run ----
    auto* run = app.add_subcommand(
        "run", "run an experiment (figure2|figure3|figure4|figure5|theorem-check|custom)");
    std::string kind_arg;
    std::string config_path, distances_arg, out_path, corr_base;
    double m = 0, m_c = 0, mu = 0, eta = 0, alpha = 0, tdb = 0, rho = -1, rho_s = -1,
           rho_l = -1, sigma_db = -1, azimuth = 0, cell_radius = 0;
    long trials = 0;
    std::uint64_t seed = 0;

    run->add_option("kind", kind_arg, "experiment kind")->required();
    run->add_option("--config", config_path, "JSON config file (flags override it)");
    auto* om = run->add_option("--m", m, "user Nakagami shape");
    auto* omc = run->add_option("--mc", m_c, "interferer Nakagami shape");
    auto* omu = run->add_option("--mu", mu, "eta-mu shape parameter");
    auto* oeta = run->add_option("--eta", eta, "eta-mu power ratio");
    auto* oalpha = run->add_option("--alpha", alpha, "path-loss exponent");
    auto* otdb = run->add_option("--tdb", tdb, "SIR threshold in dB");
    auto* orho = run->add_option("--rho", rho, "small-scale correlation base");
    auto* orhos = run->add_option("--rho-s", rho_s, "short-term correlation coefficient");
    auto* orhol = run->add_option("--rho-l", rho_l, "shadowing correlation coefficient");
    auto* osig = run->add_option("--sigma-db", sigma_db, "shadow standard deviation in dB");
    auto* otrials = run->add_option("--trials", trials, "Monte Carlo trials per point");
    auto* oseed = run->add_option("--seed", seed, "master seed");
    auto* odist = run->add_option("--distances", distances_arg, "grid a:b:n of normalized distances");
    auto* oout = run->add_option("--out", out_path, "output base path (.csv/.json appended)");
    auto* oaz = run->add_option("--azimuth-deg", azimuth, "user azimuth in degrees (30 = cell vertex)");
    auto* ocb = run->add_option("--corr-base", corr_base, "rho_s | composite");
    auto* ocr = run->add_option("--cell-radius", cell_radius, "cell apothem in meters");

    // ---- validate ----
    auto* validate = app.add_subcommand("validate", "check a config file without running");
    std::string validate_path;
    validate->add_option("config", validate_path, "JSON config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    try {
        if (validate->parsed()) {
            const corrcov::ExperimentSpec spec = corrcov::spec_from_json_file(validate_path);
            const auto diagnostics = corrcov::validate_config(spec);
            for (const auto& d : diagnostics)
                std::cout << "diagnostic: " << d << '\n';
            if (diagnostics.empty())
                std::cout << "config ok\n";
            return diagnostics.empty() ? 0 : kConfigError;
        }

        corrcov::ExperimentSpec spec = config_path.empty()
                                           ? corrcov::default_spec(corrcov::parse_kind(kind_arg))
                                           : corrcov::spec_from_json_file(config_path);
        spec.kind = corrcov::parse_kind(kind_arg);
        if (om->count()) spec.m = m;
        if (omc->count()) spec.m_c = m_c;
        if (omu->count()) spec.mu_c = mu;
        if (oeta->count()) spec.eta = eta;
        if (oalpha->count()) spec.alpha = alpha;
        if (otdb->count()) spec.t_db = tdb;
        if (orho->count()) spec.rho = rho;
        if (orhos->count()) spec.rho_s = rho_s;
        if (orhol->count()) spec.rho_l = rho_l;
        if (osig->count()) spec.sigma_db = sigma_db;
        if (otrials->count()) spec.trials = trials;
        if (oseed->count()) spec.seed = seed;
        if (odist->count()) spec.distances = corrcov::parse_distance_grid(distances_arg);
        if (oout->count()) spec.out_path = out_path;
        if (oaz->count()) spec.azimuth_deg = azimuth;
        if (ocb->count()) spec.corr_base = corr_base;
        if (ocr->count()) spec.cell_radius = cell_radius;

        return corrcov::run_experiment(spec);
    } catch (const corrcov::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
