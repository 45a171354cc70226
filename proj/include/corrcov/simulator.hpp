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

#ifndef CORRCOV_SIMULATOR_HPP
#define CORRCOV_SIMULATOR_HPP

#include "corrcov/correlation.hpp"
#include "corrcov/fading.hpp"
#include "corrcov/geometry.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace corrcov {

// SISO           — all 18 interferers.
// SIMO_LMMSE_1x2 — the closest interferer's contribution is removed before
//                  the SIR (ties broken by lowest site index).
// MUMIMO_2x2     — every interfering site carries 2 downlink streams at half
//                  power; the serving site causes no intra-cell interference;
//                  the receiver removes the 2 dominant eigen-components of
//                  the interference (the closest site's two streams when
//                  independent); the reported rate aggregates the cell's 2
//                  streams.
enum class ReceiverMode { SISO, SIMO_LMMSE_1x2, MUMIMO_2x2 };

// Replaces the per-site components derived from interferer_fading; used for
// composite laws that FadingSpec cannot express directly (e.g. eta-mu whose
// two gamma components are each moment-matched with shadowing).
struct ComponentOverride {
    std::vector<double> weights; // absolute, site-major order
    double shape = 1.0;
    int comps_per_site = 1;
};

struct ScenarioConfig {
    NetworkLayout layout; // user placed
    FadingSpec user_fading;
    FadingSpec interferer_fading;
    std::optional<ComponentOverride> components;
    std::optional<CorrelationModel> corr; // nullopt == independent interferers
    long trials = 100000;
    std::uint64_t seed = 1;
    ReceiverMode receiver = ReceiverMode::SISO;
    double t_lin = 1.0; // linear SIR threshold (dB converted at the CLI boundary)

    void validate() const;
};

struct ValueWithError {
    double value = std::numeric_limits<double>::quiet_NaN();
    double std_error = std::numeric_limits<double>::quiet_NaN();
};

struct ExperimentResult {
    ValueWithError coverage;
    ValueWithError rate_nats;
    long trials = 0;
    std::uint64_t seed = 0;
};

// Scenario reduced to draw form: interference = sum_i weights[i] * G(shape, 1),
// signal = signal_gain * (user gamma draw), both per trial.
struct InterferenceModel {
    std::vector<double> weights; // after cancellation / eigen-reweighting
    double shape = 1.0;          // per-component gamma shape
    double user_shape = 1.0;
    double user_scale = 1.0;     // EtaMu users use the two-component form instead
    bool user_eta_mu = false;
    GammaComponentPair user_components;
    double signal_gain = 1.0; // r^-alpha
    double rate_multiplier = 1.0;
};

InterferenceModel compile_scenario(const ScenarioConfig& cfg);

// One interference draw: the paper's construction sum_i w_i G_i with i.i.d.
// G_i ~ G(shape, 1), where w is lambda (independent) or the eigen-weights
// lambda_hat (correlated).
double draw_interference(const InterferenceModel& model, RandomStream& rng);
double draw_interference(const ScenarioConfig& cfg, RandomStream& rng);

// Empirical P(SIR > T) with binomial standard error.
ExperimentResult run_coverage(const ScenarioConfig& cfg);

// Sample mean of ln(1 + SIR) in nats with standard error.
ExperimentResult run_rate(const ScenarioConfig& cfg);

// Convex-order battery: for each convex phi, E[phi(I)] vs E[phi(I_hat)].
struct ConvexCase {
    std::string name;
    ValueWithError indep;
    ValueWithError corr;
    bool pass = false; // E[phi(I)] <= E[phi(I_hat)] + 3 pooled SE
};

struct OrderReport {
    std::vector<ConvexCase> cases;
    bool all_pass = false;
};

OrderReport verify_convex_order(const ScenarioConfig& cfg_indep, const ScenarioConfig& cfg_corr,
                                long trials);

} // namespace corrcov

#endif
