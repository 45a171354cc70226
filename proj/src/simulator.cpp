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

#include "corrcov/simulator.hpp"

#include "corrcov/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

namespace corrcov {

void ScenarioConfig::validate() const
{
    if (!layout.user_set)
        throw std::invalid_argument("ScenarioConfig: user not placed");
    if (trials < 1000)
        throw std::invalid_argument("ScenarioConfig: need at least 10^3 trials");
    if (!(t_lin > 0.0))
        throw std::invalid_argument("ScenarioConfig: linear threshold must be positive");
    user_fading.validate();
    interferer_fading.validate();
}

namespace {

constexpr long kBlockTrials = 16384;

// Absolute per-component interference weights (gamma scale folded in), in
// site order; components_per_site matches the fading law.
std::vector<double> absolute_weights(const NetworkLayout& layout, const FadingSpec& f,
                                     int& comps_per_site)
{
    std::vector<double> w;
    w.reserve(36);
    for (double d : layout.interferer_distance) {
        const double pl = std::pow(d, -layout.alpha);
        switch (f.kind) {
        case FadingKind::Gamma:
            w.push_back(pl / f.m);
            break;
        case FadingKind::CompositeGamma:
            w.push_back(pl * f.gamma_scale);
            break;
        case FadingKind::EtaMu:
            w.push_back(pl / (f.mu * (1.0 + 1.0 / f.eta)));
            w.push_back(pl / (f.mu * (1.0 + f.eta)));
            break;
        }
    }
    comps_per_site = (f.kind == FadingKind::EtaMu) ? 2 : 1;
    return w;
}

int closest_site(const NetworkLayout& layout)
{
    int best = 0;
    for (int i = 1; i < 18; ++i)
        if (layout.interferer_distance[static_cast<std::size_t>(i)] <
            layout.interferer_distance[static_cast<std::size_t>(best)])
            best = i;
    return best; // ties keep the lowest index
}

std::vector<int> all_but_site(int site, int comps_per_site)
{
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(18 - 1) * comps_per_site);
    for (int s = 0; s < 18; ++s) {
        if (s == site)
            continue;
        for (int c = 0; c < comps_per_site; ++c)
            keep.push_back(s * comps_per_site + c);
    }
    return keep;
}

void drop_largest(std::vector<double>& w, int count)
{
    std::sort(w.begin(), w.end());
    w.resize(w.size() - static_cast<std::size_t>(std::min<int>(count, static_cast<int>(w.size()))));
}

} // namespace

InterferenceModel compile_scenario(const ScenarioConfig& cfg)
{
    cfg.validate();

    InterferenceModel model;
    model.signal_gain = std::pow(cfg.layout.user_distance, -cfg.layout.alpha);
    model.shape = cfg.interferer_fading.component_shape();

    switch (cfg.user_fading.kind) {
    case FadingKind::Gamma:
        model.user_shape = cfg.user_fading.m;
        model.user_scale = 1.0 / cfg.user_fading.m;
        break;
    case FadingKind::CompositeGamma:
        model.user_shape = cfg.user_fading.beta;
        model.user_scale = cfg.user_fading.gamma_scale;
        break;
    case FadingKind::EtaMu:
        model.user_eta_mu = true;
        model.user_components = decompose_eta_mu(cfg.user_fading);
        break;
    }

    int comps_per_site = 1;
    std::vector<double> base;
    if (cfg.components) {
        base = cfg.components->weights;
        comps_per_site = cfg.components->comps_per_site;
        model.shape = cfg.components->shape;
        if (static_cast<int>(base.size()) != 18 * comps_per_site)
            throw std::invalid_argument("compile_scenario: override weight count != 18 sites");
    } else {
        base = absolute_weights(cfg.layout, cfg.interferer_fading, comps_per_site);
    }
    if (cfg.corr && cfg.corr->n != static_cast<int>(base.size()))
        throw LengthMismatchError("compile_scenario: correlation size != component count");

    switch (cfg.receiver) {
    case ReceiverMode::SISO: {
        if (!cfg.corr) {
            model.weights = std::move(base);
        } else {
            model.weights = weighted_spectrum(base, *cfg.corr).lambda_hats;
        }
        break;
    }
    case ReceiverMode::SIMO_LMMSE_1x2: {
        const std::vector<int> keep = all_but_site(closest_site(cfg.layout), comps_per_site);
        std::vector<double> kept;
        kept.reserve(keep.size());
        for (int idx : keep)
            kept.push_back(base[static_cast<std::size_t>(idx)]);
        if (!cfg.corr) {
            model.weights = std::move(kept);
        } else {
            model.weights = weighted_spectrum(kept, cfg.corr->submodel(keep)).lambda_hats;
        }
        break;
    }
    case ReceiverMode::MUMIMO_2x2: {
        if (!cfg.corr) {
            // two independent streams per site at half power each
            std::vector<double> streams;
            streams.reserve(base.size() * 2);
            for (double w : base) {
                streams.push_back(0.5 * w);
                streams.push_back(0.5 * w);
            }
            model.weights = std::move(streams);
            drop_largest(model.weights, 2 * comps_per_site);
        } else {
            // the two streams of one site are fully correlated (one site, one
            // path): rank-1 per component, so the half-power pair collapses to
            // the plain component weight and the 2N-point spectrum applies
            model.weights = weighted_spectrum(base, *cfg.corr).lambda_hats;
            drop_largest(model.weights, 2 * comps_per_site);
        }
        break;
    }
    }

    // zero eigen-weights contribute nothing; drop them so hot loops stay short
    std::erase_if(model.weights, [](double w) { return w <= 0.0; });
    model.rate_multiplier = (cfg.receiver == ReceiverMode::MUMIMO_2x2) ? 2.0 : 1.0;
    return model;
}

double draw_interference(const InterferenceModel& model, RandomStream& rng)
{
    double total = 0.0;
    for (double w : model.weights)
        total += w * rng.gamma(model.shape, 1.0);
    return total;
}

double draw_interference(const ScenarioConfig& cfg, RandomStream& rng)
{
    return draw_interference(compile_scenario(cfg), rng);
}

namespace {

double draw_signal(const InterferenceModel& model, RandomStream& rng)
{
    double g;
    if (model.user_eta_mu) {
        const auto& uc = model.user_components;
        g = rng.gamma(uc.shape1, uc.scale1) + rng.gamma(uc.shape2, uc.scale2);
    } else {
        g = rng.gamma(model.user_shape, model.user_scale);
    }
    return model.signal_gain * g;
}

// Runs `trials` split into fixed blocks, block b on RandomStream(seed, b).
// Per-block slot sums are merged in block order, so the result is identical
// for any thread count.
template <typename Body>
std::vector<double> run_blocked(long trials, std::uint64_t seed, int slots, Body&& body)
{
    const long nblocks = (trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<std::vector<double>> block_sums(static_cast<std::size_t>(nblocks));

    std::atomic<long> next{0};
    auto worker = [&]() {
        for (;;) {
            const long b = next.fetch_add(1);
            if (b >= nblocks)
                return;
            const long count = std::min<long>(kBlockTrials, trials - b * kBlockTrials);
            RandomStream rng(seed, static_cast<std::uint64_t>(b));
            std::vector<double> sums(static_cast<std::size_t>(slots), 0.0);
            body(rng, sums.data(), count);
            block_sums[static_cast<std::size_t>(b)] = std::move(sums);
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned nthreads =
        static_cast<unsigned>(std::min<long>(nblocks, std::min<unsigned>(hw, 16)));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    std::vector<double> total(static_cast<std::size_t>(slots), 0.0);
    for (const auto& sums : block_sums)
        for (int s = 0; s < slots; ++s)
            total[static_cast<std::size_t>(s)] += sums[static_cast<std::size_t>(s)];
    return total;
}

} // namespace

ExperimentResult run_coverage(const ScenarioConfig& cfg)
{
    const InterferenceModel model = compile_scenario(cfg);
    const double t = cfg.t_lin;

    const auto sums = run_blocked(
        cfg.trials, cfg.seed, 1, [&](RandomStream& rng, double* out, long count) {
            std::vector<double> comps(model.weights.size());
            long hits = 0;
            for (long i = 0; i < count; ++i) {
                const double s = draw_signal(model, rng);
                for (auto& c : comps)
                    c = rng.gamma(model.shape, 1.0);
                const double interference =
                    kernels::dot(model.weights.data(), comps.data(), comps.size());
                if (s > t * interference)
                    ++hits;
            }
            out[0] = static_cast<double>(hits);
        });

    ExperimentResult result;
    result.trials = cfg.trials;
    result.seed = cfg.seed;
    const double p = sums[0] / static_cast<double>(cfg.trials);
    result.coverage.value = p;
    result.coverage.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.trials));
    return result;
}

ExperimentResult run_rate(const ScenarioConfig& cfg)
{
    const InterferenceModel model = compile_scenario(cfg);

    const auto sums = run_blocked(
        cfg.trials, cfg.seed, 2, [&](RandomStream& rng, double* out, long count) {
            std::vector<double> comps(model.weights.size());
            double acc = 0.0, acc2 = 0.0;
            for (long i = 0; i < count; ++i) {
                const double s = draw_signal(model, rng);
                for (auto& c : comps)
                    c = rng.gamma(model.shape, 1.0);
                const double interference =
                    kernels::dot(model.weights.data(), comps.data(), comps.size());
                const double v = std::log1p(s / interference);
                acc += v;
                acc2 += v * v;
            }
            out[0] = acc;
            out[1] = acc2;
        });

    ExperimentResult result;
    result.trials = cfg.trials;
    result.seed = cfg.seed;
    const double n = static_cast<double>(cfg.trials);
    const double mean = sums[0] / n;
    const double var = std::max(0.0, sums[1] / n - mean * mean);
    result.rate_nats.value = model.rate_multiplier * mean;
    result.rate_nats.std_error = model.rate_multiplier * std::sqrt(var / n);
    return result;
}

OrderReport verify_convex_order(const ScenarioConfig& cfg_indep, const ScenarioConfig& cfg_corr,
                                long trials)
{
    const InterferenceModel indep = compile_scenario(cfg_indep);
    const InterferenceModel corr = compile_scenario(cfg_corr);

    const double total_i = std::accumulate(indep.weights.begin(), indep.weights.end(), 0.0);
    const double total_c = std::accumulate(corr.weights.begin(), corr.weights.end(), 0.0);
    if (std::abs(total_i - total_c) > 1e-6 * std::max(1.0, total_i))
        throw std::invalid_argument(
            "verify_convex_order: scenarios do not share a weight lineage");

    const double mean_i = indep.shape * total_i;

    struct Phi {
        std::string name;
        std::function<double(double)> f;
    };
    std::vector<Phi> battery;
    battery.push_back({"x^2", [](double x) { return x * x; }});
    battery.push_back({"exp(x)", [](double x) { return std::exp(x); }});
    for (double frac : {0.5, 1.0, 1.5, 2.0}) {
        const double a = frac * mean_i;
        battery.push_back({"max(x-" + std::to_string(a) + ",0)",
                           [a](double x) { return std::max(x - a, 0.0); }});
    }
    for (double frac : {0.5, 1.0, 2.0}) {
        const double s = frac * mean_i;
        battery.push_back({"ln(1+" + std::to_string(s) + "/x)",
                           [s](double x) { return std::log1p(s / x); }});
    }

    const int ncases = static_cast<int>(battery.size());
    const auto sums = run_blocked(
        trials, cfg_indep.seed, 4 * ncases, [&](RandomStream& rng, double* out, long count) {
            for (long t = 0; t < count; ++t) {
                double vi = 0.0, vc = 0.0;
                for (double w : indep.weights)
                    vi += w * rng.gamma(indep.shape, 1.0);
                for (double w : corr.weights)
                    vc += w * rng.gamma(corr.shape, 1.0);
                for (int k = 0; k < ncases; ++k) {
                    const double fi = battery[static_cast<std::size_t>(k)].f(vi);
                    const double fc = battery[static_cast<std::size_t>(k)].f(vc);
                    out[4 * k + 0] += fi;
                    out[4 * k + 1] += fi * fi;
                    out[4 * k + 2] += fc;
                    out[4 * k + 3] += fc * fc;
                }
            }
        });

    OrderReport report;
    report.all_pass = true;
    const double n = static_cast<double>(trials);
    for (int k = 0; k < ncases; ++k) {
        ConvexCase c;
        c.name = battery[static_cast<std::size_t>(k)].name;
        const double mi = sums[static_cast<std::size_t>(4 * k + 0)] / n;
        const double vi = std::max(0.0, sums[static_cast<std::size_t>(4 * k + 1)] / n - mi * mi);
        const double mc = sums[static_cast<std::size_t>(4 * k + 2)] / n;
        const double vc = std::max(0.0, sums[static_cast<std::size_t>(4 * k + 3)] / n - mc * mc);
        c.indep = {mi, std::sqrt(vi / n)};
        c.corr = {mc, std::sqrt(vc / n)};
        const double pooled = std::hypot(c.indep.std_error, c.corr.std_error);
        c.pass = mi <= mc + 3.0 * pooled;
        report.all_pass = report.all_pass && c.pass;
        report.cases.push_back(std::move(c));
    }
    return report;
}

} // namespace corrcov
