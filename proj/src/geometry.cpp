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

#include "corrcov/geometry.hpp"

#include <json.hpp>

#include <cmath>

namespace corrcov {

namespace {

constexpr double kDegToRad = M_PI / 180.0;

} // namespace

NetworkLayout hex_layout(double cell_radius, double alpha)
{
    if (!(cell_radius > 0.0))
        throw std::invalid_argument("hex_layout: cell_radius must be positive");
    if (alpha < 2.0)
        throw std::invalid_argument("hex_layout: path-loss exponent must be >= 2");

    NetworkLayout layout;
    layout.cell_radius = cell_radius;
    layout.alpha = alpha;
    layout.bs[0] = {0.0, 0.0};

    const double r1 = 2.0 * cell_radius;
    for (int k = 0; k < 6; ++k) {
        const double ang = 60.0 * k * kDegToRad;
        layout.bs[static_cast<std::size_t>(1 + k)] = {r1 * std::cos(ang), r1 * std::sin(ang)};
    }
    // Second ring: radius alternates 4R (lattice axis) and 2*sqrt(3) R (diagonal).
    for (int j = 0; j < 12; ++j) {
        const double ang = 30.0 * j * kDegToRad;
        const double rad = (j % 2 == 0) ? 4.0 * cell_radius : 2.0 * std::sqrt(3.0) * cell_radius;
        layout.bs[static_cast<std::size_t>(7 + j)] = {rad * std::cos(ang), rad * std::sin(ang)};
    }
    return layout;
}

double boundary_distance(const NetworkLayout& layout, double azimuth_deg)
{
    // Hexagon with apothem R and edge normals along the six first-ring
    // directions: boundary at R / max_k cos(theta - 60k).
    const double theta = azimuth_deg * kDegToRad;
    double max_cos = -1.0;
    for (int k = 0; k < 6; ++k)
        max_cos = std::max(max_cos, std::cos(theta - 60.0 * k * kDegToRad));
    return layout.cell_radius / max_cos;
}

NetworkLayout place_user(NetworkLayout layout, double normalized_distance, double azimuth_deg)
{
    if (!(normalized_distance > 0.0) || normalized_distance > 1.0)
        throw OutsideCellError("place_user: normalized distance must be in (0, 1]");

    const double reach = boundary_distance(layout, azimuth_deg);
    const double r = normalized_distance * reach;
    const double theta = azimuth_deg * kDegToRad;
    layout.user = {r * std::cos(theta), r * std::sin(theta)};
    layout.user_distance = r;
    layout.normalized_distance = normalized_distance;
    layout.azimuth_deg = azimuth_deg;
    layout.user_set = true;

    for (int i = 1; i <= 18; ++i) {
        const double dx = layout.bs[static_cast<std::size_t>(i)].x - layout.user.x;
        const double dy = layout.bs[static_cast<std::size_t>(i)].y - layout.user.y;
        layout.interferer_distance[static_cast<std::size_t>(i - 1)] = std::hypot(dx, dy);
    }
    return layout;
}

namespace {

void append_weights(std::vector<double>& out, double d, double alpha, const FadingSpec& f)
{
    const double pl = std::pow(d, -alpha);
    switch (f.kind) {
    case FadingKind::Gamma:
        out.push_back(pl / f.m);
        break;
    case FadingKind::CompositeGamma:
        out.push_back(pl / f.beta);
        break;
    case FadingKind::EtaMu:
        out.push_back(pl / (f.mu * (1.0 + 1.0 / f.eta)));
        out.push_back(pl / (f.mu * (1.0 + f.eta)));
        break;
    }
}

} // namespace

std::vector<double> pathloss_weights(const NetworkLayout& layout, const FadingSpec& fading)
{
    std::array<FadingSpec, 18> all;
    all.fill(fading);
    return pathloss_weights(layout, std::span<const FadingSpec>(all));
}

std::vector<double> pathloss_weights(const NetworkLayout& layout,
                                     std::span<const FadingSpec> per_interferer)
{
    if (!layout.user_set)
        throw std::invalid_argument("pathloss_weights: user not placed");
    if (per_interferer.size() != 18)
        throw std::invalid_argument("pathloss_weights: need one FadingSpec per interferer");

    std::vector<double> weights;
    weights.reserve(36);
    for (int i = 0; i < 18; ++i)
        append_weights(weights, layout.interferer_distance[static_cast<std::size_t>(i)],
                       layout.alpha, per_interferer[static_cast<std::size_t>(i)]);
    return weights;
}

std::string layout_to_json(const NetworkLayout& layout)
{
    nlohmann::json j;
    j["cell_radius"] = layout.cell_radius;
    j["alpha"] = layout.alpha;
    auto positions = nlohmann::json::array();
    for (const auto& p : layout.bs)
        positions.push_back({p.x, p.y});
    j["bs_positions"] = positions;
    if (layout.user_set) {
        j["user"] = {layout.user.x, layout.user.y};
        j["user_distance"] = layout.user_distance;
        j["normalized_distance"] = layout.normalized_distance;
        j["azimuth_deg"] = layout.azimuth_deg;
        j["interferer_distances"] = layout.interferer_distance;
    }
    return j.dump(2);
}

} // namespace corrcov
