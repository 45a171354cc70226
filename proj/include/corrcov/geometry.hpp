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

#ifndef CORRCOV_GEOMETRY_HPP
#define CORRCOV_GEOMETRY_HPP

#include "corrcov/fading.hpp"

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace corrcov {

class OutsideCellError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Two-ring 19-cell hexagonal layout. R is the cell apothem, so adjacent
// sites are 2R apart. Site 0 serves the user; interferers keep the ring
// labels 1..18 (first ring 1..6 counter-clockwise from the +x axis, second
// ring 7..18 sweeping 30-degree steps, radii alternating 4R and 2*sqrt(3)R).
// The +x axis points at the nearest interferer (site 1); the cell vertex
// shared with sites 1 and 2 sits at azimuth 30 degrees.
struct NetworkLayout {
    double cell_radius = 1.0; // apothem R
    double alpha = 2.5;       // path-loss exponent
    std::array<Point, 19> bs{};
    bool user_set = false;
    Point user{};
    double user_distance = 0.0;                  // r
    std::array<double, 18> interferer_distance{}; // d_1 .. d_18
    double normalized_distance = 0.0;
    double azimuth_deg = 0.0;
};

NetworkLayout hex_layout(double cell_radius, double alpha = 2.5);

// Distance from the cell center to the hexagon boundary along azimuth.
double boundary_distance(const NetworkLayout& layout, double azimuth_deg);

// Places the user at normalized_distance (fraction of the boundary distance
// along the azimuth; the default azimuth of 30 degrees points at the cell
// vertex, where the boundary distance is the circumradius 2R/sqrt(3)) and
// fills r and all d_i.
NetworkLayout place_user(NetworkLayout layout, double normalized_distance,
                         double azimuth_deg = 30.0);

// Per-interferer weights for the coverage formulas:
//   Gamma          -> lambda_i = d_i^-alpha / m_i                  (N entries)
//   CompositeGamma -> lambda_i = d_i^-alpha / beta_i               (N entries)
//   EtaMu          -> lambda_{2i-1} = d_i^-alpha / (mu (1+1/eta)),
//                     lambda_{2i}   = d_i^-alpha / (mu (1+eta))    (2N entries)
// CompositeGamma weights assume the user and interferers share sigma_db (the
// gamma_scale ratio cancels); callers with asymmetric shadowing must rescale.
std::vector<double> pathloss_weights(const NetworkLayout& layout, const FadingSpec& fading);
std::vector<double> pathloss_weights(const NetworkLayout& layout,
                                     std::span<const FadingSpec> per_interferer);

// Layout (positions, user, distances) as a JSON document for plotting.
std::string layout_to_json(const NetworkLayout& layout);

} // namespace corrcov

#endif
