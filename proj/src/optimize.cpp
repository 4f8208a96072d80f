// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdiscord/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace qdiscord {

NelderMeadResult nelder_mead(const Objective& f, const Eigen::VectorXd& start,
                             const NelderMeadOptions& options) {
    const auto n = start.size();
    std::vector<Eigen::VectorXd> simplex;
    std::vector<double> values;
    simplex.reserve(static_cast<std::size_t>(n + 1));
    simplex.push_back(start);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::VectorXd v = start;
        v(i) += options.initial_step;
        simplex.push_back(std::move(v));
    }
    NelderMeadResult result;
    auto eval = [&](const Eigen::VectorXd& x) {
        ++result.evaluations;
        return f(x);
    };
    for (const auto& v : simplex) values.push_back(eval(v));

    std::vector<std::size_t> order(simplex.size());
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<Eigen::VectorXd> s2;
        std::vector<double> v2;
        for (auto idx : order) {
            s2.push_back(simplex[idx]);
            v2.push_back(values[idx]);
        }
        simplex = std::move(s2);
        values = std::move(v2);
    };

    sort_simplex();
    for (; result.iterations < options.max_iterations; ++result.iterations) {
        const double spread = values.back() - values.front();
        double diameter = 0.0;
        for (std::size_t i = 1; i < simplex.size(); ++i)
            diameter = std::max(diameter, (simplex[i] - simplex[0]).cwiseAbs().maxCoeff());
        if (spread <= options.f_tol && diameter <= options.x_tol) break;

        const std::size_t worst = simplex.size() - 1;
        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (std::size_t i = 0; i < worst; ++i) centroid += simplex[i];
        centroid /= static_cast<double>(worst);

        const Eigen::VectorXd reflected = centroid + (centroid - simplex[worst]);
        const double f_reflected = eval(reflected);
        if (f_reflected < values.front()) {
            const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[worst]);
            const double f_expanded = eval(expanded);
            if (f_expanded < f_reflected) {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
        } else if (f_reflected < values[worst - 1]) {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
        } else {
            const bool outside = f_reflected < values[worst];
            const Eigen::VectorXd contracted = outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                                                       : Eigen::VectorXd(centroid + 0.5 * (simplex[worst] - centroid));
            const double f_contracted = eval(contracted);
            if (f_contracted < (outside ? f_reflected : values[worst])) {
                simplex[worst] = contracted;
                values[worst] = f_contracted;
            } else {
                for (std::size_t i = 1; i < simplex.size(); ++i) {
                    simplex[i] = simplex[0] + 0.5 * (simplex[i] - simplex[0]);
                    values[i] = eval(simplex[i]);
                }
            }
        }
        sort_simplex();
    }
    result.x = simplex.front();
    result.value = values.front();
    return result;
}

std::vector<Eigen::Vector3d> fibonacci_sphere(std::size_t count) {
    std::vector<Eigen::Vector3d> points;
    points.reserve(count);
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        points.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return points;
}

Eigen::Vector3d unit_from_angles(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Eigen::Vector2d angles_from_unit(const Eigen::Vector3d& e) {
    const Eigen::Vector3d u = e.normalized();
    return {std::acos(std::clamp(u.z(), -1.0, 1.0)), std::atan2(u.y(), u.x())};
}

}  // namespace qdiscord
