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

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace qdiscord {

struct NelderMeadOptions {
    std::size_t max_iterations = 2000;
    double initial_step = 0.25;
    // Stop once the simplex values spread by less than f_tol and its
    // vertices lie within x_tol of the best vertex.
    double f_tol = 1e-15;
    double x_tol = 1e-10;
};

struct NelderMeadResult {
    Eigen::VectorXd x;
    double value = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Derivative-free simplex minimization with the standard
/// reflection/expansion/contraction/shrink coefficients (1, 2, ½, ½).
NelderMeadResult nelder_mead(const Objective& f, const Eigen::VectorXd& start,
                             const NelderMeadOptions& options = {});

/// Deterministic, nearly uniform points on the unit sphere.
std::vector<Eigen::Vector3d> fibonacci_sphere(std::size_t count);

/// (θ, φ) → (sin θ cos φ, sin θ sin φ, cos θ).
Eigen::Vector3d unit_from_angles(double theta, double phi);
Eigen::Vector2d angles_from_unit(const Eigen::Vector3d& e);

}  // namespace qdiscord
