#pragma once

#include "orbitgeo/so_algebra.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace orbitgeo {

// Initial value problem y' = rhs(t, y) on [t0, t1] from y0.
struct IvpProblem {
    int dim = 0;
    std::function<Vector(double, const Vector&)> rhs;
    double t0 = 0.0;
    double t1 = 0.0;
    Vector y0;
};

// Accepted integration nodes with the right-hand side cached at each node.
struct Trajectory {
    std::vector<double> ts;
    std::vector<Vector> ys;
    std::vector<Vector> fs;

    std::size_t size() const { return ts.size(); }
    double t_front() const { return ts.front(); }
    double t_back() const { return ts.back(); }
    const Vector& y_back() const { return ys.back(); }

    // Cubic Hermite interpolation between the bracketing nodes; t must lie in
    // the covered interval up to a small rounding slack.
    Vector at(double t) const;
};

// Classical fourth-order Runge-Kutta on a uniform grid. The step is snapped so
// an integer number of steps lands exactly on t1. Requires 0 < step <= t1 - t0.
Trajectory rk4_fixed(const IvpProblem& p, double step);

// Dormand-Prince 5(4) embedded pair with proportional step control. Both
// tolerances must be positive. Integrates in either time direction and throws
// on step underflow below 1e-14. Deterministic: identical inputs give
// bit-identical trajectories.
Trajectory rk_adaptive(const IvpProblem& p, double rtol, double atol);

// Derivative samples (order 1 or 2) of values on a uniform grid with spacing dt.
// Fourth-order stencils: five-point central in the interior, six-point offset
// stencils in the two-row boundary layers. Needs at least 5 points.
std::vector<double> finite_difference(const std::vector<double>& values, double dt, int order);

}  // namespace orbitgeo
