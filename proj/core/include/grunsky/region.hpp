#pragma once

#include <cmath>

namespace grunsky {

/// The feasibility set E = {(x, y) : 0 <= x <= 1, 0 <= y <= sqrt((1-x^2)/3)},
/// equivalently the quarter ellipse x^2 + 3y^2 <= 1 with x, y >= 0. Boundary
/// pieces: the segments y = 0 and x = 0, the elliptic arc x^2 + 3y^2 = 1
/// ("curve"), and the degenerate vertex (1, 0).
struct Region {
    static double y_max() { return 1.0 / std::sqrt(3.0); }

    /// Top boundary y = sqrt((1-x^2)/3), clamped against roundoff.
    static double curve_y(double x) { return std::sqrt(std::max(0.0, (1.0 - x * x) / 3.0)); }

    static bool contains(double x, double y, double tol = 0.0) {
        return x >= -tol && x <= 1.0 + tol && y >= -tol && x * x + 3.0 * y * y <= 1.0 + tol;
    }

    /// Strict interior with margin: used to reject boundary-converged roots.
    static bool strictly_inside(double x, double y, double margin) {
        return x > margin && y > margin && x * x + 3.0 * y * y < 1.0 - margin;
    }
};

enum class Edge { y0, x0, x1, curve };

}  // namespace grunsky
