#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "grunsky/bound_function.hpp"
#include "grunsky/region.hpp"

namespace grunsky {

enum class Location { interior, edge_y0, edge_x0, edge_x1, edge_curve };
enum class MaxMethod { newton, grid, certified };

std::string_view location_name(Location loc);
std::string_view method_name(MaxMethod m);

struct OptimizationResult {
    double value = 0.0;
    double x = 0.0;
    double y = 0.0;
    Location location = Location::interior;
    MaxMethod method = MaxMethod::newton;
    /// Rigorous [lo, hi] bracket of the global maximum; certified runs only.
    std::optional<std::pair<double, double>> enclosure;
};

/// All solutions of grad fn = 0 strictly inside E, found by damped Newton
/// from a 50x50 multi-start grid. Roots are deduplicated at distance 1e-6,
/// carry gradient residual < tol, and arrive sorted by (x, y). Stationary
/// points sitting on the boundary are excluded. An empty list is a valid
/// result.
std::vector<OptimizationResult> interior_critical_points(const BoundFunction& fn, double tol = 1e-10);

/// Global maximum of the restriction of fn to one boundary piece, located
/// by a 2000-point scan followed by golden-section refinement to abscissa
/// tolerance tol. The x1 edge is the single point (1, 0).
OptimizationResult boundary_max(const BoundFunction& fn, Edge edge, double tol = 1e-10);

/// Maximum over interior critical points and all four boundary pieces.
/// Exact value ties break toward smaller x, then smaller y.
OptimizationResult global_max(const BoundFunction& fn, double tol = 1e-10);

inline constexpr std::uint64_t kDefaultBoxCap = 10'000'000;

/// Rigorous enclosure of the global maximum over E by interval
/// branch-and-bound: boxes outside the quarter ellipse are discarded,
/// straddling boxes are contracted by the interval test x^2 + 3y^2 <= 1,
/// and upper bounds combine the natural extension with a centered form
/// (when the gradient enclosure is finite). Deterministic: the queue is
/// ordered by upper bound with FIFO tie-break on insertion order.
/// Returns value = best verified point evaluation (the enclosure's lo) and
/// enclosure [lo, hi] with hi - lo <= eps.
/// Throws BudgetExceeded when more than box_cap boxes are processed.
OptimizationResult certified_max(const BoundFunction& fn, double eps,
                                 std::uint64_t box_cap = kDefaultBoxCap);

/// Brute-force lower-bound oracle: maximum of fn over an nx-by-ny grid of
/// the bounding box, with off-region points projected down onto the arc, so
/// every evaluated point lies in E. Requires nx, ny >= 2.
double grid_oracle(const BoundFunction& fn, int nx, int ny);

/// grid_oracle plus the grid argmax, packaged as a result.
OptimizationResult grid_max(const BoundFunction& fn, int nx, int ny);

/// The two-part third-Hankel bound: b1 = global max of phi1, b2 = 4 times
/// the squared global max of phi2, total = b1 + b2.
struct H31Bound {
    OptimizationResult b1;
    OptimizationResult phi2_max;
    double b2 = 0.0;
    double total = 0.0;
};

H31Bound theorem_h31_bound(double tol = 1e-10);

}  // namespace grunsky
