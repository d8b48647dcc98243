#include "grunsky/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "grunsky/errors.hpp"
#include "grunsky/interval.hpp"

namespace grunsky {

namespace {

constexpr int kNewtonGrid = 50;
constexpr int kNewtonMaxIter = 60;
constexpr int kNewtonMaxHalvings = 30;
constexpr double kDedupeDist = 1e-6;
constexpr double kInteriorMargin = 1e-8;
constexpr int kScanPoints = 2000;

double norm2(const std::array<double, 2>& g) { return std::hypot(g[0], g[1]); }

/// Gradient evaluation that reports failure instead of throwing or
/// returning non-finite components. Points at or beyond the radicand's
/// zero set are rejected up front; the gradient blows up there anyway.
std::optional<std::array<double, 2>> try_gradient(const BoundFunction& fn, double x, double y) {
    const double rad =
        fn.id() == Objective::phi1 ? 1.0 - 3.0 * y * y : 1.0 - x * x - 3.0 * y * y;
    if (rad < 1e-12) return std::nullopt;
    auto g = fn.gradient(x, y);
    if (!std::isfinite(g[0]) || !std::isfinite(g[1])) return std::nullopt;
    return g;
}

/// One multi-start damped Newton run on grad fn = 0. The Jacobian comes
/// from central differences of the analytic gradient; steps are halved
/// until the gradient norm decreases. Failed starts return nullopt.
std::optional<std::array<double, 2>> newton_root(const BoundFunction& fn, double x, double y, double tol) {
    auto g_opt = try_gradient(fn, x, y);
    if (!g_opt) return std::nullopt;
    auto g = *g_opt;
    for (int iter = 0; iter < kNewtonMaxIter; ++iter) {
        if (norm2(g) < tol) return std::array<double, 2>{x, y};
        const double h = 1e-7;
        auto gxp = try_gradient(fn, x + h, y), gxm = try_gradient(fn, x - h, y);
        auto gyp = try_gradient(fn, x, y + h), gym = try_gradient(fn, x, y - h);
        if (!gxp || !gxm || !gyp || !gym) return std::nullopt;
        const double j00 = ((*gxp)[0] - (*gxm)[0]) / (2 * h), j01 = ((*gyp)[0] - (*gym)[0]) / (2 * h);
        const double j10 = ((*gxp)[1] - (*gxm)[1]) / (2 * h), j11 = ((*gyp)[1] - (*gym)[1]) / (2 * h);
        const double det = j00 * j11 - j01 * j10;
        if (!std::isfinite(det) || std::abs(det) < 1e-300) return std::nullopt;
        const double dx = -(j11 * g[0] - j01 * g[1]) / det;
        const double dy = -(-j10 * g[0] + j00 * g[1]) / det;
        double lambda = 1.0;
        bool accepted = false;
        for (int halving = 0; halving <= kNewtonMaxHalvings; ++halving, lambda *= 0.5) {
            const double nx = x + lambda * dx, ny = y + lambda * dy;
            auto gn = try_gradient(fn, nx, ny);
            if (gn && norm2(*gn) < norm2(g)) {
                x = nx;
                y = ny;
                g = *gn;
                accepted = true;
                break;
            }
        }
        if (!accepted) return std::nullopt;
    }
    if (norm2(g) < tol) return std::array<double, 2>{x, y};
    return std::nullopt;
}

struct EdgeParam {
    double lo, hi;
    double (*to_x)(double);
    double (*to_y)(double);
};

EdgeParam edge_param(Edge edge) {
    switch (edge) {
        case Edge::y0:
            return {0.0, 1.0, [](double t) { return t; }, [](double) { return 0.0; }};
        case Edge::x0:
            return {0.0, Region::y_max(), [](double) { return 0.0; }, [](double t) { return t; }};
        case Edge::curve:
            return {0.0, 1.0, [](double t) { return t; }, [](double t) { return Region::curve_y(t); }};
        case Edge::x1:
            return {0.0, 0.0, [](double) { return 1.0; }, [](double) { return 0.0; }};
    }
    throw std::invalid_argument("unknown edge");
}

/// Restriction to the arc y = sqrt((1-x^2)/3), where 1 - x^2 - 3y^2 is
/// identically zero. Substituting that cancellation analytically removes
/// sqrt(roundoff) noise that would otherwise dominate the refinement.
double arc_value(const BoundFunction& fn, double x) {
    const double yc = Region::curve_y(x);
    switch (fn.id()) {
        case Objective::f1: return x * x * x / 3.0 + x * yc;
        case Objective::f2: return x * x * x + 4.0 * x * yc;
        case Objective::f3: return x + x * x * x;
        case Objective::f4: return x * x * x * x + 4.0 * yc * yc;
        case Objective::phi2: return x * yc;
        case Objective::phi1: return fn.value(x, yc);  // own radical is benign here
    }
    throw std::invalid_argument("unknown objective");
}

Location edge_location(Edge edge) {
    switch (edge) {
        case Edge::y0: return Location::edge_y0;
        case Edge::x0: return Location::edge_x0;
        case Edge::x1: return Location::edge_x1;
        case Edge::curve: return Location::edge_curve;
    }
    return Location::interior;
}

/// (a.value, then smaller x, then smaller y) is preferred.
bool better(const OptimizationResult& a, const OptimizationResult& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

}  // namespace

std::string_view location_name(Location loc) {
    switch (loc) {
        case Location::interior: return "interior";
        case Location::edge_y0: return "y0";
        case Location::edge_x0: return "x0";
        case Location::edge_x1: return "x1";
        case Location::edge_curve: return "curve";
    }
    return "";
}

std::string_view method_name(MaxMethod m) {
    switch (m) {
        case MaxMethod::newton: return "newton";
        case MaxMethod::grid: return "grid";
        case MaxMethod::certified: return "certified";
    }
    return "";
}

std::vector<OptimizationResult> interior_critical_points(const BoundFunction& fn, double tol) {
    if (tol <= 0) throw std::invalid_argument("tol must be > 0");
    std::vector<std::array<double, 2>> roots;
    for (int i = 0; i < kNewtonGrid; ++i) {
        const double x0 = (i + 0.5) / kNewtonGrid;
        for (int j = 0; j < kNewtonGrid; ++j) {
            const double y0 = (j + 0.5) / kNewtonGrid * Region::y_max();
            if (x0 * x0 + 3 * y0 * y0 > 1.0 - 1e-6) continue;
            auto root = newton_root(fn, x0, y0, tol);
            if (!root) continue;
            const double x = (*root)[0], y = (*root)[1];
            if (!Region::strictly_inside(x, y, kInteriorMargin)) continue;
            bool duplicate = false;
            for (const auto& r : roots)
                if (std::hypot(r[0] - x, r[1] - y) < kDedupeDist) {
                    duplicate = true;
                    break;
                }
            if (!duplicate) roots.push_back({x, y});
        }
    }
    std::sort(roots.begin(), roots.end());
    std::vector<OptimizationResult> out;
    out.reserve(roots.size());
    for (const auto& r : roots)
        out.push_back({fn.value(r[0], r[1]), r[0], r[1], Location::interior, MaxMethod::newton, {}});
    return out;
}

OptimizationResult boundary_max(const BoundFunction& fn, Edge edge, double tol) {
    if (tol <= 0) throw std::invalid_argument("tol must be > 0");
    const EdgeParam param = edge_param(edge);
    const auto eval = [&](double t) {
        return edge == Edge::curve ? arc_value(fn, t) : fn.value(param.to_x(t), param.to_y(t));
    };

    if (edge == Edge::x1)
        return {eval(0.0), 1.0, 0.0, Location::edge_x1, MaxMethod::newton, {}};

    int best_i = 0;
    double best_v = eval(param.lo);
    for (int i = 1; i < kScanPoints; ++i) {
        const double t = param.lo + (param.hi - param.lo) * i / (kScanPoints - 1);
        const double v = eval(t);
        if (v > best_v) {
            best_v = v;
            best_i = i;
        }
    }
    const double step = (param.hi - param.lo) / (kScanPoints - 1);
    double a = param.lo + step * std::max(0, best_i - 1);
    double b = param.lo + step * std::min(kScanPoints - 1, best_i + 1);

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = eval(c), fd = eval(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval(d);
        }
    }
    const double t = 0.5 * (a + b);
    return {eval(t), param.to_x(t), param.to_y(t), edge_location(edge), MaxMethod::newton, {}};
}

OptimizationResult global_max(const BoundFunction& fn, double tol) {
    std::vector<OptimizationResult> candidates = interior_critical_points(fn, tol);
    for (Edge edge : {Edge::y0, Edge::x0, Edge::x1, Edge::curve})
        candidates.push_back(boundary_max(fn, edge, tol));
    OptimizationResult best = candidates.front();
    for (const auto& c : candidates)
        if (better(c, best)) best = c;
    return best;
}

namespace {

struct Box {
    Interval x, y;
    double ub;
    std::uint64_t seq;
};

struct BoxOrder {
    bool operator()(const Box& a, const Box& b) const {
        if (a.ub != b.ub) return a.ub < b.ub;
        return a.seq > b.seq;  // FIFO among equal upper bounds
    }
};

/// Contracts a box against x in [0,1], y >= 0 and the interval test
/// x^2 + 3y^2 <= 1. Returns false when the contracted box misses E.
bool contract_to_region(Interval& x, Interval& y) {
    x = intersect(x, Interval(0.0, 1.0));
    y = intersect(y, Interval(0.0, detail::up(Region::y_max())));
    if (is_empty(x) || is_empty(y)) return false;
    // max feasible y over the box is attained at x = x.lo
    Interval ry = (Interval(1.0) - square(Interval(x.lo))) / Interval(3.0);
    if (ry.hi < 0.0) return false;
    y.hi = std::min(y.hi, isqrt(clamp_nonneg(ry)).hi);
    if (is_empty(y)) return false;
    Interval rx = Interval(1.0) - Interval(3.0) * square(Interval(y.lo));
    if (rx.hi < 0.0) return false;
    x.hi = std::min(x.hi, isqrt(clamp_nonneg(rx)).hi);
    return !is_empty(x);
}

/// True when (x, y) is in E by a rigorous interval check.
bool certified_in_region(double x, double y) {
    if (x < 0.0 || x > 1.0 || y < 0.0) return false;
    const Interval m = square(Interval(x)) + Interval(3.0) * square(Interval(y));
    return m.hi <= 1.0;
}

/// Points of the box (or just under its lower-y edge) certified to lie in
/// E; used for verified lower bounds and as centered-form expansion points.
/// The second candidate sits on the box's bottom edge, which pins down
/// maxima attained on y = 0 and tags them correctly.
std::array<std::array<double, 2>, 2> feasible_samples(const Interval& x, const Interval& y) {
    const double px = std::clamp(x.mid(), 0.0, 1.0);
    // rounded-down arc height at px
    const Interval r = (Interval(1.0) - square(Interval(px))) / Interval(3.0);
    const double rlo = std::max(r.lo, 0.0);
    const double yc = isqrt(Interval(rlo, rlo)).lo;
    double py = std::max(0.0, std::min(y.mid(), yc));
    for (int k = 0; k < 128 && !certified_in_region(px, py); ++k) py = std::nextafter(py, 0.0);
    double pb = std::max(0.0, std::min(y.lo, yc));
    for (int k = 0; k < 128 && !certified_in_region(px, pb); ++k) pb = std::nextafter(pb, 0.0);
    return {{{px, py}, {px, pb}}};
}

/// min(natural extension, centered form, inherited parent bound). The
/// centered form is only trusted when the gradient enclosure is finite,
/// which happens exactly when the radicand stays positive over the box.
double box_upper_bound(const BoundFunction& fn, const Interval& x, const Interval& y, double inherit) {
    double ub = std::min(inherit, fn.value(x, y).hi);
    const auto g = fn.gradient(x, y);
    if (g[0].is_finite() && g[1].is_finite()) {
        const Interval cx(x.mid()), cy(y.mid());
        const Interval centered = fn.value(cx, cy) + g[0] * (x - cx) + g[1] * (y - cy);
        if (std::isfinite(centered.hi)) ub = std::min(ub, centered.hi);
    }
    return ub;
}

Location classify_point(double x, double y) {
    constexpr double d = 1e-7;
    if (x >= 1.0 - d) return Location::edge_x1;
    if (y <= d) return Location::edge_y0;
    if (x <= d) return Location::edge_x0;
    if (x * x + 3 * y * y >= 1.0 - d) return Location::edge_curve;
    return Location::interior;
}

}  // namespace

OptimizationResult certified_max(const BoundFunction& fn, double eps, std::uint64_t box_cap) {
    if (eps <= 0) throw std::invalid_argument("eps must be > 0");

    std::priority_queue<Box, std::vector<Box>, BoxOrder> queue;
    std::uint64_t seq = 0;
    double best_lo = -std::numeric_limits<double>::infinity();
    std::array<double, 2> best_pt = {0.0, 0.0};

    const auto sample_box = [&](const Interval& x, const Interval& y) {
        for (const auto& p : feasible_samples(x, y)) {
            if (!certified_in_region(p[0], p[1])) continue;
            const double lo = fn.value(Interval(p[0]), Interval(p[1])).lo;
            if (lo > best_lo) {
                best_lo = lo;
                best_pt = p;
            }
        }
    };

    Interval x0(0.0, 1.0), y0(0.0, detail::up(Region::y_max()));
    if (!contract_to_region(x0, y0)) throw std::logic_error("empty start region");
    sample_box(x0, y0);
    queue.push({x0, y0, box_upper_bound(fn, x0, y0, std::numeric_limits<double>::infinity()), seq++});

    std::uint64_t processed = 0;
    double hi = queue.top().ub;
    while (!queue.empty()) {
        const Box box = queue.top();
        queue.pop();
        hi = std::max(box.ub, best_lo);
        if (box.ub - best_lo <= eps) break;
        if (++processed > box_cap) throw BudgetExceeded(box_cap, box.ub - best_lo);

        const bool split_x = box.x.width() >= box.y.width();
        for (int half = 0; half < 2; ++half) {
            Interval cx = box.x, cy = box.y;
            if (split_x) {
                const double m = box.x.mid();
                (half == 0 ? cx.hi : cx.lo) = m;
            } else {
                const double m = box.y.mid();
                (half == 0 ? cy.hi : cy.lo) = m;
            }
            if (!contract_to_region(cx, cy)) continue;
            sample_box(cx, cy);
            const double ub = box_upper_bound(fn, cx, cy, box.ub);
            if (ub > best_lo) queue.push({cx, cy, ub, seq++});
        }
        if (queue.empty()) hi = best_lo;
    }

    OptimizationResult out;
    out.value = best_lo;
    out.x = best_pt[0];
    out.y = best_pt[1];
    out.location = classify_point(best_pt[0], best_pt[1]);
    out.method = MaxMethod::certified;
    out.enclosure = std::make_pair(best_lo, hi);
    return out;
}

OptimizationResult grid_max(const BoundFunction& fn, int nx, int ny) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("grid oracle needs nx, ny >= 2");
    OptimizationResult best;
    best.value = -std::numeric_limits<double>::infinity();
    best.method = MaxMethod::grid;
    for (int i = 0; i < nx; ++i) {
        const double x = static_cast<double>(i) / (nx - 1);
        const double ytop = Region::curve_y(x);
        for (int j = 0; j < ny; ++j) {
            double y = static_cast<double>(j) / (ny - 1) * Region::y_max();
            const bool clipped = y >= ytop;
            if (clipped) y = ytop;  // project onto the arc
            const double v = fn.value(x, y);
            if (v > best.value) {
                best.value = v;
                best.x = x;
                best.y = y;
            }
            if (clipped) break;
        }
    }
    best.location = classify_point(best.x, best.y);
    return best;
}

double grid_oracle(const BoundFunction& fn, int nx, int ny) { return grid_max(fn, nx, ny).value; }

H31Bound theorem_h31_bound(double tol) {
    H31Bound out;
    out.b1 = global_max(BoundFunction(Objective::phi1), tol);
    out.phi2_max = global_max(BoundFunction(Objective::phi2), tol);
    out.b2 = 4.0 * out.phi2_max.value * out.phi2_max.value;
    out.total = out.b1.value + out.b2;
    return out;
}

}  // namespace grunsky
