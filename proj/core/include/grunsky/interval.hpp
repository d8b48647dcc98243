#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace grunsky {

/// Closed interval [lo, hi] with outward rounding. IEEE-754 basic operations
/// are correctly rounded, so widening each computed endpoint by one ulp
/// yields a rigorous enclosure without touching the rounding mode.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    explicit Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double h) : lo(l), hi(h) {}

    static Interval whole() {
        const double inf = std::numeric_limits<double>::infinity();
        return {-inf, inf};
    }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }
    bool is_point() const { return lo == hi; }
};

namespace detail {
inline double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
inline double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }
}  // namespace detail

inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator+(const Interval& a, const Interval& b) {
    if (!a.is_finite() || !b.is_finite()) return Interval::whole();
    return {detail::down(a.lo + b.lo), detail::up(a.hi + b.hi)};
}

inline Interval operator-(const Interval& a, const Interval& b) {
    if (!a.is_finite() || !b.is_finite()) return Interval::whole();
    return {detail::down(a.lo - b.hi), detail::up(a.hi - b.lo)};
}

inline Interval operator*(const Interval& a, const Interval& b) {
    const bool a_zero = a.lo == 0.0 && a.hi == 0.0;
    const bool b_zero = b.lo == 0.0 && b.hi == 0.0;
    if (a_zero || b_zero) return Interval(0.0);
    if (!a.is_finite() || !b.is_finite()) return Interval::whole();
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {detail::down(std::min({p1, p2, p3, p4})), detail::up(std::max({p1, p2, p3, p4}))};
}

/// Tighter than a*a when the interval straddles zero.
inline Interval square(const Interval& a) {
    if (!a.is_finite()) return {0.0, std::numeric_limits<double>::infinity()};
    const double m = std::max(std::abs(a.lo), std::abs(a.hi));
    double lo = 0.0;
    if (a.lo > 0.0)
        lo = detail::down(a.lo * a.lo);
    else if (a.hi < 0.0)
        lo = detail::down(a.hi * a.hi);
    return {std::max(lo, 0.0), detail::up(m * m)};
}

/// Whole line when the denominator contains zero.
inline Interval operator/(const Interval& a, const Interval& b) {
    if (!a.is_finite() || !b.is_finite()) return Interval::whole();
    if (b.lo <= 0.0 && b.hi >= 0.0) return Interval::whole();
    const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    return {detail::down(std::min({q1, q2, q3, q4})), detail::up(std::max({q1, q2, q3, q4}))};
}

inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }

/// Lower endpoint clipped to [0, inf); caller must ensure hi >= 0.
inline Interval clamp_nonneg(const Interval& a) { return {std::max(a.lo, 0.0), a.hi}; }

/// Requires lo >= 0 (use clamp_nonneg first). std::sqrt is correctly rounded.
inline Interval isqrt(const Interval& a) {
    const double lo = std::max(detail::down(std::sqrt(a.lo)), 0.0);
    const double hi = std::isfinite(a.hi) ? detail::up(std::sqrt(a.hi)) : a.hi;
    return {lo, hi};
}

inline Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

/// Empty result is signalled by lo > hi.
inline Interval intersect(const Interval& a, const Interval& b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

inline bool is_empty(const Interval& a) { return a.lo > a.hi; }

}  // namespace grunsky
