#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "grunsky/errors.hpp"
#include "grunsky/interval.hpp"
#include "grunsky/region.hpp"

namespace grunsky {

/// The six closed-form objectives maximized over region E. With
/// s = sqrt(1 - x^2 - 3y^2):
///   f1   = x^3/3 + x*y + s/sqrt(5)
///   f2   = x^3 + 4*x*y + 2*s/sqrt(5)
///   f3   = x + x^3 + 2*s/sqrt(5)
///   f4   = x^4 + 4*y^2 + 4*x*s/sqrt(5)
///   phi1 = 2*x^2*y + y^2 + 2*sqrt(1 - 3y^2)/sqrt(15)
///   phi2 = x*y + s/sqrt(5)
/// f3 carries 3y^2 under the radical so that its restriction to the arc
/// y = sqrt((1-x^2)/3) collapses to x + x^3.
enum class Objective { f1, f2, f3, f4, phi1, phi2 };

inline constexpr std::array<Objective, 6> kAllObjectives = {
    Objective::f1, Objective::f2, Objective::f3, Objective::f4, Objective::phi1, Objective::phi2};

std::string_view objective_name(Objective id);
std::optional<Objective> objective_from_name(std::string_view name);

/// Square root with the domain clamp used on the curve edge, where the
/// radicand is analytically zero but roundoff may leave it slightly
/// negative: arguments in [-1e-14, 0) clamp to 0, anything lower is a
/// hard SqrtDomainError.
inline double guarded_sqrt(double r) {
    if (r < 0.0) {
        if (r >= -1e-14) return 0.0;
        throw SqrtDomainError(r);
    }
    return std::sqrt(r);
}

/// Named objective with scalar and interval evaluation and analytic
/// gradient. The interval flavors are the natural expression-wise
/// extensions (radicands intersected with [0, inf)); gradient components
/// widen to the whole line over boxes where the radicand can vanish.
class BoundFunction {
public:
    explicit BoundFunction(Objective id) : id_(id) {}

    Objective id() const { return id_; }
    std::string_view name() const { return objective_name(id_); }
    Region domain() const { return {}; }

    double value(double x, double y) const;
    std::array<double, 2> gradient(double x, double y) const;

    Interval value(const Interval& x, const Interval& y) const;
    std::array<Interval, 2> gradient(const Interval& x, const Interval& y) const;

private:
    Objective id_;
};

}  // namespace grunsky
