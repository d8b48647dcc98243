#include "grunsky/bound_function.hpp"

namespace grunsky {

namespace {

template <class T>
T num(int v);

template <>
double num<double>(int v) { return static_cast<double>(v); }

template <>
Interval num<Interval>(int v) { return Interval(static_cast<double>(v)); }

double sq(double v) { return v * v; }
Interval sq(const Interval& v) { return square(v); }

double domain_sqrt(double r) { return guarded_sqrt(r); }
Interval domain_sqrt(const Interval& r) {
    // Boxes fully outside the radicand's domain are the caller's problem;
    // clamp keeps the enclosure sound on boxes straddling the zero set.
    return isqrt(clamp_nonneg(r));
}

template <class T>
T radicand(const T& x, const T& y) {
    return num<T>(1) - sq(x) - num<T>(3) * sq(y);
}

template <class T>
T eval_objective(Objective id, const T& x, const T& y) {
    if (id == Objective::phi1)
        return num<T>(2) * sq(x) * y + sq(y) +
               num<T>(2) * domain_sqrt(num<T>(1) - num<T>(3) * sq(y)) / domain_sqrt(num<T>(15));
    const T s = domain_sqrt(radicand(x, y));
    const T rt5 = domain_sqrt(num<T>(5));
    switch (id) {
        case Objective::f1:
            return sq(x) * x / num<T>(3) + x * y + s / rt5;
        case Objective::f2:
            return sq(x) * x + num<T>(4) * x * y + num<T>(2) * s / rt5;
        case Objective::f3:
            return x + sq(x) * x + num<T>(2) * s / rt5;
        case Objective::f4:
            return sq(sq(x)) + num<T>(4) * sq(y) + num<T>(4) * x * s / rt5;
        case Objective::phi2:
            return x * y + s / rt5;
        case Objective::phi1:
            break;
    }
    throw std::invalid_argument("unknown objective");
}

template <class T>
std::array<T, 2> eval_gradient(Objective id, const T& x, const T& y) {
    if (id == Objective::phi1) {
        const T t = domain_sqrt(num<T>(1) - num<T>(3) * sq(y));
        return {num<T>(4) * x * y,
                num<T>(2) * sq(x) + num<T>(2) * y - num<T>(6) * y / (domain_sqrt(num<T>(15)) * t)};
    }
    const T rt5 = domain_sqrt(num<T>(5));
    const T s = domain_sqrt(radicand(x, y));
    const T rt5s = rt5 * s;
    switch (id) {
        case Objective::f1:
            return {sq(x) + y - x / rt5s, x - num<T>(3) * y / rt5s};
        case Objective::f2:
            return {num<T>(3) * sq(x) + num<T>(4) * y - num<T>(2) * x / rt5s,
                    num<T>(4) * x - num<T>(6) * y / rt5s};
        case Objective::f3:
            return {num<T>(1) + num<T>(3) * sq(x) - num<T>(2) * x / rt5s,
                    num<T>(0) - num<T>(6) * y / rt5s};
        case Objective::f4:
            return {num<T>(4) * sq(x) * x +
                        num<T>(4) * (num<T>(1) - num<T>(2) * sq(x) - num<T>(3) * sq(y)) / rt5s,
                    num<T>(8) * y - num<T>(12) * x * y / rt5s};
        case Objective::phi2:
            return {y - x / rt5s, x - num<T>(3) * y / rt5s};
        case Objective::phi1:
            break;
    }
    throw std::invalid_argument("unknown objective");
}

}  // namespace

std::string_view objective_name(Objective id) {
    switch (id) {
        case Objective::f1: return "f1";
        case Objective::f2: return "f2";
        case Objective::f3: return "f3";
        case Objective::f4: return "f4";
        case Objective::phi1: return "phi1";
        case Objective::phi2: return "phi2";
    }
    return "";
}

std::optional<Objective> objective_from_name(std::string_view name) {
    for (Objective id : kAllObjectives)
        if (objective_name(id) == name) return id;
    return std::nullopt;
}

double BoundFunction::value(double x, double y) const { return eval_objective<double>(id_, x, y); }

std::array<double, 2> BoundFunction::gradient(double x, double y) const {
    return eval_gradient<double>(id_, x, y);
}

Interval BoundFunction::value(const Interval& x, const Interval& y) const {
    return eval_objective<Interval>(id_, x, y);
}

std::array<Interval, 2> BoundFunction::gradient(const Interval& x, const Interval& y) const {
    return eval_gradient<Interval>(id_, x, y);
}

}  // namespace grunsky
