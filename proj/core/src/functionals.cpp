#include "grunsky/functionals.hpp"

#include "grunsky/errors.hpp"

namespace grunsky {

namespace {

Rational pow3(const Rational& v) { return v * v * v; }

Rational abs_r(const Rational& v) { return v < 0 ? Rational(-v) : v; }

}  // namespace

const Rational& LogCoefficients::at(int n) const {
    if (n < 1 || n >= static_cast<int>(gamma.size()))
        throw MissingEntry("gamma_" + std::to_string(n) + " not computed");
    return gamma[static_cast<std::size_t>(n)];
}

LogCoefficients log_coefficients(const TruncatedSeries& f, int n) {
    if (!f.is_normalized()) throw NotNormalized();
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (f.order() < n + 1) throw OrderTooSmall(f.order(), n + 1);
    // f(z)/z has constant term 1; its log is exact to degree f.order() - 1.
    TruncatedSeries g(f.order() - 1);
    for (int k = 0; k <= f.order() - 1; ++k) g.set_coeff(k, f.coeff(k + 1));
    const TruncatedSeries lg = ps_log1(g);
    LogCoefficients out;
    out.gamma.resize(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 1; k <= n; ++k) out.gamma[static_cast<std::size_t>(k)] = lg.coeff(k) / 2;
    return out;
}

Rational gamma3_direct(const CoefficientVector& a) {
    return (a.a(4) - a.a(2) * a.a(3) + pow3(a.a(2)) / 3) / 2;
}

Rational gamma3_omega(const GrunskyTable& t) {
    return t.omega(3, 3) + 2 * t.omega(1, 1) * t.omega(1, 3);
}

Rational gamma3_omega_alt(const GrunskyTable& t) {
    const Rational w11 = t.omega(1, 1);
    return t.omega(1, 5) + w11 * t.omega(1, 3) + pow3(w11) / 3;
}

Rational hankel2(const CoefficientVector& a) { return a.a(2) * a.a(4) - a.a(3) * a.a(3); }

Rational hankel2_omega(const GrunskyTable& t) {
    const Rational w11 = t.omega(1, 1), w13 = t.omega(1, 3), w15 = t.omega(1, 5);
    return 4 * w11 * w15 - 4 * w13 * w13 - w11 * w11 * w11 * w11;
}

Rational hankel3(const CoefficientVector& a) {
    return a.a(3) * (a.a(2) * a.a(4) - a.a(3) * a.a(3)) - a.a(4) * (a.a(4) - a.a(2) * a.a(3)) +
           a.a(5) * (a.a(3) - a.a(2) * a.a(2));
}

Rational hankel3_omega(const GrunskyTable& t) {
    const Rational w11 = t.omega(1, 1), w13 = t.omega(1, 3);
    const Rational w33 = t.omega(3, 3), w35 = t.omega(3, 5);
    const Rational first = (2 * w13 - w11 * w11) * (2 * w35 + w13 * w13 - 2 * w11 * w11 * w13);
    const Rational second = 2 * w33 - Rational(2, 3) * pow3(w11);
    return first - second * second;
}

Rational zalcman23(const CoefficientVector& a) { return a.a(2) * a.a(3) - a.a(4); }

Rational zalcman23_omega(const GrunskyTable& t) {
    const Rational w11 = t.omega(1, 1);
    return 2 * t.omega(1, 5) + 2 * w11 * t.omega(1, 3) - 2 * pow3(w11);
}

Rational diff43(const CoefficientVector& a) { return abs_r(a.a(4)) - abs_r(a.a(3)); }

bool FunctionalReport::agrees() const {
    if (compare_abs) return abs_r(direct) == abs_r(via_omega);
    return direct == via_omega;
}

std::vector<FunctionalReport> functional_reports(const TruncatedSeries& f) {
    const CoefficientVector a(f);
    const GrunskyTable t = compute_odd_grunsky(f, 8);
    const Rational g3 = log_coefficients(f, 3).at(3);
    std::vector<FunctionalReport> out;
    out.push_back({"gamma3", g3, gamma3_omega(t), false});
    out.push_back({"gamma3_alt", g3, gamma3_omega_alt(t), false});
    out.push_back({"hankel2", hankel2(a), hankel2_omega(t), false});
    out.push_back({"hankel3", hankel3(a), hankel3_omega(t), false});
    out.push_back({"zalcman23", zalcman23(a), zalcman23_omega(t), true});
    return out;
}

}  // namespace grunsky
