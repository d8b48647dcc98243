#pragma once

#include <string>
#include <vector>

#include "grunsky/grunsky_table.hpp"
#include "grunsky/rational.hpp"
#include "grunsky/series.hpp"

namespace grunsky {

/// Logarithmic coefficients gamma_n: log(f(z)/z) = 2 * sum gamma_n z^n.
struct LogCoefficients {
    std::vector<Rational> gamma;  // gamma[0] unused, gamma[n] for n >= 1

    const Rational& at(int n) const;
};

/// gamma_1..gamma_n, exact. Requires f normalized with order >= n + 1
/// (gamma_n depends on a_{n+1}); throws OrderTooSmall otherwise.
LogCoefficients log_coefficients(const TruncatedSeries& f, int n);

/// gamma_3 = (a4 - a2*a3 + a2^3/3) / 2.
Rational gamma3_direct(const CoefficientVector& a);
/// gamma_3 = omega33 + 2*omega11*omega13.
Rational gamma3_omega(const GrunskyTable& table);
/// gamma_3 = omega15 + omega11*omega13 + omega11^3/3 (equivalent form).
Rational gamma3_omega_alt(const GrunskyTable& table);

/// H2(2) = a2*a4 - a3^2.
Rational hankel2(const CoefficientVector& a);
/// H2(2) = 4*omega11*omega15 - 4*omega13^2 - omega11^4.
Rational hankel2_omega(const GrunskyTable& table);

/// H3(1) = a3*(a2*a4 - a3^2) - a4*(a4 - a2*a3) + a5*(a3 - a2^2).
Rational hankel3(const CoefficientVector& a);
/// H3(1) = (2w13 - w11^2)(2w35 + w13^2 - 2w11^2 w13) - (2w33 - (2/3)w11^3)^2.
Rational hankel3_omega(const GrunskyTable& table);

/// a2*a3 - a4.
Rational zalcman23(const CoefficientVector& a);
/// 2*omega15 + 2*omega11*omega13 - 2*omega11^3; equals -(a2*a3 - a4), so the
/// two routes agree in absolute value.
Rational zalcman23_omega(const GrunskyTable& table);

/// |a4| - |a3|.
Rational diff43(const CoefficientVector& a);

/// One functional computed along both routes. For `compare_abs` entries the
/// two routes agree up to sign, so agreement is |direct| == |via_omega|.
struct FunctionalReport {
    std::string name;
    Rational direct;
    Rational via_omega;
    bool compare_abs = false;

    bool agrees() const;
};

/// All dual-route checks for one function: gamma3 (both omega forms),
/// H2(2), H3(1) and the Zalcman case. Requires order >= 10.
std::vector<FunctionalReport> functional_reports(const TruncatedSeries& f);

}  // namespace grunsky
