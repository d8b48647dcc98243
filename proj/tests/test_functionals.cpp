#include <doctest.h>

#include <random>

#include "grunsky/errors.hpp"
#include "grunsky/functionals.hpp"
#include "support/series_oracles.hpp"

using namespace grunsky;
using grunsky::testing::random_series;

namespace {

Rational q(int n, int d = 1) { return Rational(n, d); }

Rational abs_r(const Rational& v) { return v < 0 ? Rational(-v) : v; }

}  // namespace

TEST_CASE("logarithmic coefficients of the catalogue") {
    const auto koebe = log_coefficients(catalogue_series(Catalogue::koebe, 10), 8);
    for (int n = 1; n <= 8; ++n) CHECK(koebe.at(n) == q(1, n));

    const auto id = log_coefficients(catalogue_series(Catalogue::identity, 10), 8);
    for (int n = 1; n <= 8; ++n) CHECK(id.at(n) == 0);

    // log(z/(1-z)/z) = -log(1-z), so gamma_n = 1/(2n)
    const auto geo = log_coefficients(catalogue_series(Catalogue::geometric, 10), 8);
    for (int n = 1; n <= 8; ++n) CHECK(geo.at(n) == q(1, 2 * n));
    CHECK(geo.at(3) == q(1, 6));

    CHECK_THROWS_AS(log_coefficients(catalogue_series(Catalogue::koebe, 3), 3), OrderTooSmall);
}

TEST_CASE("gamma3 closed form matches the log series") {
    std::mt19937 rng(1123);
    for (int trial = 0; trial < 15; ++trial) {
        const auto f = random_series(rng, 10, true);
        const CoefficientVector a(f);
        CHECK(gamma3_direct(a) == log_coefficients(f, 3).at(3));
    }
}

TEST_CASE("gamma3 omega forms") {
    const auto koebe = compute_odd_grunsky(catalogue_series(Catalogue::koebe, 10));
    CHECK(gamma3_omega(koebe) == q(1, 3));
    CHECK(gamma3_omega_alt(koebe) == q(1, 3));

    const auto id = compute_odd_grunsky(catalogue_series(Catalogue::identity, 10));
    CHECK(gamma3_omega(id) == 0);

    const auto geo = compute_odd_grunsky(catalogue_series(Catalogue::geometric, 10));
    CHECK(gamma3_omega(geo) == q(1, 6));
    CHECK(gamma3_omega_alt(geo) == q(1, 6));
}

TEST_CASE("Hankel determinants, both routes") {
    const auto koebe_f = catalogue_series(Catalogue::koebe, 10);
    const CoefficientVector ka(koebe_f);
    const auto kt = compute_odd_grunsky(koebe_f);
    CHECK(hankel2(ka) == q(-1));  // 2*4 - 9
    CHECK(hankel2_omega(kt) == q(-1));
    CHECK(hankel3(ka) == 0);  // 3*(-1) - 4*(4-6) + 5*(3-4)
    CHECK(hankel3_omega(kt) == 0);

    const auto id_f = catalogue_series(Catalogue::identity, 10);
    CHECK(hankel2(CoefficientVector(id_f)) == 0);
    CHECK(hankel3(CoefficientVector(id_f)) == 0);
}

TEST_CASE("Zalcman functional and coefficient difference") {
    const CoefficientVector ka(catalogue_series(Catalogue::koebe, 10));
    CHECK(zalcman23(ka) == q(2));  // 2*3 - 4, the conjectured extremal value
    CHECK(diff43(ka) == q(1));

    const CoefficientVector ga(catalogue_series(Catalogue::geometric, 10));
    CHECK(zalcman23(ga) == 0);
    CHECK(diff43(ga) == 0);

    const CoefficientVector ia(catalogue_series(Catalogue::identity, 10));
    CHECK(zalcman23(ia) == 0);
    CHECK(diff43(ia) == 0);

    // the omega route flips the sign of the Zalcman functional
    const auto kt = compute_odd_grunsky(catalogue_series(Catalogue::koebe, 10));
    CHECK(zalcman23_omega(kt) == q(-2));
}

TEST_CASE("dual-route agreement on the catalogue and random slices") {
    std::mt19937 rng(555);
    auto check_function = [](const TruncatedSeries& f) {
        for (const auto& rep : functional_reports(f)) {
            CAPTURE(rep.name);
            CHECK(rep.agrees());
        }
    };
    for (Catalogue fn : {Catalogue::koebe, Catalogue::identity, Catalogue::geometric})
        check_function(catalogue_series(fn, 10));
    for (int trial = 0; trial < 10; ++trial) check_function(random_series(rng, 10, true));
}

TEST_CASE("catalogue satisfies |a3 - a2^2| <= 1") {
    for (Catalogue fn : {Catalogue::koebe, Catalogue::identity, Catalogue::geometric}) {
        const CoefficientVector a(catalogue_series(fn, 10));
        CHECK(abs_r(a.a(3) - a.a(2) * a.a(2)) <= 1);
    }
}

TEST_CASE("theorem bounds dominate the catalogue values") {
    const CoefficientVector ka(catalogue_series(Catalogue::koebe, 10));
    CHECK(to_double(log_coefficients(catalogue_series(Catalogue::koebe, 10), 3).at(3)) < 0.5566178);
    CHECK(to_double(diff43(ka)) < 1.7518531);
    CHECK(to_double(abs_r(zalcman23(ka))) < 2.1006411);
    CHECK(to_double(abs_r(hankel2(ka))) < 1.3614356);
    CHECK(to_double(abs_r(hankel3(ka))) < 1.8305713);
}
