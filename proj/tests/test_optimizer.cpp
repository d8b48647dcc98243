#include <doctest.h>

#include <cmath>
#include <random>

#include "grunsky/bound_function.hpp"
#include "grunsky/optimizer.hpp"

using namespace grunsky;

namespace {

// Reference maxima, computed independently at 50-digit precision by
// root-solving the stationarity conditions of each restriction.
constexpr double kF1Value = 0.55661781274855955;
constexpr double kF1X = 0.81267096859787876;
constexpr double kF1Y = 0.24353202442036857;
constexpr double kF2Value = 1.7518531042388669;
constexpr double kF2X = 0.83634305825132346;
constexpr double kF2Y = 0.28720632806140599;
constexpr double kF3Value = 2.1006411251684951;
constexpr double kF3X = 0.97400856121617986;
constexpr double kF4Value = 1.3614356236071319;
constexpr double kF4X = 0.91810737913366050;
constexpr double kPhi1Value = 0.97723797906663531;
constexpr double kPhi1X = 0.81323183504711636;
constexpr double kPhi2Value = 0.46188021535170061;  // 4/(5*sqrt(3))
constexpr double kF1CurveValue = 0.46950427408499365;
constexpr double kF1CurveX = 0.89834414606521988;
constexpr double kF2CurveValue = 1.6496140247932975;
constexpr double kF2CurveX = 0.86280816218394439;
constexpr double kF2Y0Value = 1.1366638132205880;
constexpr double kH31Total = 1.8305713123999686;

}  // namespace

TEST_CASE("analytic gradients match central finite differences") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> ux(0.05, 0.95);
    std::uniform_real_distribution<double> uy(0.05 * Region::y_max(), 0.95 * Region::y_max());
    const double h = 1e-6;
    for (Objective id : kAllObjectives) {
        const BoundFunction fn(id);
        int tested = 0;
        while (tested < 100) {
            const double x = ux(rng), y = uy(rng);
            if (x * x + 3 * y * y > 0.95) continue;
            ++tested;
            const auto g = fn.gradient(x, y);
            const double fdx = (fn.value(x + h, y) - fn.value(x - h, y)) / (2 * h);
            const double fdy = (fn.value(x, y + h) - fn.value(x, y - h)) / (2 * h);
            CAPTURE(fn.name());
            CAPTURE(x);
            CAPTURE(y);
            CHECK(std::abs(g[0] - fdx) <= 1e-6 * std::max(1.0, std::abs(g[0])));
            CHECK(std::abs(g[1] - fdy) <= 1e-6 * std::max(1.0, std::abs(g[1])));
        }
    }
}

TEST_CASE("interior critical points of f1, f2, phi2, f4") {
    auto points = interior_critical_points(BoundFunction(Objective::f1), 1e-10);
    REQUIRE(points.size() == 1);
    CHECK(points[0].x == doctest::Approx(kF1X).epsilon(1e-9));
    CHECK(points[0].y == doctest::Approx(kF1Y).epsilon(1e-9));
    CHECK(points[0].value == doctest::Approx(kF1Value).epsilon(1e-12));

    points = interior_critical_points(BoundFunction(Objective::f2), 1e-10);
    REQUIRE(points.size() == 1);
    CHECK(points[0].x == doctest::Approx(kF2X).epsilon(1e-9));
    CHECK(points[0].y == doctest::Approx(kF2Y).epsilon(1e-9));
    CHECK(points[0].value == doctest::Approx(kF2Value).epsilon(1e-12));

    points = interior_critical_points(BoundFunction(Objective::phi2), 1e-10);
    REQUIRE(points.size() == 1);
    CHECK(points[0].x == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-9));
    CHECK(points[0].y == doctest::Approx(1.0 / std::sqrt(15.0)).epsilon(1e-9));
    CHECK(points[0].value == doctest::Approx(kPhi2Value).epsilon(1e-12));

    points = interior_critical_points(BoundFunction(Objective::f4), 1e-10);
    REQUIRE(points.size() == 1);
    CHECK(points[0].x == doctest::Approx(std::sqrt(11.0 / 30.0)).epsilon(1e-9));
    CHECK(points[0].y == doctest::Approx(std::sqrt(281.0 / 1800.0)).epsilon(1e-9));
    CHECK(points[0].value == doctest::Approx(1079.0 / 900.0).epsilon(1e-9));
}

TEST_CASE("f3 and phi1 have no interior critical points") {
    CHECK(interior_critical_points(BoundFunction(Objective::f3), 1e-10).empty());
    CHECK(interior_critical_points(BoundFunction(Objective::phi1), 1e-10).empty());
}

TEST_CASE("boundary maxima") {
    const auto f4_y0 = boundary_max(BoundFunction(Objective::f4), Edge::y0, 1e-10);
    CHECK(f4_y0.value == doctest::Approx(kF4Value).epsilon(1e-10));
    CHECK(f4_y0.x == doctest::Approx(kF4X).epsilon(1e-7));
    CHECK(f4_y0.location == Location::edge_y0);

    const auto f3_y0 = boundary_max(BoundFunction(Objective::f3), Edge::y0, 1e-10);
    CHECK(f3_y0.value == doctest::Approx(kF3Value).epsilon(1e-10));
    CHECK(f3_y0.x == doctest::Approx(kF3X).epsilon(1e-7));

    const auto phi1_curve = boundary_max(BoundFunction(Objective::phi1), Edge::curve, 1e-10);
    CHECK(phi1_curve.value == doctest::Approx(kPhi1Value).epsilon(1e-10));
    CHECK(phi1_curve.x == doctest::Approx(kPhi1X).epsilon(1e-7));
    CHECK(phi1_curve.location == Location::edge_curve);

    const auto f1_x1 = boundary_max(BoundFunction(Objective::f1), Edge::x1, 1e-10);
    CHECK(f1_x1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(f1_x1.x == 1.0);
    CHECK(f1_x1.y == 0.0);

    const auto f2_curve = boundary_max(BoundFunction(Objective::f2), Edge::curve, 1e-10);
    CHECK(f2_curve.value == doctest::Approx(kF2CurveValue).epsilon(1e-10));
    CHECK(f2_curve.x == doctest::Approx(kF2CurveX).epsilon(1e-7));

    const auto f2_y0 = boundary_max(BoundFunction(Objective::f2), Edge::y0, 1e-10);
    CHECK(f2_y0.value == doctest::Approx(kF2Y0Value).epsilon(1e-10));

    // phi1 on the x = 0 segment peaks at y = sqrt(2/15) with value 8/15
    const auto phi1_x0 = boundary_max(BoundFunction(Objective::phi1), Edge::x0, 1e-10);
    CHECK(phi1_x0.value == doctest::Approx(8.0 / 15.0).epsilon(1e-12));
    CHECK(phi1_x0.y == doctest::Approx(std::sqrt(2.0 / 15.0)).epsilon(1e-7));

    // f1 on y = 0 peaks at the left endpoint
    const auto f1_y0 = boundary_max(BoundFunction(Objective::f1), Edge::y0, 1e-10);
    CHECK(f1_y0.value == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-9));
    CHECK(f1_y0.x <= 1e-3);
}

TEST_CASE("the f1 curve restriction exceeds 1/sqrt(5)") {
    // The arc restriction x^3/3 + x*sqrt(1-x^2)/sqrt(3) tops out near
    // x = 0.8983 at about 0.46950, strictly above 1/sqrt(5) = 0.44721.
    const auto r = boundary_max(BoundFunction(Objective::f1), Edge::curve, 1e-10);
    CHECK(r.value > 1.0 / std::sqrt(5.0));
    CHECK(r.value == doctest::Approx(kF1CurveValue).epsilon(1e-10));
    CHECK(r.x == doctest::Approx(kF1CurveX).epsilon(1e-7));
}

TEST_CASE("global maxima with location tags") {
    const auto f1 = global_max(BoundFunction(Objective::f1), 1e-10);
    CHECK(f1.value == doctest::Approx(kF1Value).epsilon(1e-12));
    CHECK(f1.location == Location::interior);

    const auto f2 = global_max(BoundFunction(Objective::f2), 1e-10);
    CHECK(f2.value == doctest::Approx(kF2Value).epsilon(1e-12));
    CHECK(f2.location == Location::interior);

    const auto f3 = global_max(BoundFunction(Objective::f3), 1e-10);
    CHECK(f3.value == doctest::Approx(kF3Value).epsilon(1e-12));
    CHECK(f3.location == Location::edge_y0);

    const auto f4 = global_max(BoundFunction(Objective::f4), 1e-10);
    CHECK(f4.value == doctest::Approx(kF4Value).epsilon(1e-12));
    CHECK(f4.location == Location::edge_y0);

    const auto phi1 = global_max(BoundFunction(Objective::phi1), 1e-10);
    CHECK(phi1.value == doctest::Approx(kPhi1Value).epsilon(1e-12));
    CHECK(phi1.location == Location::edge_curve);

    const auto phi2 = global_max(BoundFunction(Objective::phi2), 1e-10);
    CHECK(phi2.value == doctest::Approx(kPhi2Value).epsilon(1e-12));
    CHECK(phi2.location == Location::interior);

    // every argmax lies in E
    for (Objective id : kAllObjectives) {
        const auto r = global_max(BoundFunction(id), 1e-10);
        CHECK(Region::contains(r.x, r.y, 1e-12));
    }
}

TEST_CASE("grid oracle") {
    // 2x2 grid: corner (1, 1/sqrt(3)) projects onto (1, 0)
    const BoundFunction f4(Objective::f4);
    const double coarse = grid_oracle(f4, 2, 2);
    CHECK(coarse == doctest::Approx(4.0 / 3.0).epsilon(1e-12));  // f4(0, 1/sqrt(3))
    CHECK(coarse <= global_max(f4, 1e-10).value);

    const BoundFunction phi2(Objective::phi2);
    CHECK(grid_oracle(phi2, 2, 2) == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));

    // denser grids stay below the global maximum but approach it
    for (Objective id : kAllObjectives) {
        const BoundFunction fn(id);
        const auto best = global_max(fn, 1e-10);
        const double oracle = grid_oracle(fn, 801, 801);
        CAPTURE(fn.name());
        CHECK(oracle <= best.value + 1e-12);
        CHECK(best.value - oracle <= 1e-3);
    }

    CHECK_THROWS_AS(grid_oracle(f4, 1, 2), std::invalid_argument);
}

TEST_CASE("h31 bound composition") {
    const auto h = theorem_h31_bound(1e-10);
    CHECK(h.b1.value == doctest::Approx(kPhi1Value).epsilon(1e-12));
    CHECK(h.b1.location == Location::edge_curve);
    CHECK(h.b2 == doctest::Approx(64.0 / 75.0).epsilon(1e-12));
    CHECK(h.total == doctest::Approx(kH31Total).epsilon(1e-12));
    CHECK(h.phi2_max.value == doctest::Approx(kPhi2Value).epsilon(1e-12));
}

TEST_CASE("optimizer determinism") {
    for (Objective id : {Objective::f1, Objective::f4, Objective::phi1}) {
        const BoundFunction fn(id);
        const auto a = global_max(fn, 1e-10);
        const auto b = global_max(fn, 1e-10);
        CHECK(a.value == b.value);
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
    }
}
