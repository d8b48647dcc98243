#pragma once

// Test-only oracles, kept independent of the library's implementation paths.

#include <random>
#include <vector>

#include "grunsky/rational.hpp"
#include "grunsky/series.hpp"

namespace grunsky::testing {

/// exp(L) for L(0) = 0 via the ODE recurrence E' = L'E:
/// E[0] = 1, n*E[n] = sum_{k=1..n} k*L[k]*E[n-k].
inline TruncatedSeries exp_by_ode(const TruncatedSeries& l) {
    const int n = l.order();
    TruncatedSeries e(n);
    e.set_coeff(0, Rational(1));
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int k = 1; k <= m; ++k) acc += Rational(k) * l.coeff(k) * e.coeff(m - k);
        e.set_coeff(m, acc / Rational(m));
    }
    return e;
}

/// log(a) by direct composition of the log(1+u) expansion with u = a - 1,
/// powers of u computed by schoolbook convolution.
inline TruncatedSeries log_by_composition(const TruncatedSeries& a) {
    const int n = a.order();
    TruncatedSeries u = a;
    u.set_coeff(0, Rational(0));
    TruncatedSeries acc(n);
    TruncatedSeries power = u;
    for (int k = 1; k <= n; ++k) {
        const Rational factor = Rational((k % 2 == 1) ? 1 : -1, k);
        acc = ps_add(acc, ps_scale(factor, power));
        if (k < n) power = ps_mul(power, u);
    }
    return acc;
}

/// Random series with small rational coefficients; deterministic for a seed.
inline TruncatedSeries random_series(std::mt19937& rng, int order, bool normalized) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    TruncatedSeries s(order);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, Rational(num(rng), den(rng)));
    if (normalized) {
        s.set_coeff(0, Rational(0));
        s.set_coeff(1, Rational(1));
    }
    return s;
}

}  // namespace grunsky::testing
