#include "grunsky/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "grunsky/errors.hpp"

namespace grunsky {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

const Rational& TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > order()) throw MissingEntry("series coefficient " + std::to_string(n) + " out of range");
    return coeffs_[static_cast<std::size_t>(n)];
}

Rational TruncatedSeries::coeff_or_zero(int n) const {
    if (n < 0 || n > order()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set_coeff(int n, Rational value) {
    if (n < 0 || n > order()) throw MissingEntry("series coefficient " + std::to_string(n) + " out of range");
    coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

bool TruncatedSeries::is_normalized() const {
    return order() >= 1 && coeffs_[0] == 0 && coeffs_[1] == 1;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    TruncatedSeries out(order);
    const int n = std::min(order, this->order());
    for (int i = 0; i <= n; ++i) out.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

TruncatedSeries ps_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) out.set_coeff(i, a.coeff(i) + b.coeff(i));
    return out;
}

TruncatedSeries ps_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) out.set_coeff(i, a.coeff(i) - b.coeff(i));
    return out;
}

TruncatedSeries ps_scale(const Rational& c, const TruncatedSeries& a) {
    TruncatedSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.set_coeff(i, c * a.coeff(i));
    return out;
}

TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff_or_zero(j) == 0) continue;
            out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

TruncatedSeries ps_div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.coeff(0) == 0) throw ZeroConstantTerm();
    const int n = std::min(a.order(), b.order());
    TruncatedSeries q(n);
    for (int k = 0; k <= n; ++k) {
        Rational acc = a.coeff_or_zero(k);
        for (int j = 0; j < k; ++j) {
            if (q.coeff(j) == 0) continue;
            acc -= q.coeff(j) * b.coeff_or_zero(k - j);
        }
        q.set_coeff(k, acc / b.coeff(0));
    }
    return q;
}

TruncatedSeries ps_log1(const TruncatedSeries& a) {
    if (a.coeff(0) != 1) throw ConstantTermNotOne("ps_log1");
    const int n = a.order();
    TruncatedSeries log_out(n);
    if (n == 0) return log_out;
    // L' = a'/a, both truncated at degree n-1.
    TruncatedSeries deriv(n - 1);
    for (int k = 1; k <= n; ++k) deriv.set_coeff(k - 1, Rational(k) * a.coeff(k));
    const TruncatedSeries q = ps_div(deriv, a.truncated(n - 1));
    for (int k = 1; k <= n; ++k) log_out.set_coeff(k, q.coeff(k - 1) / Rational(k));
    return log_out;
}

TruncatedSeries ps_sqrt1(const TruncatedSeries& a) {
    if (a.coeff(0) != 1) throw ConstantTermNotOne("ps_sqrt1");
    const int n = a.order();
    TruncatedSeries s(n);
    s.set_coeff(0, Rational(1));
    for (int k = 1; k <= n; ++k) {
        Rational acc = a.coeff(k);
        for (int i = 1; i < k; ++i) acc -= s.coeff(i) * s.coeff(k - i);
        s.set_coeff(k, acc / Rational(2));
    }
    return s;
}

TruncatedSeries sqrt_transform(const TruncatedSeries& f) {
    if (!f.is_normalized()) throw NotNormalized();
    const int n = f.order();
    // f(w)/w = 1 + a2 w + ..., exact to degree n-1.
    TruncatedSeries g(n - 1);
    for (int k = 0; k <= n - 1; ++k) g.set_coeff(k, f.coeff(k + 1));
    const TruncatedSeries root = ps_sqrt1(g);
    // sqrt(f(z^2)) = z * root(z^2).
    TruncatedSeries out(2 * n);
    for (int k = 0; k <= root.order(); ++k) out.set_coeff(2 * k + 1, root.coeff(k));
    return out;
}

BivariateSeries::BivariateSeries(int cap) : cap_(cap) {
    if (cap < 0) throw std::invalid_argument("bivariate cap must be >= 0");
    const std::size_t size = static_cast<std::size_t>(cap + 1) * static_cast<std::size_t>(cap + 2) / 2;
    coeffs_.assign(size, Rational(0));
}

std::size_t BivariateSeries::index(int p, int q) const {
    const int s = p + q;
    return static_cast<std::size_t>(s) * static_cast<std::size_t>(s + 1) / 2 + static_cast<std::size_t>(q);
}

const Rational& BivariateSeries::at(int p, int q) const {
    if (p < 0 || q < 0 || p + q > cap_)
        throw MissingEntry("bivariate entry (" + std::to_string(p) + "," + std::to_string(q) + ") out of range");
    return coeffs_[index(p, q)];
}

void BivariateSeries::set(int p, int q, Rational value) {
    if (p < 0 || q < 0 || p + q > cap_)
        throw MissingEntry("bivariate entry (" + std::to_string(p) + "," + std::to_string(q) + ") out of range");
    coeffs_[index(p, q)] = std::move(value);
}

bool BivariateSeries::is_symmetric() const {
    for (int p = 0; p <= cap_; ++p)
        for (int q = p; p + q <= cap_; ++q)
            if (at(p, q) != at(q, p)) return false;
    return true;
}

BivariateSeries biv_mul(const BivariateSeries& a, const BivariateSeries& b) {
    const int cap = std::min(a.cap(), b.cap());
    BivariateSeries out(cap);
    for (int p = 0; p <= cap; ++p) {
        for (int q = 0; p + q <= cap; ++q) {
            const Rational& av = a.at(p, q);
            if (av == 0) continue;
            for (int r = 0; p + q + r <= cap; ++r) {
                for (int s = 0; p + q + r + s <= cap; ++s) {
                    const Rational& bv = b.at(r, s);
                    if (bv == 0) continue;
                    out.set(p + r, q + s, out.at(p + r, q + s) + av * bv);
                }
            }
        }
    }
    return out;
}

BivariateSeries biv_log1(const BivariateSeries& a) {
    if (a.at(0, 0) != 1) throw ConstantTermNotOne("biv_log1");
    const int cap = a.cap();
    BivariateSeries u = a;
    u.set(0, 0, Rational(0));
    // log(1+u) = sum_{k>=1} (-1)^{k+1} u^k / k; u has no constant term so
    // u^k only reaches total degree >= k and the sum stops at k = cap.
    BivariateSeries acc(cap);
    BivariateSeries power = u;
    for (int k = 1; k <= cap; ++k) {
        const Rational factor = Rational((k % 2 == 1) ? 1 : -1, k);
        for (int p = 0; p <= cap; ++p)
            for (int q = 0; p + q <= cap; ++q)
                if (power.at(p, q) != 0) acc.set(p, q, acc.at(p, q) + factor * power.at(p, q));
        if (k < cap) power = biv_mul(power, u);
    }
    return acc;
}

BivariateSeries difference_quotient_log(const TruncatedSeries& f, int cap) {
    if (!f.is_normalized()) throw NotNormalized();
    if (cap > f.order() - 1) throw CapTooLarge(cap, f.order() - 1);
    BivariateSeries quotient(cap);
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; p + q <= cap; ++q) quotient.set(p, q, f.coeff(p + q + 1));
    return biv_log1(quotient);
}

}  // namespace grunsky
