#pragma once

#include <span>
#include <vector>

#include "grunsky/rational.hpp"

namespace grunsky {

/// Univariate formal power series with exact rational coefficients,
/// truncated at a fixed degree. coeff(n) multiplies z^n, 0 <= n <= order().
/// All operations are exact on every retained coefficient; terms beyond
/// the truncation degree are discarded.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(int order);
    /// order() == coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int n) const;
    /// Zero beyond the truncation degree.
    Rational coeff_or_zero(int n) const;
    void set_coeff(int n, Rational value);
    std::span<const Rational> coeffs() const { return coeffs_; }

    /// coeff(0) == 0 and coeff(1) == 1.
    bool is_normalized() const;
    /// Copy truncated (or zero-padded) to the given order.
    TruncatedSeries truncated(int order) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Rational> coeffs_;
};

/// Bivariate series c_{p,q} t^p z^q with exact rational coefficients stored
/// for all p + q <= cap (total-degree truncation).
class BivariateSeries {
public:
    explicit BivariateSeries(int cap);

    int cap() const { return cap_; }
    const Rational& at(int p, int q) const;
    void set(int p, int q, Rational value);

    bool is_symmetric() const;

    bool operator==(const BivariateSeries&) const = default;

private:
    std::size_t index(int p, int q) const;

    int cap_;
    std::vector<Rational> coeffs_;
};

TruncatedSeries ps_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_scale(const Rational& c, const TruncatedSeries& a);

/// Cauchy product truncated at min(a.order, b.order).
TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Quotient q with ps_mul(q, b) == a on all retained coefficients.
/// Throws ZeroConstantTerm when b.coeff(0) == 0.
TruncatedSeries ps_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// log(a) for a series with constant term 1, via L' = a'/a.
/// Throws ConstantTermNotOne.
TruncatedSeries ps_log1(const TruncatedSeries& a);

/// sqrt(a) for a series with constant term 1: s(0) = 1, ps_mul(s, s) == a.
/// Throws ConstantTermNotOne.
TruncatedSeries ps_sqrt1(const TruncatedSeries& a);

/// The odd square-root transform sqrt(f(z^2)) of a normalized series f.
/// Result has order 2*f.order(), vanishing even coefficients, coeff(1) == 1.
/// Throws NotNormalized.
TruncatedSeries sqrt_transform(const TruncatedSeries& f);

/// Bivariate product truncated by total degree.
BivariateSeries biv_mul(const BivariateSeries& a, const BivariateSeries& b);

/// Bivariate log of a table with constant entry 1, by composing the
/// univariate log(1+u) expansion with u = a - 1.
/// Throws ConstantTermNotOne.
BivariateSeries biv_log1(const BivariateSeries& a);

/// Expands log[(f(t) - f(z)) / (t - z)] through total degree `cap` for a
/// normalized series f. The inner quotient has entries c_{p,q} = a_{p+q+1},
/// so the result is exact and symmetric. Requires cap <= f.order() - 1
/// (CapTooLarge) and f normalized (NotNormalized).
BivariateSeries difference_quotient_log(const TruncatedSeries& f, int cap);

}  // namespace grunsky
