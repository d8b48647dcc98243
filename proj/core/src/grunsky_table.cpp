#include "grunsky/grunsky_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "grunsky/errors.hpp"

namespace grunsky {

GrunskyTable::GrunskyTable(BivariateSeries log_table, std::string source, TableParity parity)
    : log_(std::move(log_table)), source_(std::move(source)), parity_(parity) {}

Rational GrunskyTable::omega(int p, int q) const {
    if (p < 1 || q < 1 || p + q > cap())
        throw MissingEntry("omega(" + std::to_string(p) + "," + std::to_string(q) + ") not stored (cap " +
                           std::to_string(cap()) + ")");
    if (parity_ == TableParity::odd && (p % 2 == 0 || q % 2 == 0)) return Rational(0);
    return log_.at(p, q);
}

CoefficientVector::CoefficientVector(const TruncatedSeries& f) {
    if (!f.is_normalized()) throw NotNormalized();
    a_.assign(f.coeffs().begin(), f.coeffs().end());
}

CoefficientVector::CoefficientVector(std::vector<Rational> a) : a_(std::move(a)) {
    if (a_.size() < 2 || a_[0] != 0 || a_[1] != 1) throw NotNormalized();
}

const Rational& CoefficientVector::a(int n) const {
    if (n < 0 || n > max_index())
        throw MissingEntry("coefficient a_" + std::to_string(n) + " not available");
    return a_[static_cast<std::size_t>(n)];
}

GrunskyTable compute_odd_grunsky(const TruncatedSeries& f, int cap, std::string source) {
    if (cap < 8) throw std::invalid_argument("odd Grunsky table needs cap >= 8 to reach omega(3,5)");
    const TruncatedSeries f2 = sqrt_transform(f);
    return GrunskyTable(difference_quotient_log(f2, cap), std::move(source), TableParity::odd);
}

bool LebedevReport::all_zero() const {
    for (const auto& r : residual)
        if (r != 0) return false;
    return true;
}

LebedevReport verify_lebedev_identities(const TruncatedSeries& f) {
    if (!f.is_normalized()) throw NotNormalized();
    if (f.order() < 10) throw OrderTooSmall(f.order(), 10);
    const GrunskyTable t = compute_odd_grunsky(f, 8);
    const Rational w11 = t.omega(1, 1), w13 = t.omega(1, 3), w15 = t.omega(1, 5);
    const Rational w33 = t.omega(3, 3), w35 = t.omega(3, 5);
    const CoefficientVector a(f);

    LebedevReport rep;
    rep.residual[0] = a.a(2) - 2 * w11;
    rep.residual[1] = a.a(3) - (2 * w13 + 3 * w11 * w11);
    rep.residual[2] = a.a(4) - (2 * w33 + 8 * w11 * w13 + Rational(10, 3) * w11 * w11 * w11);
    rep.residual[3] = a.a(5) - (2 * w35 + 8 * w11 * w33 + 5 * w13 * w13 + 18 * w11 * w11 * w13 +
                                Rational(7, 3) * w11 * w11 * w11 * w11);
    rep.residual[4] = 3 * w15 - 3 * w11 * w13 + w11 * w11 * w11 - 3 * w33;
    return rep;
}

Rational omega33_substitution(const GrunskyTable& table) {
    const Rational w11 = table.omega(1, 1);
    return table.omega(1, 5) - w11 * table.omega(1, 3) + w11 * w11 * w11 / 3;
}

double grunsky_form_slack(const GrunskyTable& table, const QuadraticFormWeights& w, int qmax) {
    if (qmax < 1) throw std::invalid_argument("qmax must be >= 1");
    double left = 0.0;
    for (int q = 1; q <= qmax; ++q) {
        double inner = 0.0;
        for (int p = 1; p <= w.count(); ++p)
            inner += to_double(table.omega(2 * p - 1, 2 * q - 1)) * w.weight(p - 1);
        left += (2 * q - 1) * inner * inner;
    }
    double right = 0.0;
    for (int p = 1; p <= w.count(); ++p) right += w.weight(p - 1) * w.weight(p - 1) / (2 * p - 1);
    return right - left;
}

TruncatedSeries catalogue_series(Catalogue fn, int order) {
    TruncatedSeries f(order);
    switch (fn) {
        case Catalogue::koebe:  // z/(1-z)^2
            for (int n = 1; n <= order; ++n) f.set_coeff(n, Rational(n));
            break;
        case Catalogue::identity:
            f.set_coeff(1, Rational(1));
            break;
        case Catalogue::geometric:  // z/(1-z)
            for (int n = 1; n <= order; ++n) f.set_coeff(n, Rational(1));
            break;
    }
    return f;
}

std::string_view catalogue_name(Catalogue fn) {
    switch (fn) {
        case Catalogue::koebe: return "koebe";
        case Catalogue::identity: return "identity";
        case Catalogue::geometric: return "geometric";
    }
    return "";
}

std::optional<Catalogue> catalogue_from_name(std::string_view name) {
    if (name == "koebe") return Catalogue::koebe;
    if (name == "identity") return Catalogue::identity;
    if (name == "geometric") return Catalogue::geometric;
    return std::nullopt;
}

SeriesInput catalogue_input(Catalogue fn, int order) {
    return SeriesInput{catalogue_series(fn, order), std::string(catalogue_name(fn)), true};
}

SeriesInput custom_input(std::vector<Rational> coeffs, int order) {
    TruncatedSeries f{std::move(coeffs)};
    if (!f.is_normalized()) throw NotNormalized();
    return SeriesInput{f.truncated(order), "custom", false};
}

}  // namespace grunsky
