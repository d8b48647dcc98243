#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grunsky/rational.hpp"
#include "grunsky/series.hpp"

namespace grunsky {

enum class TableParity { full, odd };

/// Symmetric table of Grunsky coefficients omega(p, q), p, q >= 1,
/// p + q <= cap, extracted from the bivariate log expansion of a
/// difference quotient. An odd-parity table exposes only entries with
/// both indices odd; entries with any even index read as zero.
class GrunskyTable {
public:
    GrunskyTable(BivariateSeries log_table, std::string source, TableParity parity);

    int cap() const { return log_.cap(); }
    const std::string& source() const { return source_; }
    TableParity parity() const { return parity_; }

    /// Throws MissingEntry for p < 1, q < 1 or p + q > cap.
    Rational omega(int p, int q) const;

    /// Full log expansion including index-0 rows.
    const BivariateSeries& raw() const { return log_; }

private:
    BivariateSeries log_;
    std::string source_;
    std::string parity_note_;
    TableParity parity_;
};

/// Coefficients a_n of a normalized series, a_0 = 0 and a_1 = 1.
/// Throws NotNormalized on construction otherwise.
class CoefficientVector {
public:
    explicit CoefficientVector(const TruncatedSeries& f);
    explicit CoefficientVector(std::vector<Rational> a);

    int max_index() const { return static_cast<int>(a_.size()) - 1; }
    /// Throws MissingEntry beyond max_index().
    const Rational& a(int n) const;

private:
    std::vector<Rational> a_;
};

/// Real weights x_1, x_3, x_5, ... of the odd quadratic form; x(i) is the
/// weight attached to index 2i+1.
struct QuadraticFormWeights {
    std::vector<double> x;

    int count() const { return static_cast<int>(x.size()); }
    double weight(int i) const { return x[static_cast<std::size_t>(i)]; }
};

/// Odd-index Grunsky table of sqrt(f(z^2)) for a normalized f; requires
/// cap >= 8 so that omega(3,5) is present.
GrunskyTable compute_odd_grunsky(const TruncatedSeries& f, int cap = 8, std::string source = "");

/// The five identities tying a_2..a_5 to the odd Grunsky coefficients,
/// evaluated as exact residuals (all zero for every normalized series).
struct LebedevReport {
    static constexpr std::array<std::string_view, 5> kNames = {"a2", "a3", "a4", "a5", "constraint"};
    std::array<Rational, 5> residual;

    bool all_zero() const;
};

/// Requires f normalized with order >= 10.
LebedevReport verify_lebedev_identities(const TruncatedSeries& f);

/// omega(1,5) - omega(1,1)*omega(1,3) + omega(1,1)^3 / 3; equals the stored
/// omega(3,3) for every table produced by compute_odd_grunsky.
Rational omega33_substitution(const GrunskyTable& table);

/// Right side minus truncated left side of the odd Grunsky form
///   sum_{q<=qmax} (2q-1) |sum_p omega(2p-1,2q-1) x_{2p-1}|^2
///     <= sum_p x_{2p-1}^2 / (2p-1),
/// evaluated in binary64 from the exact table. Nonnegative (within roundoff)
/// whenever the generating function is univalent, since truncating the outer
/// sum only shrinks the left side.
double grunsky_form_slack(const GrunskyTable& table, const QuadraticFormWeights& w, int qmax);

/// Built-in test functions with known exact coefficients.
enum class Catalogue { koebe, identity, geometric };

TruncatedSeries catalogue_series(Catalogue fn, int order);
std::string_view catalogue_name(Catalogue fn);
std::optional<Catalogue> catalogue_from_name(std::string_view name);

/// A named input series; `univalence_verified` is false for user-supplied
/// coefficient lists (univalence is assumed, never decided here).
struct SeriesInput {
    TruncatedSeries f;
    std::string tag;
    bool univalence_verified;
};

SeriesInput catalogue_input(Catalogue fn, int order);
SeriesInput custom_input(std::vector<Rational> coeffs, int order);

}  // namespace grunsky
