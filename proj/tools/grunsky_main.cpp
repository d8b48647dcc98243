#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "grunsky/errors.hpp"
#include "grunsky/functionals.hpp"
#include "grunsky/grunsky_table.hpp"
#include "grunsky/optimizer.hpp"
#include "grunsky/series.hpp"

namespace {

using namespace grunsky;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output path '" + path + "'");
    out << text;
    out.flush();
    if (!out) throw ConfigError("failed writing output path '" + path + "'");
}

std::vector<Rational> parse_coeff_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("bad coefficient list: ") + e.what());
        }
    }
    if (out.size() < 2 || out[0] != 0 || out[1] != 1)
        throw ConfigError("custom coefficient list must begin 0, 1");
    return out;
}

SeriesInput resolve_input(const std::string& fn, const std::string& coeffs, int order) {
    if (auto cat = catalogue_from_name(fn)) {
        if (!coeffs.empty()) throw ConfigError("--coeffs only applies to --fn custom");
        return catalogue_input(*cat, order);
    }
    if (fn == "custom") {
        if (coeffs.empty()) throw ConfigError("--fn custom requires --coeffs");
        return custom_input(parse_coeff_list(coeffs), order);
    }
    throw ConfigError("unknown function '" + fn + "' (koebe|identity|geometric|custom)");
}

void check_order(int order) {
    if (order < 5 || order > 64) throw ConfigError("order must lie in [5, 64]");
}

// ---------------------------------------------------------------------------
// series

struct SeriesOpts {
    std::string fn = "koebe";
    std::string coeffs;
    int order = 10;
    int cap = 8;
    std::string format = "text";
    std::string output;
};

int cmd_series(const SeriesOpts& o) {
    check_order(o.order);
    if (o.cap < 8 || o.cap > 2 * o.order - 1)
        throw ConfigError("cap must lie in [8, 2*order-1]");
    const SeriesInput input = resolve_input(o.fn, o.coeffs, o.order);
    if (!input.univalence_verified)
        std::cerr << "warning: univalence of the custom function is not verified\n";
    const TruncatedSeries f2 = sqrt_transform(input.f);
    const GrunskyTable table = compute_odd_grunsky(input.f, o.cap, input.tag);

    std::vector<std::pair<std::pair<int, int>, Rational>> omega;
    for (int p = 1; p <= o.cap; p += 2)
        for (int q = p; p + q <= o.cap; q += 2) omega.push_back({{p, q}, table.omega(p, q)});

    std::string out;
    if (o.format == "text") {
        out += "fn: " + input.tag + "\n";
        out += "order: " + std::to_string(o.order) + "\n";
        out += "univalence_verified: " + std::string(input.univalence_verified ? "true" : "false") + "\n";
        out += "f:";
        for (const auto& c : input.f.coeffs()) out += " " + to_string(c);
        out += "\nf2:";
        for (const auto& c : f2.coeffs()) out += " " + to_string(c);
        out += "\nomega (odd table, p <= q, p+q <= " + std::to_string(o.cap) + "):\n";
        for (const auto& [pq, v] : omega)
            out += "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ") " + to_string(v) + "\n";
    } else if (o.format == "json") {
        out += "{\"fn\":\"" + input.tag + "\",\"order\":" + std::to_string(o.order) +
               ",\"cap\":" + std::to_string(o.cap) +
               ",\"univalence_verified\":" + (input.univalence_verified ? "true" : "false") + ",\"f\":[";
        for (int n = 0; n <= input.f.order(); ++n)
            out += std::string(n ? "," : "") + "\"" + to_string(input.f.coeff(n)) + "\"";
        out += "],\"f2\":[";
        for (int n = 0; n <= f2.order(); ++n)
            out += std::string(n ? "," : "") + "\"" + to_string(f2.coeff(n)) + "\"";
        out += "],\"omega\":{";
        bool first = true;
        for (const auto& [pq, v] : omega) {
            if (!first) out += ",";
            first = false;
            out += "\"" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "\":\"" + to_string(v) + "\"";
        }
        out += "}}\n";
    } else if (o.format == "csv") {
        out += "p,q,omega\n";
        for (const auto& [pq, v] : omega)
            out += std::to_string(pq.first) + "," + std::to_string(pq.second) + "," + to_string(v) + "\n";
    } else {
        throw ConfigError("unknown format '" + o.format + "' (text|json|csv)");
    }
    write_output(out, o.output);
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
    std::string fn = "all";
    std::string coeffs;
    int order = 10;
    std::string format = "text";
    std::string output;
};

int cmd_verify(const VerifyOpts& o) {
    check_order(o.order);
    if (o.order < 10) throw ConfigError("verify needs order >= 10");
    std::vector<SeriesInput> inputs;
    if (o.fn == "all") {
        for (Catalogue c : {Catalogue::koebe, Catalogue::identity, Catalogue::geometric})
            inputs.push_back(catalogue_input(c, o.order));
    } else {
        inputs.push_back(resolve_input(o.fn, o.coeffs, o.order));
    }

    int identities = 0, zero_identities = 0, agreements = 0, exact_agreements = 0;
    std::string text, json = "{\"functions\":[";
    bool first_fn = true;
    for (const auto& input : inputs) {
        if (!input.univalence_verified)
            std::cerr << "warning: univalence of the custom function is not verified\n";
        const LebedevReport rep = verify_lebedev_identities(input.f);
        const auto reports = functional_reports(input.f);

        text += "fn: " + input.tag + " (order " + std::to_string(input.f.order()) + ")\n";
        text += "lebedev residuals:";
        for (std::size_t i = 0; i < rep.residual.size(); ++i) {
            text += " " + std::string(LebedevReport::kNames[i]) + "=" + to_string(rep.residual[i]);
            ++identities;
            if (rep.residual[i] == 0) ++zero_identities;
        }
        text += "\nagreements:\n";
        for (const auto& r : reports) {
            text += "  " + r.name + ": direct=" + to_string(r.direct) + " via_omega=" + to_string(r.via_omega) +
                    (r.agrees() ? " ok" : " MISMATCH") + (r.compare_abs ? " (absolute)" : "") + "\n";
            ++agreements;
            if (r.agrees()) ++exact_agreements;
        }

        if (!first_fn) json += ",";
        first_fn = false;
        json += "{\"fn\":\"" + input.tag + "\",\"univalence_verified\":" +
                (input.univalence_verified ? "true" : "false") + ",\"residuals\":{";
        for (std::size_t i = 0; i < rep.residual.size(); ++i)
            json += std::string(i ? "," : "") + "\"" + std::string(LebedevReport::kNames[i]) + "\":\"" +
                    to_string(rep.residual[i]) + "\"";
        json += "},\"agreements\":[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            json += std::string(i ? "," : "") + "{\"name\":\"" + r.name + "\",\"direct\":\"" + to_string(r.direct) +
                    "\",\"via_omega\":\"" + to_string(r.via_omega) + "\",\"agrees\":" +
                    (r.agrees() ? "true" : "false") + "}";
        }
        json += "]}";
    }
    const bool ok = zero_identities == identities && exact_agreements == agreements;
    text += "---\n" + std::to_string(identities) + " identities checked, " +
            (zero_identities == identities ? "all residuals zero" : "NONZERO RESIDUALS PRESENT") + "\n" +
            std::to_string(agreements) + " functional agreements checked, " +
            (exact_agreements == agreements ? "all exact" : "MISMATCHES PRESENT") + "\n";
    json += "],\"identities_checked\":" + std::to_string(identities) +
            ",\"all_zero\":" + (ok ? "true" : "false") + "}\n";

    if (o.format == "text")
        write_output(text, o.output);
    else if (o.format == "json")
        write_output(json, o.output);
    else
        throw ConfigError("unknown format '" + o.format + "' (text|json)");
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bound

struct BoundOpts {
    std::string target = "all";
    std::string method = "newton";
    double eps = 1e-6;
    std::string format = "text";
    std::string output;
};

std::uint64_t box_cap_from_env() {
    const char* env = std::getenv("GRUNSKY_BOX_CAP");
    if (!env) return kDefaultBoxCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw ConfigError("GRUNSKY_BOX_CAP must be a positive integer");
    return v;
}

Objective target_objective(const std::string& target) {
    if (target == "gamma3") return Objective::f1;
    if (target == "diff43") return Objective::f2;
    if (target == "zalcman23") return Objective::f3;
    if (target == "h22") return Objective::f4;
    throw ConfigError("unknown target '" + target + "' (gamma3|diff43|zalcman23|h22|h31|all)");
}

OptimizationResult run_method(const BoundFunction& fn, const std::string& method, double eps,
                              std::uint64_t cap) {
    if (method == "newton") return global_max(fn, 1e-10);
    if (method == "grid") return grid_max(fn, 2001, 2001);
    if (method == "certified") return certified_max(fn, eps, cap);
    throw ConfigError("unknown method '" + method + "' (newton|grid|certified)");
}

std::string result_json_fields(const OptimizationResult& r) {
    std::string out = "\"value\":" + fmt9(r.value) + ",\"argmax\":[" + fmt9(r.x) + "," + fmt9(r.y) +
                      "],\"edge\":\"" + std::string(location_name(r.location)) + "\"";
    if (r.enclosure)
        out += ",\"enclosure\":[" + fmt9(r.enclosure->first) + "," + fmt9(r.enclosure->second) + "]";
    else
        out += ",\"enclosure\":null";
    return out;
}

std::string result_text(const OptimizationResult& r) {
    std::string out = "value: " + fmt9(r.value) + "\nargmax: (" + fmt9(r.x) + ", " + fmt9(r.y) +
                      ")\nedge: " + std::string(location_name(r.location)) + "\n";
    if (r.enclosure)
        out += "enclosure: [" + fmt9(r.enclosure->first) + ", " + fmt9(r.enclosure->second) + "]\n";
    return out;
}

int cmd_bound(const BoundOpts& o) {
    if (o.eps <= 0) throw ConfigError("eps must be > 0");
    const std::uint64_t cap = box_cap_from_env();

    const auto run_h31 = [&](std::string& text, std::string& json) {
        const BoundFunction phi1_fn(Objective::phi1), phi2_fn(Objective::phi2);
        const OptimizationResult b1 = run_method(phi1_fn, o.method, o.eps, cap);
        const OptimizationResult p2 = run_method(phi2_fn, o.method, o.eps, cap);
        const double b2 = 4.0 * p2.value * p2.value;
        const double total = b1.value + b2;
        std::optional<std::pair<double, double>> enclosure;
        if (b1.enclosure && p2.enclosure)
            enclosure = std::make_pair(b1.enclosure->first + 4.0 * p2.enclosure->first * p2.enclosure->first,
                                       b1.enclosure->second + 4.0 * p2.enclosure->second * p2.enclosure->second);

        text += "target: h31\nmethod: " + o.method + "\n";
        text += "b1: " + fmt9(b1.value) + " at (" + fmt9(b1.x) + ", " + fmt9(b1.y) + ") on " +
                std::string(location_name(b1.location)) + "\n";
        text += "b2: " + fmt9(b2) + " = 4*phi2_max^2, phi2_max " + fmt9(p2.value) + " at (" + fmt9(p2.x) +
                ", " + fmt9(p2.y) + ")\n";
        text += "value: " + fmt9(total) + "\n";
        if (enclosure)
            text += "enclosure: [" + fmt9(enclosure->first) + ", " + fmt9(enclosure->second) + "]\n";
        text += "quoted: theorem 1.83056, introduction 2.321434 (introduction figure not reproduced)\n";

        json += "{\"target\":\"h31\",\"method\":\"" + o.method + "\",\"value\":" + fmt9(total) +
                ",\"b1\":" + fmt9(b1.value) + ",\"b1_argmax\":[" + fmt9(b1.x) + "," + fmt9(b1.y) +
                "],\"b1_edge\":\"" + std::string(location_name(b1.location)) + "\",\"b2\":" + fmt9(b2) +
                ",\"phi2_max\":" + fmt9(p2.value) + ",\"phi2_argmax\":[" + fmt9(p2.x) + "," + fmt9(p2.y) + "]";
        if (enclosure)
            json += ",\"enclosure\":[" + fmt9(enclosure->first) + "," + fmt9(enclosure->second) + "]";
        else
            json += ",\"enclosure\":null";
        json += ",\"quoted\":{\"theorem\":\"1.83056\",\"introduction\":\"2.321434\"}}";
    };

    std::string out;
    if (o.format != "json" && o.format != "text")
        throw ConfigError("unknown format '" + o.format + "' (text|json)");

    if (o.target == "all") {
        const std::array<std::string, 4> simple = {"gamma3", "diff43", "zalcman23", "h22"};
        std::string text = "target value x y edge\n", json = "{\"targets\":[";
        for (std::size_t i = 0; i < simple.size(); ++i) {
            const OptimizationResult r =
                run_method(BoundFunction(target_objective(simple[i])), o.method, o.eps, cap);
            text += simple[i] + " " + fmt9(r.value) + " " + fmt9(r.x) + " " + fmt9(r.y) + " " +
                    std::string(location_name(r.location)) + "\n";
            json += std::string(i ? "," : "") + "{\"target\":\"" + simple[i] + "\",\"method\":\"" + o.method +
                    "\"," + result_json_fields(r) + "}";
        }
        std::string h31_text, h31_json;
        run_h31(h31_text, h31_json);
        json += "," + h31_json + "]}\n";
        std::istringstream h31_lines(h31_text);
        std::string line, h31_value;
        while (std::getline(h31_lines, line))
            if (line.rfind("value: ", 0) == 0) h31_value = line.substr(7);
        text += "h31 " + h31_value + " - - composite\n" + h31_text;
        out = (o.format == "json") ? json : text;
    } else if (o.target == "h31") {
        std::string text, json;
        run_h31(text, json);
        out = (o.format == "json") ? json + "\n" : text;
    } else {
        const BoundFunction fn(target_objective(o.target));
        const OptimizationResult r = run_method(fn, o.method, o.eps, cap);
        if (o.format == "json")
            out = "{\"target\":\"" + o.target + "\",\"method\":\"" + o.method + "\"," +
                  result_json_fields(r) + "}\n";
        else
            out = "target: " + o.target + "\nmethod: " + o.method + "\n" + result_text(r);
    }
    write_output(out, o.output);
    return 0;
}

// ---------------------------------------------------------------------------
// grid

struct GridOpts {
    std::string target = "f1";
    int nx = 101;
    int ny = 101;
    std::string output;
};

int cmd_grid(const GridOpts& o) {
    const auto id = objective_from_name(o.target);
    if (!id) throw ConfigError("unknown grid target '" + o.target + "' (f1|f2|f3|f4|phi1|phi2)");
    if (o.nx < 2 || o.ny < 2) throw ConfigError("nx and ny must be >= 2");
    const BoundFunction fn(*id);
    std::string out = "x,y,value\n";
    for (int i = 0; i < o.nx; ++i) {
        const double x = static_cast<double>(i) / (o.nx - 1);
        for (int j = 0; j < o.ny; ++j) {
            const double y = static_cast<double>(j) / (o.ny - 1) * Region::y_max();
            // tolerance keeps grid points that sit on the arc up to roundoff
            if (!Region::contains(x, y, 1e-12)) continue;
            out += fmt9(x) + std::string(",") + fmt9(y) + "," + fmt9(fn.value(x, y)) + "\n";
        }
    }
    write_output(out, o.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grunsky coefficients of univalent functions: exact series, identity checks,\n"
                 "and certified global maxima of the associated coefficient bounds"};
    app.require_subcommand(1);

    SeriesOpts so;
    auto* series = app.add_subcommand("series", "Print f, sqrt(f(z^2)) and the odd Grunsky table");
    series->add_option("--fn", so.fn, "koebe|identity|geometric|custom");
    series->add_option("--coeffs", so.coeffs, "comma-separated rational coefficients, must begin 0,1");
    series->add_option("--order", so.order, "truncation order, in [5, 64]");
    series->add_option("--cap", so.cap, "total-degree cap of the Grunsky table");
    series->add_option("--format", so.format, "text|json|csv");
    series->add_option("--output", so.output, "output path (default stdout)");

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "Check the coefficient identities exactly");
    verify->add_option("--fn", vo.fn, "all|koebe|identity|geometric|custom");
    verify->add_option("--coeffs", vo.coeffs, "comma-separated rational coefficients for --fn custom");
    verify->add_option("--order", vo.order, "truncation order, in [10, 64]");
    verify->add_option("--format", vo.format, "text|json");
    verify->add_option("--output", vo.output, "output path (default stdout)");

    BoundOpts bo;
    auto* bound = app.add_subcommand("bound", "Reproduce the coefficient bounds");
    bound->add_option("--target", bo.target, "gamma3|diff43|zalcman23|h22|h31|all");
    bound->add_option("--method", bo.method, "newton|grid|certified");
    bound->add_option("--eps", bo.eps, "certified enclosure width");
    bound->add_option("--format", bo.format, "text|json");
    bound->add_option("--output", bo.output, "output path (default stdout)");

    GridOpts go;
    auto* grid = app.add_subcommand("grid", "Export objective values on a grid of E as CSV");
    grid->add_option("--target", go.target, "f1|f2|f3|f4|phi1|phi2");
    grid->add_option("--nx", go.nx, "grid columns (>= 2)");
    grid->add_option("--ny", go.ny, "grid rows (>= 2)");
    grid->add_option("--output", go.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (series->parsed()) return cmd_series(so);
        if (verify->parsed()) return cmd_verify(vo);
        if (bound->parsed()) return cmd_bound(bo);
        if (grid->parsed()) return cmd_grid(go);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotNormalized& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OrderTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
