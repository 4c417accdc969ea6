#include "superq/report.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <system_error>

#include "superq/combined.hpp"

namespace superq::report {

Comparison compare(const CavityConfig& config) {
    Comparison c;
    c.superposed = superposed::output_report(config);
    const ScaledParams params = scale(config);
    const MomentSet m = combined::steady_moments(params);
    const combined::QuadVariances var = combined::quad_variance_single(params);
    c.combined_mean_amp = m.mean_amp;
    c.combined_mean_sq = m.mean_sq;
    c.combined_mean_photon = m.mean_photon;
    c.combined_coherent_term = combined::coherent_term(params);
    c.uncoupled_coherent_term = combined::coherent_term(ScaledParams::make(params.a(), 0.0));
    c.combined_var_plus = var.plus;
    c.combined_var_minus = var.minus;
    return c;
}

std::string sig9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string exact(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double round_sig9(double x) { return std::strtod(sig9(x).c_str(), nullptr); }

nlohmann::json to_json(const superposed::SqueezingReport& r) {
    return {
        {"kappa", r.config.kappa},
        {"eps1", r.config.eps1},
        {"eps2", r.config.eps2},
        {"a", round_sig9(r.a)},
        {"b", round_sig9(r.b)},
        {"mean_photon", round_sig9(r.mean_photon)},
        {"mean_photon_out", round_sig9(r.mean_photon_out)},
        {"var_plus", round_sig9(r.var_plus)},
        {"var_minus", round_sig9(r.var_minus)},
        {"var_plus_out", round_sig9(r.var_plus_out)},
        {"var_minus_out", round_sig9(r.var_minus_out)},
        {"squeezing", round_sig9(r.squeezing)},
        {"squeezing_out", round_sig9(r.squeezing_out)},
    };
}

nlohmann::json to_json(const Comparison& c) {
    nlohmann::json j = to_json(c.superposed);
    j["combined_mean_amp"] = round_sig9(c.combined_mean_amp);
    j["combined_mean_sq"] = round_sig9(c.combined_mean_sq);
    j["combined_mean_photon"] = round_sig9(c.combined_mean_photon);
    j["combined_coherent_term"] = round_sig9(c.combined_coherent_term);
    j["uncoupled_coherent_term"] = round_sig9(c.uncoupled_coherent_term);
    j["combined_var_plus"] = round_sig9(c.combined_var_plus);
    j["combined_var_minus"] = round_sig9(c.combined_var_minus);
    return j;
}

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols = {
        "kappa", "eps1", "eps2", "a", "b",
        "mean_photon", "mean_photon_out", "var_plus", "var_minus", "var_plus_out", "var_minus_out",
        "squeezing", "squeezing_out",
        "combined_mean_amp", "combined_mean_sq", "combined_mean_photon", "combined_coherent_term",
        "uncoupled_coherent_term", "combined_var_plus", "combined_var_minus",
    };
    return cols;
}

std::string csv_header() {
    std::string out;
    for (const auto& c : csv_columns()) {
        if (!out.empty()) out += ',';
        out += c;
    }
    return out;
}

std::string csv_row(const Comparison& c) {
    const auto& r = c.superposed;
    std::string out = exact(r.config.kappa) + ',' + exact(r.config.eps1) + ',' + exact(r.config.eps2);
    for (double v : {r.a, r.b, r.mean_photon, r.mean_photon_out, r.var_plus, r.var_minus, r.var_plus_out,
                     r.var_minus_out, r.squeezing, r.squeezing_out, c.combined_mean_amp, c.combined_mean_sq,
                     c.combined_mean_photon, c.combined_coherent_term, c.uncoupled_coherent_term,
                     c.combined_var_plus, c.combined_var_minus}) {
        out += ',';
        out += sig9(v);
    }
    return out;
}

std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        const size_t comma = line.find(',', start);
        out.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

void write_csv(std::ostream& os, const qfunc::QGrid& grid) {
    os << "re,im,q\n";
    for (int i = 0; i < grid.n; ++i) {
        for (int j = 0; j < grid.n; ++j) {
            os << sig9(grid.coordinate(i)) << ',' << sig9(grid.coordinate(j)) << ','
               << sig9(grid.values[static_cast<size_t>(i) * grid.n + j]) << '\n';
        }
    }
}

nlohmann::json to_json(const qfunc::QGrid& grid) {
    nlohmann::json values = nlohmann::json::array();
    for (double v : grid.values) values.push_back(round_sig9(v));
    nlohmann::json j = {
        {"params", {{"a", round_sig9(grid.params.a())}, {"b", round_sig9(grid.params.b())}}},
        {"kind", qfunc::to_string(grid.kind)},
        {"extent", round_sig9(grid.extent)},
        {"n", grid.n},
        {"dx", round_sig9(grid.dx)},
        {"normalization", round_sig9(grid.normalization)},
        {"values", std::move(values)},
    };
    if (grid.warning) j["warning"] = *grid.warning;
    return j;
}

}  // namespace superq::report
