#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "superq/qfunctions.hpp"
#include "superq/superposed.hpp"

/// Side-by-side results of both procedures and their serialized forms.
namespace superq::report {

/// Superposed-Q results next to the combined-Hamiltonian counterparts.
struct Comparison {
    superposed::SqueezingReport superposed;
    double combined_mean_amp = 0.0;
    double combined_mean_sq = 0.0;
    double combined_mean_photon = 0.0;
    /// a^2/(1+b)^2: the coherent share of combined_mean_photon.
    double combined_coherent_term = 0.0;
    /// a^2: the same term without the subharmonic pump.
    double uncoupled_coherent_term = 0.0;
    double combined_var_plus = 0.0;
    double combined_var_minus = 0.0;
};

Comparison compare(const CavityConfig& config);

/// Fixed 9-significant-digit rendering used for every derived number.
std::string sig9(double x);
/// Shortest text that reads back to exactly x; used for echoed inputs.
std::string exact(double x);
/// x rounded to 9 significant digits, so JSON shows the same digits as CSV.
double round_sig9(double x);

nlohmann::json to_json(const superposed::SqueezingReport& r);
nlohmann::json to_json(const Comparison& c);

/// Column names of a sweep CSV, in order.
const std::vector<std::string>& csv_columns();
std::string csv_header();
std::string csv_row(const Comparison& c);

/// Splits a CSV line on commas (no quoting is ever emitted).
std::vector<std::string> split_csv(std::string_view line);

/// QGrid as CSV with header "re,im,q", rows in the grid's row-major order.
void write_csv(std::ostream& os, const qfunc::QGrid& grid);
/// QGrid envelope {params, kind, extent, n, dx, normalization, values}.
nlohmann::json to_json(const qfunc::QGrid& grid);

}  // namespace superq::report
