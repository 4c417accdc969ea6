#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "superq/errors.hpp"
#include "superq/report.hpp"
#include "superq/verify.hpp"

namespace superq::cli {

namespace {

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    if (s == "table") return Format::table;
    throw DomainError("unknown format '" + s + "' (csv|json|table)");
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DomainError("cannot parse " + what + " from '" + s + "'");
    }
}

CavityConfig with_param(CavityConfig c, const std::string& param, double value) {
    if (param == "kappa") c.kappa = value;
    else if (param == "eps1") c.eps1 = value;
    else if (param == "eps2") c.eps2 = value;
    else throw DomainError("unknown sweep parameter '" + param + "' (kappa|eps1|eps2)");
    return c;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
    err << nlohmann::json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << '\n';
}

void write_report(const RunSpec& spec, std::ostream& os) {
    const auto cmp = report::compare(spec.config);
    if (spec.format.value_or(Format::json) == Format::csv) {
        os << report::csv_header() << '\n' << report::csv_row(cmp) << '\n';
    } else {
        os << report::to_json(cmp).dump(2) << '\n';
    }
}

void write_sweep(const RunSpec& spec, std::ostream& os) {
    const SweepAxis& axis = *spec.sweep;
    std::vector<report::Comparison> rows;
    rows.reserve(axis.steps);
    for (int i = 0; i < axis.steps; ++i) {
        rows.push_back(report::compare(with_param(spec.config, axis.param, axis.value(i))));
    }
    if (spec.format.value_or(Format::csv) == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(report::to_json(r));
        os << arr.dump(2) << '\n';
    } else {
        os << report::csv_header() << '\n';
        for (const auto& r : rows) os << report::csv_row(r) << '\n';
    }
}

void write_qgrid(const RunSpec& spec, std::ostream& os, std::ostream& err) {
    const auto grid = qfunc::q_grid(spec.kind, scale(spec.config), spec.grid_n, spec.grid_extent);
    if (grid.warning) {
        err << nlohmann::json{{"warning", "NormalizationWarning"}, {"message", *grid.warning}}.dump() << '\n';
    }
    if (spec.format.value_or(Format::csv) == Format::json) {
        os << report::to_json(grid).dump() << '\n';
    } else {
        report::write_csv(os, grid);
    }
}

bool write_verify(const RunSpec& spec, std::ostream& os) {
    verify::Options opt;
    opt.tolerance = spec.tol;
    opt.trunc = spec.trunc;
    opt.kernel = spec.kernel;
    const auto results = verify::run_suite(opt);
    const bool ok = verify::all_passed(results);
    switch (spec.format.value_or(Format::table)) {
        case Format::json: {
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& r : results) {
                checks.push_back({{"check", r.name},
                                  {"max_deviation", report::round_sig9(r.deviation)},
                                  {"tolerance", r.tolerance},
                                  {"passed", r.passed},
                                  {"note", r.note}});
            }
            os << nlohmann::json{{"checks", checks}, {"all_passed", ok}}.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "check,max_deviation,tolerance,status\n";
            for (const auto& r : results) {
                os << r.name << ',' << report::sig9(r.deviation) << ',' << report::sig9(r.tolerance) << ','
                   << (r.passed ? "pass" : "FAIL") << '\n';
            }
            break;
        case Format::table:
            os << std::left << std::setw(38) << "check" << std::setw(18) << "max_deviation" << std::setw(12)
               << "tolerance" << "status\n";
            for (const auto& r : results) {
                os << std::left << std::setw(38) << r.name << std::setw(18) << report::sig9(r.deviation)
                   << std::setw(12) << report::sig9(r.tolerance) << (r.passed ? "pass" : "FAIL");
                if (!r.passed && !r.note.empty()) os << "  (" << r.note << ')';
                os << '\n';
            }
            os << (ok ? "all checks passed" : "some checks FAILED") << '\n';
            break;
    }
    return ok;
}

}  // namespace

double SweepAxis::value(int i) const noexcept {
    if (i == steps - 1) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

SweepAxis parse_sweep(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 4) {
        throw DomainError("sweep must look like <param:start:stop:steps>, got '" + text + "'");
    }
    SweepAxis axis;
    axis.param = parts[0];
    axis.start = parse_double(parts[1], "sweep start");
    axis.stop = parse_double(parts[2], "sweep stop");
    const double steps = parse_double(parts[3], "sweep steps");
    if (steps != static_cast<int>(steps)) throw DomainError("sweep steps must be an integer");
    axis.steps = static_cast<int>(steps);
    with_param(CavityConfig{}, axis.param, 1.0);  // rejects unknown names
    return axis;
}

void RunSpec::validate() const {
    config.validate();
    if (!(tol > 0.0)) throw DomainError("--tol must be positive");
    if (command == Command::sweep) {
        if (!sweep) throw DomainError("sweep needs --sweep <param:start:stop:steps>");
        if (sweep->steps < 2) throw DomainError("sweep needs at least 2 steps");
        for (int i = 0; i < sweep->steps; ++i) {
            with_param(config, sweep->param, sweep->value(i)).validate();
        }
    }
    if (command == Command::qgrid && grid_n < 16) throw DomainError("--grid-n must be at least 16");
    if (format == Format::table && command != Command::verify) {
        throw DomainError("table format is only available for verify");
    }
}

std::optional<RunSpec> parse_args(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Coherent and squeezed cavity light: combined-Hamiltonian vs superposed-Q results"};
    app.require_subcommand(1);

    RunSpec spec;
    std::string sweep_text;
    std::string kind_text = "superposed";
    std::string extent_text = "auto";
    std::string trunc_text = "auto";
    std::string format_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--kappa", spec.config.kappa, "cavity damping rate")->capture_default_str();
        sub->add_option("--eps1", spec.config.eps1, "coherent drive amplitude")->capture_default_str();
        sub->add_option("--eps2", spec.config.eps2, "subharmonic pump amplitude")->capture_default_str();
        sub->add_option("--out", spec.out, "output file (default stdout)");
        sub->add_option("--format", format_text, "csv, json, or table (verify only)");
    };

    auto* report = app.add_subcommand("report", "steady-state report of both procedures as JSON");
    add_common(report);
    auto* sweep = app.add_subcommand("sweep", "one CSV row per parameter value");
    add_common(sweep);
    sweep->add_option("--sweep", sweep_text, "param:start:stop:steps, param in kappa|eps1|eps2")->required();
    auto* qgrid = app.add_subcommand("qgrid", "sample a Q function on a square grid");
    add_common(qgrid);
    qgrid->add_option("--kind", kind_text, "coherent|squeezed|superposed")->capture_default_str();
    qgrid->add_option("--grid-n", spec.grid_n, "points per axis")->capture_default_str();
    qgrid->add_option("--grid-extent", extent_text, "half-width per axis or 'auto'")->capture_default_str();
    auto* verify = app.add_subcommand("verify", "cross-check closed forms against numerical oracles");
    add_common(verify);
    verify->add_option("--trunc", trunc_text, "Fock truncation or 'auto'")->capture_default_str();
    verify->add_option("--tol", spec.tol, "oracle tolerance")->capture_default_str();
    verify->add_flag("!--no-kernel", spec.kernel, "skip the 4D superposition-kernel quadrature");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw DomainError(e.what());
    }

    if (report->parsed()) spec.command = Command::report;
    if (sweep->parsed()) {
        spec.command = Command::sweep;
        spec.sweep = parse_sweep(sweep_text);
    }
    if (qgrid->parsed()) {
        spec.command = Command::qgrid;
        spec.kind = qfunc::parse_kind(kind_text);
        if (extent_text != "auto") spec.grid_extent = parse_double(extent_text, "--grid-extent");
    }
    if (verify->parsed()) {
        spec.command = Command::verify;
        if (trunc_text != "auto") {
            const double t = parse_double(trunc_text, "--trunc");
            if (t != static_cast<int>(t)) throw DomainError("--trunc must be an integer or 'auto'");
            spec.trunc = static_cast<int>(t);
        }
    }
    if (!format_text.empty()) spec.format = parse_format(format_text);
    return spec;
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        spec.validate();
        std::ofstream file;
        if (!spec.out.empty()) {
            file.open(spec.out);
            if (!file) throw DomainError("cannot open output file '" + spec.out + "'");
        }
        std::ostream& os = spec.out.empty() ? out : file;
        // Render into a buffer first so a failure never leaves a partial artifact behind.
        std::ostringstream buf;
        bool ok = true;
        switch (spec.command) {
            case Command::report: write_report(spec, buf); break;
            case Command::sweep: write_sweep(spec, buf); break;
            case Command::qgrid: write_qgrid(spec, buf, err); break;
            case Command::verify: ok = write_verify(spec, buf); break;
        }
        os << buf.str();
        os.flush();
        if (!ok) {
            emit_error(err, "VerificationFailed", "one or more checks exceeded tolerance", kExitNumerical);
            return kExitNumerical;
        }
        return kExitOk;
    } catch (const Error& e) {
        const int code = e.is_validation() ? kExitValidation : kExitNumerical;
        emit_error(err, e.kind(), e.what(), code);
        return code;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::optional<RunSpec> spec;
    try {
        spec = parse_args(args, out);
    } catch (const Error& e) {
        emit_error(err, e.kind(), e.what(), kExitValidation);
        return kExitValidation;
    }
    return spec ? run(*spec, out, err) : kExitOk;
}

}  // namespace superq::cli
