#include "superq/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <utility>

#include "superq/combined.hpp"
#include "superq/errors.hpp"
#include "superq/fock_oracle.hpp"
#include "superq/qfunctions.hpp"
#include "superq/superposed.hpp"

namespace superq::verify {

namespace {

constexpr std::array kGridA{0.0, 0.3, 0.6};
constexpr std::array kGridB{0.0, 0.2, 0.4, 0.8};

double max_moment_dev(const MomentSet& x, const MomentSet& y) {
    return std::max({std::abs(x.mean_amp - y.mean_amp), std::abs(x.mean_sq - y.mean_sq),
                     std::abs(x.mean_photon - y.mean_photon)});
}

CavityConfig config_for(double a, double b) { return {1.0, 0.5 * a, 0.5 * b}; }

/// Steady states keyed by (a, b), solved once per suite run.
class StateCache {
public:
    explicit StateCache(std::optional<int> trunc) : trunc_(trunc) {}

    const fock::DensityMatrix& get(double a, double b) {
        const auto key = std::make_pair(a, b);
        auto it = states_.find(key);
        if (it == states_.end()) {
            const CavityConfig c = config_for(a, b);
            fock::DensityMatrix rho =
                trunc_ ? fock::steady_state(c, *trunc_) : fock::converged_steady_state(c).rho;
            it = states_.emplace(key, std::move(rho)).first;
        }
        return it->second;
    }

private:
    std::optional<int> trunc_;
    std::map<std::pair<double, double>, fock::DensityMatrix> states_;
};

CheckResult within(std::string name, double dev, double tol, std::string note = {}) {
    return {std::move(name), dev, tol, dev <= tol, std::move(note)};
}

std::vector<PhasePoint> sample_points() {
    std::vector<PhasePoint> pts;
    for (double x : {-1.2, -0.6, 0.0, 0.6, 1.2}) {
        for (double y : {-1.0, -0.5, 0.0, 0.5, 1.0}) pts.push_back({x + 0.3, y});
    }
    return pts;
}

}  // namespace

std::vector<CheckResult> run_suite(const Options& opt) {
    std::vector<CheckResult> out;
    StateCache cache(opt.trunc);
    const double tol = opt.tolerance;

    auto guarded = [&](const std::string& name, auto&& body) {
        try {
            out.push_back(body());
        } catch (const Error& e) {
            out.push_back({name, std::nan(""), tol, false, std::string(e.kind()) + ": " + e.what()});
        }
    };

    guarded("combined_moments_vs_lindblad", [&] {
        double dev = 0.0;
        for (double a : kGridA)
            for (double b : kGridB) {
                const auto p = ScaledParams::make(a, b);
                dev = std::max(dev, max_moment_dev(combined::steady_moments(p), fock::moments(cache.get(a, b))));
            }
        return within("combined_moments_vs_lindblad", dev, tol, "3x4 (a,b) grid");
    });

    guarded("single_beam_variance_vs_lindblad", [&] {
        double dev = 0.0;
        for (double a : kGridA)
            for (double b : kGridB) {
                const auto var = combined::quad_variance_single(ScaledParams::make(a, b));
                const auto& rho = cache.get(a, b);
                dev = std::max({dev, std::abs(var.plus - fock::quad_variance(rho, Quadrature::plus)),
                                std::abs(var.minus - fock::quad_variance(rho, Quadrature::minus))});
            }
        return within("single_beam_variance_vs_lindblad", dev, tol, "3x4 (a,b) grid");
    });

    guarded("uncertainty_product_single", [&] {
        double dev = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double b = 0.99 * i / 99.0;
            const auto var = combined::quad_variance_single(ScaledParams::make(0.0, b));
            dev = std::max(dev, std::abs(var.plus * var.minus - 1.0 / ((1.0 - b) * (1.0 + b))) * (1.0 - b * b));
        }
        return within("uncertainty_product_single", dev, 1e-9, "relative, b in [0, 0.99]");
    });

    guarded("moment_ode_late_time", [&] {
        double dev = 0.0;
        for (double a : kGridA)
            for (double b : kGridB) {
                const auto p = ScaledParams::make(a, b);
                const MomentState m = combined::evolve_moments(p, 60.0 / (1.0 - b));
                const MomentSet ss = combined::steady_moments(p);
                dev = std::max({dev, max_moment_dev(m.collapsed(), ss), std::abs(m.amp - m.amp_dag),
                                std::abs(m.sq - m.sq_dag)});
            }
        return within("moment_ode_late_time", dev, 1e-8, "includes <a>=<a+> and <a^2>=<a+^2>");
    });

    guarded("transient_coherent_amplitude", [&] {
        const double a = 0.6;
        const auto p = ScaledParams::make(a, 0.0);
        const CavityConfig c = config_for(a, 0.0);
        const int n = opt.trunc.value_or(30);
        double dev = 0.0;
        for (double tau : {0.5, 1.0, 2.0, 4.0}) {
            const double exact = a * (1.0 - std::exp(-0.5 * tau));
            dev = std::max(dev, std::abs(combined::evolve_moments(p, tau).amp - exact));
            dev = std::max(dev, std::abs(fock::mean_amp(fock::propagate(c, n, tau, 1e-3)) - exact));
        }
        return within("transient_coherent_amplitude", dev, tol, "moment ODE and master equation");
    });

    guarded("q_normalization", [&] {
        double dev = 0.0;
        for (double a : kGridA)
            for (double b : kGridB)
                for (auto kind : {qfunc::Kind::coherent, qfunc::Kind::squeezed, qfunc::Kind::superposed}) {
                    const auto grid = qfunc::q_grid(kind, ScaledParams::make(a, b), 256);
                    dev = std::max(dev, std::abs(grid.normalization - 1.0));
                }
        return within("q_normalization", dev, tol, "three kinds over the (a,b) grid");
    });

    guarded("husimi_vs_closed_q", [&] {
        double dev = 0.0;
        const auto coh = ScaledParams::make(0.6, 0.0);
        const auto sq = ScaledParams::make(0.0, 0.4);
        for (const PhasePoint& pt : sample_points()) {
            dev = std::max(dev, std::abs(fock::husimi(cache.get(0.6, 0.0), pt.value()) - qfunc::q_coherent(pt, coh)));
            dev = std::max(dev, std::abs(fock::husimi(cache.get(0.0, 0.4), pt.value()) - qfunc::q_squeezed(pt, sq)));
        }
        return within("husimi_vs_closed_q", dev, tol, "25 points, coherent and squeezed");
    });

    guarded("char_fn_vs_lindblad", [&] {
        double dev = 0.0;
        const auto coh = ScaledParams::make(0.6, 0.0);
        const auto sq = ScaledParams::make(0.0, 0.4);
        for (const PhasePoint& pt : sample_points()) {
            dev = std::max(dev, std::abs(fock::char_fn(cache.get(0.6, 0.0), pt.value()) -
                                         qfunc::char_fn_antinormal(pt, coh, qfunc::Kind::coherent)));
            dev = std::max(dev, std::abs(fock::char_fn(cache.get(0.0, 0.4), pt.value()) -
                                         qfunc::char_fn_antinormal(pt, sq, qfunc::Kind::squeezed)));
        }
        return within("char_fn_vs_lindblad", dev, tol, "25 points, coherent and squeezed");
    });

    guarded("char_fn_transform", [&] {
        double dev = 0.0;
        const auto p = ScaledParams::make(0.6, 0.4);
        for (const PhasePoint& pt : sample_points()) {
            dev = std::max(dev, std::abs(qfunc::q_from_char_fn(pt, p, qfunc::Kind::coherent) - qfunc::q_coherent(pt, p)));
            dev = std::max(dev, std::abs(qfunc::q_from_char_fn(pt, p, qfunc::Kind::squeezed) - qfunc::q_squeezed(pt, p)));
        }
        return within("char_fn_transform", dev, 1e-4, "25 points, coherent and squeezed");
    });

    if (opt.kernel) {
        guarded("superposition_kernel", [&] {
            double dev = 0.0;
            const auto p = ScaledParams::make(0.6, 0.4);
            for (const PhasePoint& pt : {PhasePoint{0.0, 0.0}, PhasePoint{0.5, 0.2}, PhasePoint{-0.3, 0.7},
                                         PhasePoint{1.0, 0.0}, PhasePoint{0.6, -0.8}}) {
                const double closed = qfunc::q_superposed(pt, p);
                dev = std::max(dev, std::abs(qfunc::superpose_q_numeric(pt, p) - closed) / closed);
            }
            return within("superposition_kernel", dev, 1e-3, "relative, 5 points, a=0.6 b=0.4");
        });
    }

    guarded("superposed_moments_vs_q_quadrature", [&] {
        double dev = 0.0;
        for (double a : kGridA)
            for (double b : kGridB) {
                const auto p = ScaledParams::make(a, b);
                dev = std::max(dev, max_moment_dev(superposed::superposed_moments(p),
                                                   superposed::superposed_moments_quadrature(p)));
            }
        return within("superposed_moments_vs_q_quadrature", dev, tol, "3x4 (a,b) grid");
    });

    guarded("superposed_moments_vs_fock_sum", [&] {
        double dev = 0.0;
        for (double a : kGridA)
            for (double b : kGridB) {
                const MomentSet sum = fock::moments(cache.get(a, 0.0)) + fock::moments(cache.get(0.0, b));
                dev = std::max(dev, max_moment_dev(superposed::superposed_moments(ScaledParams::make(a, b)), sum));
            }
        return within("superposed_moments_vs_fock_sum", dev, tol, "3x4 (a,b) grid");
    });

    guarded("pair_variance_expansion", [&] {
        double dev = 0.0;
        for (int i = 0; i < 100; ++i) {
            const auto p = ScaledParams::make(0.6, 0.99 * i / 99.0);
            const auto e = superposed::quad_variance_pair(p);
            const auto c = superposed::quad_variance_pair_closed(p);
            dev = std::max({dev, std::abs(e.plus - c.plus), std::abs(e.minus - c.minus) / c.minus});
        }
        return within("pair_variance_expansion", dev, 1e-9, "expansion vs closed form, b in [0, 0.99]");
    });

    guarded("halving_identity", [&] {
        double dev = 0.0;
        for (int i = 0; i < 100; ++i) {
            const auto p = ScaledParams::make(0.6, 0.99 * i / 99.0);
            const double half = 0.5 * (1.0 - combined::quad_variance_single(p).plus);
            dev = std::max(dev, std::abs(superposed::quadrature_squeezing(p) - half));
        }
        return within("halving_identity", dev, 1e-12, "S = (1 - single var_plus)/2");
    });

    guarded("output_relations", [&] {
        double dev = 0.0;
        for (double kappa : {0.5, 1.0, 2.0}) {
            const auto r = superposed::output_report({kappa, 0.3 * kappa, 0.2 * kappa});
            dev = std::max({dev, std::abs(r.mean_photon_out - kappa * r.mean_photon),
                            std::abs(r.squeezing_out - r.squeezing),
                            std::abs(r.var_plus_out - kappa * r.var_plus)});
        }
        return within("output_relations", dev, 0.0, "exact identities, kappa in {0.5, 1, 2}");
    });

    guarded("combined_coherent_term_shift", [&] {
        const double with = combined::coherent_term(ScaledParams::make(0.6, 0.4));
        const double without = combined::coherent_term(ScaledParams::make(0.6, 0.0));
        const double gap = std::abs(with - without);
        return CheckResult{"combined_coherent_term_shift", gap, 1e-3, gap > 1e-3,
                           "a=0.6: coherent term at b=0.4 vs b=0 must differ"};
    });

    return out;
}

bool all_passed(const std::vector<CheckResult>& results) noexcept {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace superq::verify
