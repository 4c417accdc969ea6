#include "superq/combined.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "format.hpp"
#include "superq/errors.hpp"

namespace superq::combined {

double steady_mean_amp(const ScaledParams& params) { return params.a() / (1.0 + params.b()); }

double coherent_term(const ScaledParams& params) {
    const double m = steady_mean_amp(params);
    return m * m;
}

double squeezed_term(const ScaledParams& params) {
    const double b = params.b();
    return b * b / (2.0 * (1.0 - b) * (1.0 + b));
}

MomentSet steady_moments(const ScaledParams& params) {
    const double b = params.b();
    const double coh = coherent_term(params);
    return {steady_mean_amp(params), coh + b / (2.0 * (b - 1.0) * (b + 1.0)), coh + squeezed_term(params)};
}

MomentState moment_derivative(const ScaledParams& params, const MomentState& m) noexcept {
    // Equations divided by kappa: eps1/kappa = a/2, eps2/kappa = b/2.
    const double a = params.a();
    const double b = params.b();
    MomentState d;
    d.amp = -0.5 * m.amp - 0.5 * b * m.amp_dag + 0.5 * a;
    d.amp_dag = -0.5 * m.amp_dag - 0.5 * b * m.amp + 0.5 * a;
    d.sq = -m.sq - b * m.photon + a * m.amp - 0.5 * b;
    d.sq_dag = -m.sq_dag - b * m.photon + a * m.amp_dag - 0.5 * b;
    d.photon = -m.photon - 0.5 * b * (m.sq + m.sq_dag) + 0.5 * a * (m.amp + m.amp_dag);
    return d;
}

namespace {

MomentState axpy(const MomentState& x, double h, const MomentState& d) noexcept {
    return {x.amp + h * d.amp, x.amp_dag + h * d.amp_dag, x.sq + h * d.sq, x.sq_dag + h * d.sq_dag,
            x.photon + h * d.photon};
}

bool finite(const MomentState& m) noexcept {
    return std::isfinite(m.amp) && std::isfinite(m.amp_dag) && std::isfinite(m.sq) &&
           std::isfinite(m.sq_dag) && std::isfinite(m.photon);
}

}  // namespace

MomentState evolve_moments(const ScaledParams& params, double tau, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw StepError("integration step must be positive, got " + detail::num(step));
    }
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw StepError("integration time must be finite and non-negative");
    }
    MomentState m{};
    const auto steps = static_cast<long long>(std::ceil(tau / step - 1e-9));
    if (steps == 0) {
        return m;
    }
    const double h = tau / static_cast<double>(steps);
    for (long long i = 0; i < steps; ++i) {
        const MomentState k1 = moment_derivative(params, m);
        const MomentState k2 = moment_derivative(params, axpy(m, 0.5 * h, k1));
        const MomentState k3 = moment_derivative(params, axpy(m, 0.5 * h, k2));
        const MomentState k4 = moment_derivative(params, axpy(m, h, k3));
        m.amp += h / 6.0 * (k1.amp + 2.0 * k2.amp + 2.0 * k3.amp + k4.amp);
        m.amp_dag += h / 6.0 * (k1.amp_dag + 2.0 * k2.amp_dag + 2.0 * k3.amp_dag + k4.amp_dag);
        m.sq += h / 6.0 * (k1.sq + 2.0 * k2.sq + 2.0 * k3.sq + k4.sq);
        m.sq_dag += h / 6.0 * (k1.sq_dag + 2.0 * k2.sq_dag + 2.0 * k3.sq_dag + k4.sq_dag);
        m.photon += h / 6.0 * (k1.photon + 2.0 * k2.photon + 2.0 * k3.photon + k4.photon);
        if (!finite(m)) {
            throw StepError("moment integration diverged at step " + std::to_string(i));
        }
    }
    return m;
}

MomentState evolve_moments(const CavityConfig& config, double t, double dt) {
    const ScaledParams params = scale(config);
    if (!(dt > 0.0)) {
        throw StepError("integration step must be positive");
    }
    return evolve_moments(params, config.kappa * t, config.kappa * dt);
}

QuadVariances quad_variance_single_closed(const ScaledParams& params) {
    const double b = params.b();
    return {1.0 - b / (1.0 + b), 1.0 + b / (1.0 - b)};
}

QuadVariances quad_variance_single(const ScaledParams& params) {
    const MomentSet m = steady_moments(params);
    const QuadVariances expanded{kSingleBeamBaseline + normal_ordered_variance(m, Quadrature::plus),
                                 kSingleBeamBaseline + normal_ordered_variance(m, Quadrature::minus)};
#ifndef NDEBUG
    const QuadVariances closed = quad_variance_single_closed(params);
    const double scale = 1.0 + 4.0 * m.mean_photon + 4.0 * m.mean_amp * m.mean_amp;
    assert(std::abs(expanded.plus - closed.plus) <= 1e-12 * scale);
    assert(std::abs(expanded.minus - closed.minus) <= 1e-12 * scale);
#endif
    return expanded;
}

}  // namespace superq::combined
