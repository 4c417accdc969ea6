#include "superq/superposed.hpp"

#include <cassert>
#include <cmath>

#include "superq/qfunctions.hpp"

namespace superq::superposed {

MomentSet superposed_moments(const ScaledParams& params) {
    const double a = params.a();
    const double b = params.b();
    const double one_minus_b2 = (1.0 - b) * (1.0 + b);
    return {a, a * a - b / (2.0 * one_minus_b2), a * a + b * b / (2.0 * one_minus_b2)};
}

MomentSet superposed_moments_quadrature(const ScaledParams& params, int n) {
    const qfunc::QGrid grid = qfunc::q_grid(qfunc::Kind::superposed, params, n);
    double s_amp = 0.0;
    double s_sq = 0.0;
    double s_abs2 = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.coordinate(i);
        double r_amp = 0.0;
        double r_sq = 0.0;
        double r_abs2 = 0.0;
        for (int j = 0; j < grid.n; ++j) {
            const double y = grid.coordinate(j);
            const double q = grid.values[static_cast<size_t>(i) * grid.n + j];
            // Re alpha, Re alpha^2, |alpha|^2; imaginary parts vanish by symmetry in y.
            r_amp += q * x;
            r_sq += q * (x * x - y * y);
            r_abs2 += q * (x * x + y * y);
        }
        s_amp += r_amp;
        s_sq += r_sq;
        s_abs2 += r_abs2;
    }
    const double w = grid.dx * grid.dx;
    return {s_amp * w, s_sq * w, s_abs2 * w - 1.0};
}

QuadVariances quad_variance_pair(const MomentSet& moments) noexcept {
    return {kPairBaseline + normal_ordered_variance(moments, Quadrature::plus),
            kPairBaseline + normal_ordered_variance(moments, Quadrature::minus)};
}

QuadVariances quad_variance_pair_closed(const ScaledParams& params) {
    const double b = params.b();
    return {kPairBaseline - b / (1.0 + b), kPairBaseline + b / (1.0 - b)};
}

QuadVariances quad_variance_pair(const ScaledParams& params) {
    const MomentSet m = superposed_moments(params);
    const QuadVariances expanded = quad_variance_pair(m);
#ifndef NDEBUG
    const QuadVariances closed = quad_variance_pair_closed(params);
    const double scale = 2.0 + 4.0 * m.mean_photon + 4.0 * m.mean_amp * m.mean_amp;
    assert(std::abs(expanded.plus - closed.plus) <= 1e-12 * scale);
    assert(std::abs(expanded.minus - closed.minus) <= 1e-12 * scale);
#endif
    return expanded;
}

double quadrature_squeezing(const ScaledParams& params) {
    return (kPairBaseline - quad_variance_pair(params).plus) / kPairBaseline;
}

double quadrature_squeezing_closed(const ScaledParams& params) {
    const double b = params.b();
    return b / (2.0 * (1.0 + b));
}

SqueezingReport output_report(const CavityConfig& config) {
    const ScaledParams params = scale(config);
    const double kappa = config.kappa;
    const MomentSet m = superposed_moments(params);
    const QuadVariances var = quad_variance_pair(params);

    SqueezingReport r;
    r.config = config;
    r.a = params.a();
    r.b = params.b();
    r.mean_photon = m.mean_photon;
    r.mean_photon_out = kappa * m.mean_photon;
    r.var_plus = var.plus;
    r.var_minus = var.minus;
    r.var_plus_out = kappa * var.plus;
    r.var_minus_out = kappa * var.minus;
    r.squeezing = (kPairBaseline - var.plus) / kPairBaseline;
    const double base_out = output_pair_baseline(kappa);
    r.squeezing_out = (base_out - r.var_plus_out) / base_out;
    return r;
}

}  // namespace superq::superposed
