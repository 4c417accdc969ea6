#include "superq/qfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "format.hpp"
#include "superq/errors.hpp"

namespace superq::qfunc {

using cplx = std::complex<double>;

const char* to_string(Kind kind) noexcept {
    switch (kind) {
        case Kind::coherent: return "coherent";
        case Kind::squeezed: return "squeezed";
        case Kind::superposed: return "superposed";
    }
    return "unknown";
}

Kind parse_kind(const std::string& name) {
    if (name == "coherent") return Kind::coherent;
    if (name == "squeezed") return Kind::squeezed;
    if (name == "superposed") return Kind::superposed;
    throw DomainError("unknown Q-function kind '" + name + "' (coherent|squeezed|superposed)");
}

GaussianQ gaussian(Kind kind, const ScaledParams& params) {
    const double a = params.a();
    switch (kind) {
        case Kind::coherent:
            return GaussianQ::make(std::exp(-a * a), 1.0, 0.0, a);
        case Kind::squeezed: {
            const auto [u, v] = squeeze_coeffs(params);
            return GaussianQ::make(std::sqrt((u - v) * (u + v)), u, v, 0.0);
        }
        case Kind::superposed: {
            const auto [u, v] = squeeze_coeffs(params);
            return GaussianQ::make(superposed_norm(params), u, v, a * (u - v));
        }
    }
    throw DomainError("unknown Q-function kind");
}

double q_coherent(PhasePoint alpha, const ScaledParams& params) {
    return gaussian(Kind::coherent, params)(alpha);
}

double q_squeezed(PhasePoint alpha, const ScaledParams& params) {
    return gaussian(Kind::squeezed, params)(alpha);
}

double q_superposed(PhasePoint alpha, const ScaledParams& params) {
    return gaussian(Kind::superposed, params)(alpha);
}

namespace {

cplx char_exponent(cplx z, const ScaledParams& params, Kind kind) {
    const cplx zc = std::conj(z);
    switch (kind) {
        case Kind::coherent:
            return -zc * z + params.a() * (z - zc);
        case Kind::squeezed: {
            const double b = params.b();
            const double one_minus_b2 = (1.0 - b) * (1.0 + b);
            const double a1 = 1.0 + b * b / (2.0 * one_minus_b2);
            const double a2 = -b / (2.0 * one_minus_b2);
            return -a1 * zc * z + 0.5 * a2 * (z * z + zc * zc);
        }
        case Kind::superposed:
            break;
    }
    throw DomainError("characteristic function is defined for coherent and squeezed light only");
}

void check_spec(const QuadratureSpec& spec) {
    if (!(spec.extent > 0.0) || spec.nodes < 3 || !(spec.boundary_ratio > 0.0)) {
        throw DomainError("quadrature spec needs extent > 0, nodes >= 3, boundary_ratio > 0");
    }
}

void check_boundary(double peak_log, double boundary_log, const QuadratureSpec& spec, const char* what) {
    if (boundary_log - peak_log > std::log(spec.boundary_ratio)) {
        throw QuadratureError(std::string(what) + ": integrand is not negligible on the quadrature box boundary (ratio " +
                              detail::num(std::exp(boundary_log - peak_log)) + "); increase extent");
    }
}

}  // namespace

cplx char_fn_antinormal(PhasePoint z, const ScaledParams& params, Kind kind) {
    return std::exp(char_exponent(z.value(), params, kind));
}

double superpose_q_numeric(PhasePoint alpha_point, const ScaledParams& params, const QuadratureSpec& spec) {
    check_spec(spec);
    const GaussianQ coherent = gaussian(Kind::coherent, params);
    const GaussianQ squeezed = gaussian(Kind::squeezed, params);

    const int n = spec.nodes;
    const double h = 2.0 * spec.extent / (n - 1);
    std::vector<cplx> nodes;
    nodes.reserve(static_cast<size_t>(n) * n);
    std::vector<bool> on_edge;
    on_edge.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            nodes.emplace_back(-spec.extent + h * i, -spec.extent + h * j);
            on_edge.push_back(i == 0 || j == 0 || i == n - 1 || j == n - 1);
        }
    }

    // Work with exponents; prefactors are pulled out of the sum.
    auto log_q = [](const GaussianQ& q, cplx wc, cplx w) {
        return -q.quad() * wc * w + 0.5 * q.squeeze() * (w * w + wc * wc) + q.linear() * (w + wc);
    };

    const cplx alpha = alpha_point.value();
    const cplx alpha_c = std::conj(alpha);
    double peak = -std::numeric_limits<double>::infinity();
    double edge = -std::numeric_limits<double>::infinity();
    cplx total{};
    for (size_t g = 0; g < nodes.size(); ++g) {
        const cplx gamma = nodes[g];
        const cplx gamma_c = std::conj(gamma);
        const cplx gamma_part = -gamma_c * gamma + alpha_c * gamma + alpha * gamma_c - alpha_c * alpha;
        cplx row{};
        for (size_t k = 0; k < nodes.size(); ++k) {
            const cplx beta = nodes[k];
            const cplx beta_c = std::conj(beta);
            const cplx e = log_q(coherent, beta_c, alpha - gamma) + log_q(squeezed, gamma_c, alpha - beta) +
                           gamma_part - beta_c * beta + alpha_c * beta + alpha * beta_c - beta_c * gamma -
                           beta * gamma_c;
            peak = std::max(peak, e.real());
            if (on_edge[g] || on_edge[k]) {
                edge = std::max(edge, e.real());
            }
            row += std::exp(e);
        }
        total += row;
    }
    check_boundary(peak, edge, spec, "superposition integral");

    constexpr double inv_pi = std::numbers::inv_pi;
    const double pref = inv_pi * (coherent.prefactor() * inv_pi) * (squeezed.prefactor() * inv_pi);
    return pref * total.real() * h * h * h * h;
}

double q_from_char_fn(PhasePoint alpha_point, const ScaledParams& params, Kind kind, const QuadratureSpec& spec) {
    check_spec(spec);
    const int n = spec.nodes;
    const double h = 2.0 * spec.extent / (n - 1);
    const cplx alpha = alpha_point.value();
    const cplx alpha_c = std::conj(alpha);
    double peak = -std::numeric_limits<double>::infinity();
    double edge = -std::numeric_limits<double>::infinity();
    cplx total{};
    for (int i = 0; i < n; ++i) {
        cplx row{};
        for (int j = 0; j < n; ++j) {
            const cplx z(-spec.extent + h * i, -spec.extent + h * j);
            const cplx e = char_exponent(z, params, kind) + std::conj(z) * alpha - z * alpha_c;
            peak = std::max(peak, e.real());
            if (i == 0 || j == 0 || i == n - 1 || j == n - 1) {
                edge = std::max(edge, e.real());
            }
            row += std::exp(e);
        }
        total += row;
    }
    check_boundary(peak, edge, spec, "characteristic-function transform");
    return total.real() * h * h * std::numbers::inv_pi * std::numbers::inv_pi;
}

double auto_extent(Kind kind, const ScaledParams& params) {
    const GaussianQ q = gaussian(kind, params);
    const double sigma = std::sqrt(std::max(q.variance_re(), q.variance_im()));
    return std::abs(q.mean_re()) + 6.0 * std::max(1.0, sigma);
}

QGrid q_grid(Kind kind, const ScaledParams& params, int n, std::optional<double> extent) {
    if (n < 16) {
        throw DomainError("Q grid needs at least 16 points per axis, got " + std::to_string(n));
    }
    const double ext = extent ? *extent : auto_extent(kind, params);
    if (!(ext > 0.0) || !std::isfinite(ext)) {
        throw DomainError("Q grid extent must be positive and finite");
    }
    const GaussianQ q = gaussian(kind, params);

    QGrid grid;
    grid.kind = kind;
    grid.params = params;
    grid.extent = ext;
    grid.n = n;
    grid.dx = 2.0 * ext / (n - 1);
    grid.values.resize(static_cast<size_t>(n) * n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            const double value = q({grid.coordinate(i), grid.coordinate(j)});
            grid.values[static_cast<size_t>(i) * n + j] = value;
            row += value;
        }
        sum += row;
    }
    grid.normalization = sum * grid.dx * grid.dx;
    if (std::abs(grid.normalization - 1.0) > kNormalizationWarn) {
        grid.warning = "grid normalization " + detail::num(grid.normalization) +
                       " deviates from 1; widen the extent or add points";
    }
    return grid;
}

}  // namespace superq::qfunc
