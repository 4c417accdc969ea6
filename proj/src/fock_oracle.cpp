#include "superq/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "format.hpp"
#include "superq/errors.hpp"

namespace superq::fock {

using SpMat = Eigen::SparseMatrix<double>;
using cplx = std::complex<double>;

namespace {

/// Hamiltonian divided by i: K = eps1 (a^dag - a) + (eps2/2)(a^2 - a^dag 2).
Eigen::MatrixXd drive_matrix(const CavityConfig& c, int n) {
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        const double s = std::sqrt(static_cast<double>(i + 1));
        k(i + 1, i) += c.eps1 * s;
        k(i, i + 1) -= c.eps1 * s;
    }
    for (int i = 0; i + 2 < n; ++i) {
        const double s = std::sqrt(static_cast<double>((i + 1) * (i + 2)));
        k(i, i + 2) += 0.5 * c.eps2 * s;
        k(i + 2, i) -= 0.5 * c.eps2 * s;
    }
    return k;
}

/**
 * Vectorized generator, row-major index m*N + n for rho(m, n):
 * d rho/dt = K rho - rho K + kappa (a rho a^dag - {a^dag a, rho}/2).
 * If trace_row is set, the equation for rho(0,0) becomes sum_k rho(k,k).
 */
SpMat liouvillian(const CavityConfig& c, int n, bool trace_row) {
    const Eigen::MatrixXd k = drive_matrix(c, n);
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(static_cast<size_t>(n) * n * 10);
    auto idx = [n](int i, int j) { return i * n + j; };
    for (int m = 0; m < n; ++m) {
        for (int l = 0; l < n; ++l) {
            const int row = idx(m, l);
            if (trace_row && row == 0) {
                continue;
            }
            for (int q = std::max(0, m - 2); q <= std::min(n - 1, m + 2); ++q) {
                if (k(m, q) != 0.0) t.emplace_back(row, idx(q, l), k(m, q));
            }
            for (int q = std::max(0, l - 2); q <= std::min(n - 1, l + 2); ++q) {
                if (k(q, l) != 0.0) t.emplace_back(row, idx(m, q), -k(q, l));
            }
            if (m + 1 < n && l + 1 < n) {
                t.emplace_back(row, idx(m + 1, l + 1), c.kappa * std::sqrt(static_cast<double>((m + 1) * (l + 1))));
            }
            t.emplace_back(row, row, -0.5 * c.kappa * (m + l));
        }
    }
    if (trace_row) {
        for (int m = 0; m < n; ++m) t.emplace_back(0, idx(m, m), 1.0);
    }
    SpMat op(n * n, n * n);
    op.setFromTriplets(t.begin(), t.end());
    op.makeCompressed();
    return op;
}

Eigen::MatrixXd unvec(const Eigen::VectorXd& x, int n) {
    return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(x.data(), n, n);
}

Eigen::VectorXd vacuum_vec(int n) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n) * n);
    x(0) = 1.0;
    return x;
}

void rk4_step(const SpMat& op, Eigen::VectorXd& x, double h) {
    const Eigen::VectorXd k1 = op * x;
    const Eigen::VectorXd k2 = op * (x + 0.5 * h * k1);
    const Eigen::VectorXd k3 = op * (x + 0.5 * h * k2);
    const Eigen::VectorXd k4 = op * (x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Step small enough for RK4 stability across the generator's spectrum.
double stable_step(const CavityConfig& c, int n) {
    const double rate = c.kappa * n + 4.0 * c.eps1 * std::sqrt(static_cast<double>(n)) + 2.0 * c.eps2 * n;
    return 1.0 / rate;
}

Eigen::VectorXd relax_to_steady(const CavityConfig& c, int n) {
    const SpMat op = liouvillian(c, n, false);
    Eigen::VectorXd x = vacuum_vec(n);
    const double h = stable_step(c, n);
    constexpr long kMaxSteps = 2'000'000;
    for (long s = 0; s < kMaxSteps; s += 100) {
        for (int i = 0; i < 100; ++i) rk4_step(op, x, h);
        if ((op * x).lpNorm<Eigen::Infinity>() < 1e-13 * c.kappa) {
            return x;
        }
    }
    throw SolveError("steady state: propagation fallback did not settle");
}

void check_trunc(int trunc) {
    if (trunc < kMinTruncation || trunc > kMaxTruncation) {
        throw DomainError("truncation must lie in [" + std::to_string(kMinTruncation) + ", " +
                          std::to_string(kMaxTruncation) + "], got " + std::to_string(trunc));
    }
}

double poisson_tail(double mean, int n) {
    // 1 - P(X < n) for X ~ Poisson(mean), computed as the upper sum to avoid cancellation.
    if (mean == 0.0) return 0.0;
    double tail = 0.0;
    const double log_mean = std::log(mean);
    for (int k = n; k < n + 2000; ++k) {
        const double term = std::exp(k * log_mean - mean - std::lgamma(k + 1.0));
        tail += term;
        if (k > mean && term < 1e-30) break;
    }
    return tail;
}

void check_coherent_fits(double abs2, int n, const char* what) {
    if (poisson_tail(abs2, n) > 1e-10) {
        throw TruncationError(std::string(what) + ": point too far from the origin for " + std::to_string(n) +
                              " Fock levels");
    }
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXd elements) : rho_(std::move(elements)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
        throw SolveError("density matrix must be square and non-empty");
    }
    if (!rho_.allFinite()) {
        throw SolveError("density matrix has non-finite entries");
    }
    const double asym = (rho_ - rho_.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12) {
        throw SolveError("density matrix is not Hermitian (deviation " + detail::num(asym) + ")");
    }
    rho_ = 0.5 * (rho_ + rho_.transpose()).eval();
    if (std::abs(rho_.trace() - 1.0) > 1e-10) {
        throw SolveError("density matrix trace " + detail::num(rho_.trace()) + " differs from 1");
    }
    if (min_eigenvalue() < -1e-10) {
        throw SolveError("density matrix is not positive semidefinite");
    }
}

double DensityMatrix::tail_mass() const noexcept {
    const int n = dim();
    const int first = n - std::max(1, n / 10);
    double tail = 0.0;
    for (int i = first; i < n; ++i) tail += rho_(i, i);
    return tail;
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

int default_truncation(const ScaledParams& params) {
    const double b = params.b();
    const double a = params.a();
    double n = b <= 0.8 ? 40.0 : std::ceil(40.0 / ((1.0 - b) * (1.0 + b)));
    if (a > 1.0) {
        n += std::ceil(a * a + 6.0 * a);
    }
    if (n > kMaxTruncation) {
        throw TruncationError("drive too strong for the Fock oracle: needs " + std::to_string(static_cast<int>(n)) +
                              " levels, cap is " + std::to_string(kMaxTruncation));
    }
    return static_cast<int>(n);
}

DensityMatrix steady_state(const CavityConfig& config, int trunc) {
    config.validate();
    check_trunc(trunc);
    const int n = trunc;
    const SpMat op = liouvillian(config, n, true);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(op.rows());
    rhs(0) = 1.0;

    Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(op);
    Eigen::VectorXd x;
    bool solved = false;
    if (lu.info() == Eigen::Success) {
        x = lu.solve(rhs);
        solved = lu.info() == Eigen::Success && x.allFinite() && (op * x - rhs).lpNorm<Eigen::Infinity>() < 1e-10;
    }
    if (!solved) {
        x = relax_to_steady(config, n);
        x /= unvec(x, n).trace();
    }

    DensityMatrix rho(unvec(x, n));
    if (rho.tail_mass() > kTailTolerance) {
        throw TruncationError("steady state leaks into the top Fock levels (tail mass " +
                              detail::num(rho.tail_mass()) + " at N=" + std::to_string(n) + ")");
    }
    return rho;
}

ConvergedState converged_steady_state(const CavityConfig& config, double tolerance, std::optional<int> start) {
    int n = start ? *start : default_truncation(scale(config));
    check_trunc(n);
    for (;;) {
        std::optional<DensityMatrix> rho;
        try {
            rho.emplace(steady_state(config, n));
        } catch (const TruncationError&) {
            if (n == kMaxTruncation) throw;
            n = std::min(2 * n, kMaxTruncation);
            continue;
        }
        if (n == kMaxTruncation) {
            throw TruncationError("cannot confirm convergence: truncation cap reached");
        }
        const int wider = std::min(2 * n, kMaxTruncation);
        DensityMatrix rho2 = steady_state(config, wider);
        const MomentSet m1 = moments(*rho);
        const MomentSet m2 = moments(rho2);
        const double dev = std::max({std::abs(m1.mean_amp - m2.mean_amp), std::abs(m1.mean_sq - m2.mean_sq),
                                     std::abs(m1.mean_photon - m2.mean_photon)});
        if (dev < tolerance) {
            return {std::move(rho2), wider, dev};
        }
        n = wider;
    }
}

DensityMatrix propagate(const CavityConfig& config, int trunc, double t, double dt) {
    config.validate();
    check_trunc(trunc);
    if (!(dt > 0.0) || !(t >= 0.0) || !std::isfinite(t)) {
        throw StepError("propagation needs t >= 0 and dt > 0");
    }
    const SpMat op = liouvillian(config, trunc, false);
    Eigen::VectorXd x = vacuum_vec(trunc);
    const auto steps = static_cast<long>(std::ceil(t / dt - 1e-9));
    const double h = steps > 0 ? t / static_cast<double>(steps) : 0.0;
    for (long s = 0; s < steps; ++s) {
        rk4_step(op, x, h);
    }
    if (!x.allFinite()) {
        throw StepError("master-equation propagation diverged; reduce dt");
    }
    return DensityMatrix(unvec(x, trunc));
}

double mean_amp(const DensityMatrix& rho) {
    const auto& r = rho.elements();
    double s = 0.0;
    for (int i = 0; i + 1 < rho.dim(); ++i) s += std::sqrt(i + 1.0) * r(i + 1, i);
    return s;
}

double mean_sq(const DensityMatrix& rho) {
    const auto& r = rho.elements();
    double s = 0.0;
    for (int i = 0; i + 2 < rho.dim(); ++i) s += std::sqrt((i + 1.0) * (i + 2.0)) * r(i + 2, i);
    return s;
}

double mean_photon(const DensityMatrix& rho) {
    double s = 0.0;
    for (int i = 0; i < rho.dim(); ++i) s += i * rho.population(i);
    return s;
}

MomentSet moments(const DensityMatrix& rho) { return {mean_amp(rho), mean_sq(rho), mean_photon(rho)}; }

double quad_variance(const DensityMatrix& rho, Quadrature q) {
    // Operators built two levels wider so that X^2 is exact on the state's support.
    const int n = rho.dim();
    const int m = n + 2;
    Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(m, m);  // a
    for (int i = 0; i + 1 < m; ++i) lower(i, i + 1) = std::sqrt(i + 1.0);
    const Eigen::MatrixXd raise = lower.transpose();
    Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(m, m);
    padded.topLeftCorner(n, n) = rho.elements();
    if (q == Quadrature::plus) {
        const Eigen::MatrixXd x = lower + raise;
        const double mean = (padded * x).trace();
        return (padded * x * x).trace() - mean * mean;
    }
    // a_- = i(a^dag - a); with a real state <a_-> = 0 and a_-^2 = -(a^dag - a)^2.
    const Eigen::MatrixXd y = raise - lower;
    return -(padded * y * y).trace();
}

cplx char_fn(const DensityMatrix& rho, cplx z) {
    const int n = rho.dim();
    check_coherent_fits(std::norm(z), n, "characteristic function");
    const int m = n + 40 + static_cast<int>(std::ceil(4.0 * std::norm(z)));
    // Matrix elements of exp(c a^dag) are c^(k-j) sqrt(k!/j!) / (k-j)!, k >= j.
    auto raise_elem = [](cplx c, int k, int j) -> cplx {
        if (k < j) return 0.0;
        const int d = k - j;
        const double mag = 0.5 * (std::lgamma(k + 1.0) - std::lgamma(j + 1.0)) - std::lgamma(d + 1.0);
        return (d == 0 ? cplx(1.0) : std::pow(c, d)) * std::exp(mag);
    };
    // exp(-z* a)(j, k) = exp((-z*) a^dag)(k, j)
    Eigen::MatrixXcd left(n, m);
    Eigen::MatrixXcd right(m, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < m; ++k) {
            left(j, k) = raise_elem(-std::conj(z), k, j);
            right(k, j) = raise_elem(z, k, j);
        }
    }
    const Eigen::MatrixXcd op = left * right;
    return (rho.elements().cast<cplx>() * op).trace();
}

double husimi(const DensityMatrix& rho, cplx alpha) {
    const int n = rho.dim();
    check_coherent_fits(std::norm(alpha), n, "Husimi function");
    Eigen::VectorXcd c(n);
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (int i = 1; i < n; ++i) c(i) = c(i - 1) * alpha / std::sqrt(static_cast<double>(i));
    const cplx value = c.adjoint() * (rho.elements().cast<cplx>() * c);
    return value.real() * std::numbers::inv_pi;
}

MomentSet superposition_oracle(const CavityConfig& config, std::optional<int> trunc) {
    config.validate();
    const CavityConfig coherent{config.kappa, config.eps1, 0.0};
    const CavityConfig squeezed{config.kappa, 0.0, config.eps2};
    auto solve = [&](const CavityConfig& c) {
        return trunc ? moments(steady_state(c, *trunc)) : moments(converged_steady_state(c).rho);
    };
    return solve(coherent) + solve(squeezed);
}

}  // namespace superq::fock
