#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "superq/moments.hpp"
#include "superq/params.hpp"

/// Brute-force reference: the driven damped cavity solved as a Lindblad
/// master equation in a truncated number basis.
///
/// With H = i eps1 (a^dag - a) + (i eps2 / 2)(a^2 - a^dag 2) every matrix in
/// the number basis is real, so density matrices are stored as real
/// symmetric matrices.
namespace superq::fock {

/// Tail-mass bound: population of the top 10% of levels.
inline constexpr double kTailTolerance = 1e-8;
inline constexpr int kMinTruncation = 8;
inline constexpr int kMaxTruncation = 200;

class DensityMatrix {
public:
    /**
     * Validates Hermiticity (1e-12), unit trace (1e-10) and positivity
     * (eigenvalues >= -1e-10); throws SolveError otherwise. Does not check
     * the tail mass; see tail_mass().
     */
    explicit DensityMatrix(Eigen::MatrixXd elements);

    int dim() const noexcept { return static_cast<int>(rho_.rows()); }
    const Eigen::MatrixXd& elements() const noexcept { return rho_; }

    double trace() const noexcept { return rho_.trace(); }
    double population(int n) const { return rho_(n, n); }
    double tail_mass() const noexcept;
    double min_eigenvalue() const;

private:
    Eigen::MatrixXd rho_;
};

/// Truncation rule: 40 levels for b <= 0.8, ceil(40/(1-b^2)) above, widened
/// for strong coherent drive. Throws TruncationError past kMaxTruncation.
int default_truncation(const ScaledParams& params);

/**
 * Steady state at a fixed truncation: the vectorized Liouvillian with one
 * population equation swapped for the trace constraint is factorized with
 * sparse LU; long-time propagation is the fallback if that fails.
 * Throws DomainError for trunc < 8 or > 200, TruncationError when the tail
 * mass exceeds kTailTolerance and SolveError when no unique state is found.
 */
DensityMatrix steady_state(const CavityConfig& config, int trunc);

struct ConvergedState {
    DensityMatrix rho;
    int trunc;
    /// Largest moment change between the two truncations compared.
    double deviation;
};

/**
 * Starts from default_truncation (or `start`) and doubles until the moments
 * at N and 2N agree within `tolerance` and the tail mass is small. Returns the
 * state at the larger truncation. Throws TruncationError when the cap is hit.
 */
ConvergedState converged_steady_state(const CavityConfig& config, double tolerance = 1e-8,
                                      std::optional<int> start = std::nullopt);

/// Fixed-step RK4 propagation of the master equation from the vacuum to time t.
DensityMatrix propagate(const CavityConfig& config, int trunc, double t, double dt);

double mean_amp(const DensityMatrix& rho);
double mean_sq(const DensityMatrix& rho);
double mean_photon(const DensityMatrix& rho);
MomentSet moments(const DensityMatrix& rho);

/// Symmetrized variance <a_q^2> - <a_q>^2 of a single beam.
double quad_variance(const DensityMatrix& rho, Quadrature q);

/// <exp(-z* a) exp(z a^dag)>. Throws TruncationError if |z| is too large for the basis.
std::complex<double> char_fn(const DensityMatrix& rho, std::complex<double> z);

/// <alpha|rho|alpha> / pi. Throws TruncationError if |alpha| is too large for the basis.
double husimi(const DensityMatrix& rho, std::complex<double> alpha);

/// Sum of the moments of the coherent-only (eps2 = 0) and squeezed-only
/// (eps1 = 0) steady states.
MomentSet superposition_oracle(const CavityConfig& config, std::optional<int> trunc = std::nullopt);

}  // namespace superq::fock
