#pragma once

#include <Eigen/Dense>

#include "cylwig/banded_operator.hpp"
#include "cylwig/constants.hpp"
#include "cylwig/kernel.hpp"
#include "cylwig/wave_function.hpp"

namespace cylwig {

/// Sorted eigenpairs of the truncated rotor Hamiltonian.
struct EigenSystem {
    Eigen::VectorXd energies;   // ascending
    Eigen::MatrixXcd vectors;   // columns, orthonormal
    int n_max = 0;
    double residual_bound = 0;  // max_j ||H v_j - E_j v_j||
};

EigenSystem eigensystem(const PendulumModel& model, int n_max);

WaveFunction eigenstate(const EigenSystem& eig, int j);

/// True when the lowest n_low eigenvalues agree between n_max and 2*n_max
/// within tol (the doubling check for truncation convergence).
bool eigensystem_converged(const PendulumModel& model, int n_max, int n_low, double tol);

/// Spectral solver: time evolution, thermal states and the Bloch residual
/// for one model at a fixed cutoff. Immutable after construction.
class PendulumSolver {
public:
    PendulumSolver(PendulumModel model, int n_max);

    const PendulumModel& model() const { return model_; }
    int n_max() const { return n_max_; }
    const EigenSystem& eigensystem() const { return eig_; }
    const BandedOperator& hamiltonian_matrix() const { return h_; }

    /// c(t) = exp(-i H t / hbar) c(0); unitary.
    WaveFunction evolve(const WaveFunction& psi0, double t) const;

    /// d/dt coefficients: -(i/hbar) H c.
    WaveFunction time_derivative(const WaveFunction& psi) const;

    /// rho(t) = U rho U^dagger.
    MoyalCoefficients evolve_density(const MoyalCoefficients& rho0, double t) const;

    /// -(i/hbar) [H, rho] as a density-convention matrix.
    Eigen::MatrixXcd density_time_derivative(const Eigen::MatrixXcd& rho) const;

    /// exp(-beta H) / Z. Weights are computed relative to the ground state,
    /// so large beta saturates to the ground projector instead of underflowing.
    MoyalCoefficients thermal_state(double beta) const;

    /// || (Omega(beta+d) - Omega(beta-d))/(2d) + H Omega(beta) ||_F, the
    /// finite-difference Bloch residual; O(d^2).
    double bloch_residual(double beta, double dbeta) const;

    Eigen::MatrixXcd propagator(double t) const;
    Eigen::MatrixXcd gibbs_operator(double beta) const;  // exp(-beta H), unnormalized

private:
    PendulumModel model_;
    int n_max_;
    BandedOperator h_;
    EigenSystem eig_;
};

}  // namespace cylwig
