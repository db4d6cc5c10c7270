#pragma once

#include <map>
#include <string>
#include <vector>

#include "cylwig/dynamics.hpp"
#include "cylwig/field.hpp"
#include "cylwig/grid.hpp"

namespace cylwig {

struct ResidualStats {
    double max_abs = 0.0;
    double mean_abs = 0.0;
    std::map<std::string, double> term_norms;  // max-abs per physical term
    int n_theta = 0;
    int n_pbar = 0;
    double pbar_max = 0.0;
};

enum class PotentialForm {
    Shift,   // exact half-integer shift operators (production path)
    Series,  // classical drift + truncated odd-derivative series (diagnostic)
};

struct LiouvilleOptions {
    PotentialForm form = PotentialForm::Shift;
    int n_series = 4;  // series truncation, used by PotentialForm::Series
};

/// Wigner field of a density-convention matrix (no trace normalization),
/// tr[M V(theta,p)] as a shifted-sinc field.
ShiftedSincField field_from_density_matrix(const Eigen::MatrixXcd& m, int n_max);

/// Boundary "potential" b(theta, p): the vartheta = +-pi boundary difference
/// of the Wigner integrand, including its 1/(2pi)^2 normalization. Pure
/// imaginary for psi2 = psi1.
cd boundary_potential(const WaveFunction& psi2, const WaveFunction& psi1, double theta, double p, double hbar = 1.0);

/// Residual of the generalized transport equation
///   dV/dt + (p/I) dV/dtheta - sum_k dU_k/dtheta dV/dp
///     = quantum series (or exact shift form) + i (hbar/I) d(b)/dtheta
/// for the given field and its exact time derivative. Grid nodes at
/// theta = +-pi are rejected.
ResidualStats liouville_residual(const ShiftedSincField& v, const ShiftedSincField& v_dt, const PendulumModel& model,
                                 const PhaseSpaceGrid& grid, const LiouvilleOptions& opts = {});

// Convenience drivers: the time derivative comes from the spectral oracle.
ResidualStats liouville_residual_state(const WaveFunction& psi, const PendulumSolver& solver,
                                       const PhaseSpaceGrid& grid, const LiouvilleOptions& opts = {});
ResidualStats liouville_residual_pair(const WaveFunction& psi2, const WaveFunction& psi1, const PendulumSolver& solver,
                                      const PhaseSpaceGrid& grid, const LiouvilleOptions& opts = {});
ResidualStats liouville_residual_density(const MoyalCoefficients& rho, const PendulumSolver& solver,
                                         const PhaseSpaceGrid& grid, const LiouvilleOptions& opts = {});

std::vector<std::pair<double, ResidualStats>> liouville_residual_trajectory(const WaveFunction& psi0,
                                                                            const std::vector<double>& times,
                                                                            const PendulumSolver& solver,
                                                                            const PhaseSpaceGrid& grid,
                                                                            const LiouvilleOptions& opts = {});

/// Max-abs of the quantum side of the potential term evaluated with an
/// operator hbar decoupled from the field's hbar (for classical-limit
/// scaling sweeps; the field is held fixed).
double quantum_term_norm(const ShiftedSincField& v, const PendulumModel& model, const PhaseSpaceGrid& grid,
                         double hbar_op);

}  // namespace cylwig
