#pragma once

#include "cylwig/dynamics.hpp"
#include "cylwig/grid.hpp"
#include "cylwig/liouville.hpp"

namespace cylwig {

/// Residual of the stationary energy equation for a Moyal pair of
/// eigenstates (u2, E2), (u1, E1):
///   { p^2/(2I) - hbar^2/(8I) d2/dtheta2 } V
///   + sum_k U_k(theta) cosh((k hbar/2) d/dp) V      (exact shift form)
///   + boundary flow term  =  (E1+E2)/2 V.
/// Inputs must satisfy H u = E u within eigen_tol, else ParameterError.
ResidualStats energy_residual(const WaveFunction& u2, double e2, const WaveFunction& u1, double e1,
                              const PendulumModel& model, const PhaseSpaceGrid& grid,
                              const LiouvilleOptions& opts = {}, double eigen_tol = 1e-8);

/// Convenience: eigenpair (j, l) of a solved system.
ResidualStats energy_residual(const PendulumSolver& solver, int j, int l, const PhaseSpaceGrid& grid,
                              const LiouvilleOptions& opts = {});

struct ContinuityStats {
    double raw_max = 0.0;      // max |d rho21/dt + d j21/dtheta|
    double sourced_max = 0.0;  // same minus the split-argument potential source
};

/// Continuity diagnostics for the pair density rho21(theta; vartheta) and
/// current j21 built from eigenstates. The raw residual vanishes when the two
/// potential evaluations coincide (free rotor, or vartheta = 0); the source
/// term (i/hbar)[U(theta-vartheta/2) - U(theta+vartheta/2)] rho21 accounts
/// for the rest.
ContinuityStats continuity_residual(const WaveFunction& u2, double e2, const WaveFunction& u1, double e1,
                                    const PendulumModel& model, const std::vector<double>& theta_nodes,
                                    double vartheta);

}  // namespace cylwig
