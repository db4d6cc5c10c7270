#pragma once

#include <vector>

#include "cylwig/common.hpp"

namespace cylwig {

/// Rectangular evaluation grid: theta in [-pi, pi), pbar = p/hbar on a
/// symmetric window with uniform step.
struct PhaseSpaceGrid {
    std::vector<double> theta;
    std::vector<double> pbar;

    /// theta_i = -pi + i*2pi/n (endpoint-exclusive at pi, so trapezoid sums
    /// are exact Fourier quadrature); pbar symmetric inclusive.
    static PhaseSpaceGrid uniform(int n_theta, double pbar_max, int n_pbar);

    /// Same but with the theta nodes offset by half a step: no node at -pi/pi.
    static PhaseSpaceGrid interior(int n_theta, double pbar_max, int n_pbar);

    std::size_t size() const { return theta.size() * pbar.size(); }
    double theta_step() const;
    double pbar_step() const;
};

}  // namespace cylwig
