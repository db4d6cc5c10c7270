#pragma once

#include <functional>
#include <vector>

#include "cylwig/common.hpp"
#include "cylwig/kernel.hpp"
#include "cylwig/wave_function.hpp"

namespace cylwig {

/// Both marginal distributions of a state, in closed coefficient form.
struct Marginals {
    /// theta-marginal: |psi(theta)|^2 / 2pi.
    std::function<double(double)> theta_density;
    /// omega(pbar) = sum_n |c_n|^2 sinc(pi(pbar - n)): the sinc interpolation
    /// of the discrete angular-momentum probabilities.
    std::function<double(double)> momentum_density;
    /// The interpolation weights |c_n|^2, n in [-n_max, n_max].
    std::vector<double> weights;
    int n_max = 0;
};

Marginals marginals(const WaveFunction& psi);

/// sinc filter applied to the theta-integrated Moyal function; returns
/// conj(c2_m) c1_m. The filter integral is evaluated in closed form via the
/// shifted-sinc orthonormality.
cd momentum_filter(const WaveFunction& psi2, const WaveFunction& psi1, int m);

/// 2pi ∫∫ V_{psi2} V_{psi1} dtheta dpbar = |(psi2, psi1)|^2, in coefficient space.
double overlap(const WaveFunction& psi2, const WaveFunction& psi1);

/// ∫∫ V_psi^2 = 1/2pi for normalized psi.
double purity(const WaveFunction& psi);
/// (1/2pi) tr rho^2 <= 1/2pi.
double purity(const MoyalCoefficients& rho);

/// The orthogonality coefficient 2pi ∫∫ V_kl V_mn dtheta dpbar = delta_kn delta_lm,
/// evaluated in closed form (theta by Fourier orthogonality, pbar by the
/// shifted-sinc orthonormality).
double kernel_orthogonality(int k, int l, int m, int n);

/// The same quantity by finite-window quadrature plus tail correction.
double kernel_orthogonality_quadrature(int k, int l, int m, int n, double window = 256.0);

struct RecoveryOptions {
    double anchor_threshold = 1e-3;  // minimal |psi(0)|
    int pbar_samples = 1024;         // half-integer-spaced samples per side
    double hbar = 1.0;
};

/// Rebuilds the state from its Wigner function evaluator, up to a global
/// phase (fixed by making psi(0) real positive). The evaluator is sampled at
/// half-integer pbar with a smooth taper; coefficients are fitted on the
/// interior of the theta grid. Throws DegenerateAnchorError when |psi(0)| is
/// below the threshold.
WaveFunction recover_wavefunction(const std::function<double(double, double)>& wigner, int n_max,
                                  const std::vector<double>& theta_grid, const RecoveryOptions& opts = {});

}  // namespace cylwig
