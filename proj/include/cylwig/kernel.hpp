#pragma once

#include <Eigen/Dense>

#include "cylwig/common.hpp"
#include "cylwig/wave_function.hpp"

namespace cylwig {

/// Kernel matrix element
///   V_mn(theta, p) = (1/2pi) e^{i(n-m)theta} sinc(pi*(p/hbar - (m+n)/2)).
/// 2pi-periodic in theta; V_mn = conj(V_nm).
cd kernel(int m, int n, double theta, double p, double hbar = 1.0);

/// Bilinear coefficient matrix of a Moyal pair, M_mn = conj(c2_m) c1_n, or of
/// a density operator (stored transposed so the same contraction applies).
class MoyalCoefficients {
public:
    static MoyalCoefficients pair(const WaveFunction& psi2, const WaveFunction& psi1);
    static MoyalCoefficients pure(const WaveFunction& psi) { return pair(psi, psi); }

    /// rho is the density matrix rho_mn (hermitian, unit trace within
    /// trace_tol). Throws ValidationError otherwise.
    static MoyalCoefficients density(int n_max, const Eigen::MatrixXcd& rho, double trace_tol = 1e-10);

    int n_max() const { return n_max_; }
    /// M_mn in the pair convention (for a density this is rho_nm).
    cd coeff(int m, int n) const { return m_(m + n_max_, n + n_max_); }
    const Eigen::MatrixXcd& matrix() const { return m_; }
    /// Density matrix view rho_mn = M_nm.
    Eigen::MatrixXcd density_matrix() const { return m_.transpose(); }

    cd trace() const { return m_.trace(); }
    bool is_hermitian(double tol = 1e-12) const;

private:
    MoyalCoefficients(int n_max, Eigen::MatrixXcd m) : n_max_(n_max), m_(std::move(m)) {}
    int n_max_;
    Eigen::MatrixXcd m_;
};

/// Moyal function V_{psi2 psi1}(theta, p) = sum conj(c2_m) V_mn c1_n.
cd moyal_eval(const WaveFunction& psi2, const WaveFunction& psi1, double theta, double p, double hbar = 1.0);

/// Wigner function of a pure state; real by construction.
double wigner_eval(const WaveFunction& psi, double theta, double p, double hbar = 1.0);

/// Wigner function of a mixed state, tr[rho V(theta,p)]. Validates the
/// density invariants (unit trace, hermitian).
double wigner_from_density(const MoyalCoefficients& rho, double theta, double p, double hbar = 1.0);

/// Independent cross-check: the defining integral
///   (1/2pi) ∫ dvartheta/2pi e^{-i p vartheta/hbar} conj(psi2(theta-vartheta/2)) psi1(theta+vartheta/2)
/// by panel quadrature.
cd moyal_eval_quadrature(const WaveFunction& psi2, const WaveFunction& psi1, double theta, double p,
                         double hbar = 1.0, int panels = 96, int nodes_per_panel = 10);

}  // namespace cylwig
