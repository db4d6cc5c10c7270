#include "cylwig/dynamics.hpp"

#include <cmath>

namespace cylwig {

EigenSystem eigensystem(const PendulumModel& model, int n_max) {
    const BandedOperator h = hamiltonian(model, n_max);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.dense());
    if (solver.info() != Eigen::Success) throw NumericError("hermitian eigensolver failed to converge");
    EigenSystem eig;
    eig.energies = solver.eigenvalues();
    eig.vectors = solver.eigenvectors();
    eig.n_max = n_max;
    eig.residual_bound = (h.dense() * eig.vectors - eig.vectors * eig.energies.asDiagonal()).cwiseAbs().maxCoeff();
    return eig;
}

WaveFunction eigenstate(const EigenSystem& eig, int j) {
    if (j < 0 || j >= eig.vectors.cols()) throw ParameterError("eigenstate index out of range");
    std::vector<cd> c(eig.vectors.rows());
    for (int i = 0; i < eig.vectors.rows(); ++i) c[i] = eig.vectors(i, j);
    return WaveFunction(eig.n_max, std::move(c));
}

bool eigensystem_converged(const PendulumModel& model, int n_max, int n_low, double tol) {
    const EigenSystem a = eigensystem(model, n_max);
    const EigenSystem b = eigensystem(model, 2 * n_max);
    for (int j = 0; j < n_low; ++j)
        if (std::abs(a.energies(j) - b.energies(j)) > tol) return false;
    return true;
}

PendulumSolver::PendulumSolver(PendulumModel model, int n_max)
    : model_(std::move(model)), n_max_(n_max), h_(hamiltonian(model_, n_max)), eig_(eigensystem(model_, n_max)) {}

Eigen::MatrixXcd PendulumSolver::propagator(double t) const {
    const double hbar = model_.hbar();
    Eigen::VectorXcd phases(eig_.energies.size());
    for (int j = 0; j < eig_.energies.size(); ++j) phases(j) = std::polar(1.0, -eig_.energies(j) * t / hbar);
    return eig_.vectors * phases.asDiagonal() * eig_.vectors.adjoint();
}

WaveFunction PendulumSolver::evolve(const WaveFunction& psi0, double t) const {
    if (psi0.n_max() != n_max_) throw ParameterError("cutoff mismatch");
    Eigen::VectorXcd c(psi0.size());
    for (int i = 0; i < psi0.size(); ++i) c(i) = psi0.coeffs()[i];
    Eigen::VectorXcd modal = eig_.vectors.adjoint() * c;
    for (int j = 0; j < modal.size(); ++j) modal(j) *= std::polar(1.0, -eig_.energies(j) * t / model_.hbar());
    const Eigen::VectorXcd out = eig_.vectors * modal;
    return WaveFunction(n_max_, std::vector<cd>(out.data(), out.data() + out.size()));
}

WaveFunction PendulumSolver::time_derivative(const WaveFunction& psi) const {
    WaveFunction hpsi = h_.apply(psi);
    WaveFunction out(n_max_);
    const cd factor = cd{0.0, -1.0} / model_.hbar();
    for (int n = -n_max_; n <= n_max_; ++n) out.set_coeff(n, factor * hpsi.coeff(n));
    return out;
}

MoyalCoefficients PendulumSolver::evolve_density(const MoyalCoefficients& rho0, double t) const {
    if (rho0.n_max() != n_max_) throw ParameterError("cutoff mismatch");
    const Eigen::MatrixXcd u = propagator(t);
    return MoyalCoefficients::density(n_max_, u * rho0.density_matrix() * u.adjoint());
}

Eigen::MatrixXcd PendulumSolver::density_time_derivative(const Eigen::MatrixXcd& rho) const {
    const cd factor = cd{0.0, -1.0} / model_.hbar();
    return factor * (h_.dense() * rho - rho * h_.dense());
}

MoyalCoefficients PendulumSolver::thermal_state(double beta) const {
    if (beta <= 0.0) throw ParameterError("beta must be positive");
    const double e0 = eig_.energies(0);
    Eigen::VectorXd w(eig_.energies.size());
    double z = 0.0;
    for (int j = 0; j < eig_.energies.size(); ++j) {
        w(j) = std::exp(-beta * (eig_.energies(j) - e0));
        z += w(j);
    }
    const Eigen::MatrixXcd rho = eig_.vectors * (w / z).asDiagonal() * eig_.vectors.adjoint();
    return MoyalCoefficients::density(n_max_, rho);
}

Eigen::MatrixXcd PendulumSolver::gibbs_operator(double beta) const {
    Eigen::VectorXd w(eig_.energies.size());
    for (int j = 0; j < eig_.energies.size(); ++j) w(j) = std::exp(-beta * eig_.energies(j));
    return eig_.vectors * w.asDiagonal() * eig_.vectors.adjoint();
}

double PendulumSolver::bloch_residual(double beta, double dbeta) const {
    if (beta <= dbeta) throw ParameterError("need beta > dbeta for the central difference");
    const Eigen::MatrixXcd omega = gibbs_operator(beta);
    const Eigen::MatrixXcd diff = (gibbs_operator(beta + dbeta) - gibbs_operator(beta - dbeta)) / (2.0 * dbeta);
    return (diff + h_.dense() * omega).norm();
}

}  // namespace cylwig
