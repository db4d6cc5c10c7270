#include "cylwig/energy.hpp"

#include <cmath>

namespace cylwig {

namespace {

void require_eigenstate(const WaveFunction& u, double e, const PendulumModel& model, double tol) {
    const BandedOperator h = hamiltonian(model, u.n_max());
    const WaveFunction hu = h.apply(u);
    double worst = 0.0;
    for (int n = -u.n_max(); n <= u.n_max(); ++n) worst = std::max(worst, std::abs(hu.coeff(n) - e * u.coeff(n)));
    if (worst > tol * std::max(1.0, std::abs(e)))
        throw ParameterError("input is not an eigenstate at the requested tolerance; residual would be meaningless");
}

WaveFunction phi_derivative(const WaveFunction& psi) {
    WaveFunction out(psi.n_max());
    for (int n = -psi.n_max(); n <= psi.n_max(); ++n) out.set_coeff(n, cd{0.0, static_cast<double>(n)} * psi.coeff(n));
    return out;
}

}  // namespace

ResidualStats energy_residual(const WaveFunction& u2, double e2, const WaveFunction& u1, double e1,
                              const PendulumModel& model, const PhaseSpaceGrid& grid, const LiouvilleOptions& opts,
                              double eigen_tol) {
    require_eigenstate(u2, e2, model, eigen_tol);
    require_eigenstate(u1, e1, model, eigen_tol);

    const double hbar = model.hbar();
    const double inertia = model.inertia();
    const double mean_energy = 0.5 * (e1 + e2);
    const std::size_t nt = grid.theta.size();
    const std::size_t np = grid.pbar.size();

    const ShiftedSincField v = ShiftedSincField::from_pair(u2, u1);
    const std::vector<cd> a_v = v.evaluate_grid(grid);
    const std::vector<cd> a_d2th = v.theta_derivative().theta_derivative().evaluate_grid(grid);
    const std::vector<cd> a_flow = v.evaluate_grid_sin_flow(grid);

    std::vector<cd> potential(grid.size(), cd{0.0, 0.0});
    std::vector<std::vector<cd>> even_derivs;
    if (opts.form == PotentialForm::Series) {
        for (int n = 1; n <= opts.n_series; ++n) even_derivs.push_back(v.evaluate_grid_dpbar(grid, 2 * n));
    }
    for (const auto& mode : model.modes()) {
        const int k = mode.k;
        std::vector<cd> shift_plus, shift_minus;
        if (opts.form == PotentialForm::Shift) {
            shift_plus = v.shifted_pbar(k).evaluate_grid(grid);
            shift_minus = v.shifted_pbar(-k).evaluate_grid(grid);
        }
        for (std::size_t row = 0; row < nt; ++row) {
            const double theta = grid.theta[row];
            const double uk = mode.a_cos * std::cos(k * theta) + mode.b_sin * std::sin(k * theta);
            for (std::size_t j = 0; j < np; ++j) {
                const std::size_t idx = row * np + j;
                if (opts.form == PotentialForm::Shift) {
                    potential[idx] += 0.5 * uk * (shift_plus[idx] + shift_minus[idx]);
                } else {
                    cd acc = a_v[idx];
                    double coef = 1.0;  // (k hbar/2)^{2n} / (2n)!
                    for (int n = 1; n <= opts.n_series; ++n) {
                        coef *= 0.25 * k * k * hbar * hbar / ((2.0 * n - 1.0) * 2.0 * n);
                        acc += coef * even_derivs[n - 1][idx] / std::pow(hbar, 2 * n);
                    }
                    potential[idx] += uk * acc;
                }
            }
        }
    }

    ResidualStats stats;
    stats.n_theta = static_cast<int>(nt);
    stats.n_pbar = static_cast<int>(np);
    stats.pbar_max = grid.pbar.empty() ? 0.0 : std::abs(grid.pbar.back());

    double sum_abs = 0.0;
    double kin_norm = 0.0, pot_norm = 0.0, bnd_norm = 0.0;
    for (std::size_t row = 0; row < nt; ++row)
        for (std::size_t j = 0; j < np; ++j) {
            const std::size_t idx = row * np + j;
            const double p = hbar * grid.pbar[j];
            const cd kinetic = (p * p / (2.0 * inertia)) * a_v[idx] - hbar * hbar / (8.0 * inertia) * a_d2th[idx];
            const cd boundary = -(hbar * hbar / (kTwoPi * inertia)) * a_flow[idx];
            const cd r = kinetic + potential[idx] + boundary - mean_energy * a_v[idx];
            kin_norm = std::max(kin_norm, std::abs(kinetic));
            pot_norm = std::max(pot_norm, std::abs(potential[idx]));
            bnd_norm = std::max(bnd_norm, std::abs(boundary));
            stats.max_abs = std::max(stats.max_abs, std::abs(r));
            sum_abs += std::abs(r);
        }
    stats.mean_abs = sum_abs / static_cast<double>(grid.size());
    stats.term_norms["kinetic"] = kin_norm;
    stats.term_norms["potential"] = pot_norm;
    stats.term_norms["boundary_flow"] = bnd_norm;
    return stats;
}

ResidualStats energy_residual(const PendulumSolver& solver, int j, int l, const PhaseSpaceGrid& grid,
                              const LiouvilleOptions& opts) {
    const auto& eig = solver.eigensystem();
    return energy_residual(eigenstate(eig, j), eig.energies(j), eigenstate(eig, l), eig.energies(l), solver.model(),
                           grid, opts);
}

ContinuityStats continuity_residual(const WaveFunction& u2, double e2, const WaveFunction& u1, double e1,
                                    const PendulumModel& model, const std::vector<double>& theta_nodes,
                                    double vartheta) {
    const double hbar = model.hbar();
    const double inertia = model.inertia();
    const WaveFunction d1 = phi_derivative(u1);
    const WaveFunction d2 = phi_derivative(u2);
    const WaveFunction dd1 = phi_derivative(d1);
    const WaveFunction dd2 = phi_derivative(d2);

    ContinuityStats stats;
    for (double theta : theta_nodes) {
        const double left = theta - 0.5 * vartheta;
        const double right = theta + 0.5 * vartheta;
        const cd rho = std::conj(u2.evaluate(left)) * u1.evaluate(right);
        const cd drho_dt = cd{0.0, (e2 - e1) / hbar} * rho;
        const cd dj_dtheta = hbar / (cd{0.0, 2.0} * inertia) *
                             (std::conj(u2.evaluate(left)) * dd1.evaluate(right) -
                              std::conj(dd2.evaluate(left)) * u1.evaluate(right));
        const cd raw = drho_dt + dj_dtheta;
        const cd source = cd{0.0, 1.0} / hbar * (model.potential(left) - model.potential(right)) * rho;
        stats.raw_max = std::max(stats.raw_max, std::abs(raw));
        stats.sourced_max = std::max(stats.sourced_max, std::abs(raw - source));
    }
    return stats;
}

}  // namespace cylwig
