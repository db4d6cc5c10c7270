#include "cylwig/liouville.hpp"

#include <cmath>

namespace cylwig {

ShiftedSincField field_from_density_matrix(const Eigen::MatrixXcd& m, int n_max) {
    const int dim = 2 * n_max + 1;
    if (m.rows() != dim || m.cols() != dim) throw ParameterError("matrix size does not match n_max");
    ShiftedSincField field;
    const double norm = 1.0 / kTwoPi;
    for (int i = -n_max; i <= n_max; ++i)
        for (int j = -n_max; j <= n_max; ++j) {
            const cd v = m(i + n_max, j + n_max);
            if (v != cd{0.0, 0.0}) field.add_term(i - j, i + j, v * norm);
        }
    field.compress();
    return field;
}

cd boundary_potential(const WaveFunction& psi2, const WaveFunction& psi1, double theta, double p, double hbar) {
    const double pbar = p / hbar;
    const cd upper = std::polar(1.0, -pbar * kPi) * std::conj(psi2.evaluate(theta - 0.5 * kPi)) *
                     psi1.evaluate(theta + 0.5 * kPi);
    const cd lower = std::polar(1.0, pbar * kPi) * std::conj(psi2.evaluate(theta + 0.5 * kPi)) *
                     psi1.evaluate(theta - 0.5 * kPi);
    return (upper - lower) / (kTwoPi * kTwoPi);
}

namespace {

void check_grid(const PhaseSpaceGrid& grid) {
    for (double t : grid.theta)
        if (std::abs(std::abs(t) - kPi) < 1e-14)
            throw ParameterError("grid node at theta = +-pi (boundary of the fundamental domain)");
}

struct Accumulated {
    std::vector<cd> residual;
    std::map<std::string, double> norms;
};

double max_abs(const std::vector<cd>& v) {
    double m = 0.0;
    for (const cd& x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

ResidualStats liouville_residual(const ShiftedSincField& v, const ShiftedSincField& v_dt, const PendulumModel& model,
                                 const PhaseSpaceGrid& grid, const LiouvilleOptions& opts) {
    check_grid(grid);
    const double hbar = model.hbar();
    const double inertia = model.inertia();
    const std::size_t nt = grid.theta.size();
    const std::size_t np = grid.pbar.size();

    const std::vector<cd> a_dt = v_dt.evaluate_grid(grid);
    const ShiftedSincField v_dtheta = v.theta_derivative();
    const std::vector<cd> a_dth = v_dtheta.evaluate_grid(grid);
    const std::vector<cd> a_dp1 = v.evaluate_grid_dpbar(grid, 1);  // d/dpbar
    const std::vector<cd> a_bnd = v_dtheta.evaluate_grid_sin(grid);

    // Potential term per mode.
    std::vector<cd> pot_full(grid.size(), cd{0.0, 0.0});
    std::vector<cd> pot_classical(grid.size(), cd{0.0, 0.0});
    std::vector<std::vector<cd>> odd_derivs;  // d^(2n+1)/dpbar^(2n+1), series form
    if (opts.form == PotentialForm::Series) {
        odd_derivs.push_back(a_dp1);
        for (int n = 1; n <= opts.n_series; ++n) odd_derivs.push_back(v.evaluate_grid_dpbar(grid, 2 * n + 1));
    }
    for (const auto& mode : model.modes()) {
        const int k = mode.k;
        std::vector<cd> shift_plus, shift_minus;
        if (opts.form == PotentialForm::Shift) {
            shift_plus = v.shifted_pbar(k).evaluate_grid(grid);    // V(theta, pbar + k/2)
            shift_minus = v.shifted_pbar(-k).evaluate_grid(grid);  // V(theta, pbar - k/2)
        }
        for (std::size_t row = 0; row < nt; ++row) {
            const double theta = grid.theta[row];
            const double du = k * (-mode.a_cos * std::sin(k * theta) + mode.b_sin * std::cos(k * theta));
            for (std::size_t j = 0; j < np; ++j) {
                const std::size_t idx = row * np + j;
                pot_classical[idx] += du / hbar * a_dp1[idx];  // dU/dtheta * dV/dp
                if (opts.form == PotentialForm::Shift) {
                    pot_full[idx] += du / (hbar * k) * (shift_plus[idx] - shift_minus[idx]);
                } else {
                    cd series = 0.0;
                    double coef = 1.0;  // (k hbar / 2)^{2n} / (2n+1)!
                    for (int n = 1; n <= opts.n_series; ++n) {
                        coef *= 0.25 * k * k * hbar * hbar / (2.0 * n * (2.0 * n + 1.0));
                        series += coef * odd_derivs[n][idx] / std::pow(hbar, 2 * n + 1);
                    }
                    pot_full[idx] += du / hbar * a_dp1[idx] + du * series;
                }
            }
        }
    }

    ResidualStats stats;
    stats.n_theta = static_cast<int>(nt);
    stats.n_pbar = static_cast<int>(np);
    stats.pbar_max = grid.pbar.empty() ? 0.0 : std::abs(grid.pbar.back());

    std::vector<cd> transport(grid.size());
    std::vector<cd> boundary(grid.size());
    std::vector<cd> residual(grid.size());
    double sum_abs = 0.0;
    for (std::size_t row = 0; row < nt; ++row)
        for (std::size_t j = 0; j < np; ++j) {
            const std::size_t idx = row * np + j;
            const double p = hbar * grid.pbar[j];
            transport[idx] = (p / inertia) * a_dth[idx];
            boundary[idx] = (hbar / (kPi * inertia)) * a_bnd[idx];
            residual[idx] = a_dt[idx] + transport[idx] - pot_full[idx] - boundary[idx];
            const double r = std::abs(residual[idx]);
            stats.max_abs = std::max(stats.max_abs, r);
            sum_abs += r;
        }
    stats.mean_abs = sum_abs / static_cast<double>(grid.size());

    std::vector<cd> quantum(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) quantum[i] = pot_full[i] - pot_classical[i];
    stats.term_norms["time_derivative"] = max_abs(a_dt);
    stats.term_norms["transport"] = max_abs(transport);
    stats.term_norms["potential_classical"] = max_abs(pot_classical);
    stats.term_norms["potential_quantum"] = max_abs(quantum);
    stats.term_norms["boundary"] = max_abs(boundary);
    return stats;
}

ResidualStats liouville_residual_state(const WaveFunction& psi, const PendulumSolver& solver,
                                       const PhaseSpaceGrid& grid, const LiouvilleOptions& opts) {
    return liouville_residual_pair(psi, psi, solver, grid, opts);
}

ResidualStats liouville_residual_pair(const WaveFunction& psi2, const WaveFunction& psi1, const PendulumSolver& solver,
                                      const PhaseSpaceGrid& grid, const LiouvilleOptions& opts) {
    const ShiftedSincField v = ShiftedSincField::from_pair(psi2, psi1);
    const WaveFunction d2 = solver.time_derivative(psi2);
    const WaveFunction d1 = solver.time_derivative(psi1);
    ShiftedSincField v_dt = ShiftedSincField::from_pair(d2, psi1);
    v_dt.add_scaled(ShiftedSincField::from_pair(psi2, d1), 1.0);
    return liouville_residual(v, v_dt, solver.model(), grid, opts);
}

ResidualStats liouville_residual_density(const MoyalCoefficients& rho, const PendulumSolver& solver,
                                         const PhaseSpaceGrid& grid, const LiouvilleOptions& opts) {
    const ShiftedSincField v = ShiftedSincField::from_moyal(rho);
    const ShiftedSincField v_dt =
        field_from_density_matrix(solver.density_time_derivative(rho.density_matrix()), rho.n_max());
    return liouville_residual(v, v_dt, solver.model(), grid, opts);
}

std::vector<std::pair<double, ResidualStats>> liouville_residual_trajectory(const WaveFunction& psi0,
                                                                            const std::vector<double>& times,
                                                                            const PendulumSolver& solver,
                                                                            const PhaseSpaceGrid& grid,
                                                                            const LiouvilleOptions& opts) {
    std::vector<std::pair<double, ResidualStats>> out;
    out.reserve(times.size());
    for (double t : times) {
        const WaveFunction psi = solver.evolve(psi0, t);
        out.emplace_back(t, liouville_residual_state(psi, solver, grid, opts));
    }
    return out;
}

double quantum_term_norm(const ShiftedSincField& v, const PendulumModel& model, const PhaseSpaceGrid& grid,
                         double hbar_op) {
    // Field pbar axis uses the model's own hbar; only the operator hbar is swept.
    const double hbar_field = model.hbar();
    double worst = 0.0;
    for (double theta : grid.theta) {
        for (double pbar : grid.pbar) {
            cd q = 0.0;
            for (const auto& mode : model.modes()) {
                const int k = mode.k;
                const double du = k * (-mode.a_cos * std::sin(k * theta) + mode.b_sin * std::cos(k * theta));
                const double shift = 0.5 * k * hbar_op / hbar_field;  // in pbar units
                const cd full = du / (hbar_op * k) * (v.evaluate(theta, pbar + shift) - v.evaluate(theta, pbar - shift));
                const cd classical = du / hbar_field * v.evaluate_dpbar(theta, pbar, 1);
                q += full - classical;
            }
            worst = std::max(worst, std::abs(q));
        }
    }
    return worst;
}

}  // namespace cylwig
