#include "cylwig/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cylwig/dynamics.hpp"
#include "cylwig/energy.hpp"
#include "cylwig/field.hpp"
#include "cylwig/liouville.hpp"
#include "cylwig/sinc.hpp"
#include "cylwig/star.hpp"
#include "cylwig/weyl.hpp"
#include "cylwig/wigner_ops.hpp"

namespace cylwig {

namespace {

constexpr std::uint64_t kSeed = 0x5eedc11d2024ULL;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

CheckResult make_result(std::string name, std::string suite, double measured, double tolerance, std::string detail = "") {
    CheckResult r;
    r.name = std::move(name);
    r.suite = std::move(suite);
    r.measured = measured;
    r.tolerance = tolerance;
    r.passed = measured <= tolerance;
    r.detail = std::move(detail);
    return r;
}

// Dyadic random coefficients keep the symbol algebra exact in binary.
cd dyadic_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-16, 16);
    return cd(d(rng) / 8.0, d(rng) / 8.0);
}

PhaseSpaceSymbol random_symbol(std::mt19937_64& rng, int max_mode, int max_deg) {
    PhaseSpaceSymbol s;
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (int k = -max_mode; k <= max_mode; ++k) {
        std::vector<cd> c(deg(rng) + 1);
        for (auto& v : c) v = dyadic_coeff(rng);
        Polynomial p(std::move(c));
        if (!p.is_zero()) s.add_term(k, p);
    }
    if (s.is_zero()) s.add_term(0, Polynomial::constant(1.0));
    return s;
}

// ------------------------------------------------------------------ kernel

std::vector<CheckResult> check_kernel() {
    std::vector<CheckResult> out;
    double worst_closed = 0.0;
    for (int k = -8; k <= 8; ++k)
        for (int l = -8; l <= 8; ++l)
            for (int m = -8; m <= 8; ++m)
                for (int n = -8; n <= 8; ++n) {
                    const double expected = (k == n && l == m) ? 1.0 : 0.0;
                    worst_closed = std::max(worst_closed, std::abs(kernel_orthogonality(k, l, m, n) - expected));
                }
    out.push_back(make_result("kernel-orthogonality-closed-form", "kernel", worst_closed, 0.0,
                              "all |k|,|l|,|m|,|n| <= 8"));

    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<int> idx(-8, 8);
    double worst_quad = 0.0;
    std::vector<std::array<int, 4>> tuples = {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {2, -3, -3, 2}, {1, 1, 1, 1}};
    for (int i = 0; i < 30; ++i) tuples.push_back({idx(rng), idx(rng), idx(rng), idx(rng)});
    for (const auto& t : tuples) {
        const double expected = (t[0] == t[3] && t[1] == t[2]) ? 1.0 : 0.0;
        worst_quad = std::max(worst_quad, std::abs(kernel_orthogonality_quadrature(t[0], t[1], t[2], t[3]) - expected));
    }
    out.push_back(make_result("kernel-orthogonality-quadrature", "kernel", worst_quad, 1e-6,
                              std::to_string(tuples.size()) + " sampled tuples, window 256"));
    return out;
}

// ------------------------------------------------------------------ wigner

std::vector<CheckResult> check_wigner() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(kSeed + 1);
    double worst_norm = 0.0, worst_purity = 0.0, worst_overlap = 0.0;
    for (int i = 0; i < 100; ++i) {
        const WaveFunction psi = WaveFunction::random(12, rng);
        const auto field = ShiftedSincField::from_wavefunction(psi);
        worst_norm = std::max(worst_norm, std::abs(field.integral().real() - 1.0));
        worst_purity = std::max(worst_purity, std::abs(purity(psi) - 1.0 / kTwoPi));
    }
    out.push_back(make_result("wigner-normalization", "wigner", worst_norm, 1e-12, "100 random states, n_max 12"));
    out.push_back(make_result("wigner-purity", "wigner", worst_purity, 1e-12));
    for (int i = 0; i < 100; ++i) {
        const WaveFunction a = WaveFunction::random(10, rng);
        const WaveFunction b = WaveFunction::random(10, rng);
        worst_overlap = std::max(worst_overlap, std::abs(overlap(a, b) - std::norm(inner_product(a, b))));
    }
    out.push_back(make_result("wigner-overlap-identity", "wigner", worst_overlap, 1e-10, "100 random pairs"));
    return out;
}

// -------------------------------------------------------------------- weyl

double symbol_distance(const BandedOperator& a, const PhaseSpaceSymbol& expected, double hbar = 1.0) {
    const auto res = weyl_symbol(a, {.hbar = hbar});
    if (!res.exact()) return 1e300;
    return res.symbol->max_coeff_distance(expected);
}

std::vector<CheckResult> check_weyl() {
    std::vector<CheckResult> out;
    const int n_max = 12;
    const double hbar = 1.0;
    const PendulumModel pend = PendulumModel::pendulum(1.0, 1.0, hbar);  // gamma = 1/2

    double worst = 0.0;
    worst = std::max(worst, symbol_distance(cos_operator(n_max), PhaseSpaceSymbol::cos_term(1)));
    worst = std::max(worst, symbol_distance(sin_operator(n_max), PhaseSpaceSymbol::sin_term(1)));
    worst = std::max(worst, symbol_distance(angular_momentum(n_max, hbar), PhaseSpaceSymbol::p_power(1)));
    worst = std::max(worst, symbol_distance(angular_momentum_squared(n_max, hbar), PhaseSpaceSymbol::p_power(2)));
    for (int k = 1; k <= 5; ++k)
        worst = std::max(worst, symbol_distance(cos_k_operator(k, n_max), PhaseSpaceSymbol::cos_term(k)));
    // H -> gamma p^2 + U(theta)
    const PhaseSpaceSymbol h_expected =
        PhaseSpaceSymbol::p_power(2, pend.gamma()) + PhaseSpaceSymbol::cos_term(1, 0, -1.0);
    worst = std::max(worst, symbol_distance(hamiltonian(pend, n_max), h_expected));
    // LC -> p cos t + i (hbar/2) sin t ; CL -> p cos t - i (hbar/2) sin t
    const auto l = angular_momentum(n_max, hbar);
    const auto c = cos_operator(n_max);
    const PhaseSpaceSymbol lc_expected =
        PhaseSpaceSymbol::cos_term(1, 1) + PhaseSpaceSymbol::sin_term(1, 0, cd{0.0, 0.5 * hbar});
    const PhaseSpaceSymbol cl_expected =
        PhaseSpaceSymbol::cos_term(1, 1) + PhaseSpaceSymbol::sin_term(1, 0, cd{0.0, -0.5 * hbar});
    worst = std::max(worst, symbol_distance(op_mul(l, c).op, lc_expected));
    worst = std::max(worst, symbol_distance(op_mul(c, l).op, cl_expected));
    // [L,C] -> i hbar sin t ; {L,C} -> 2 p cos t
    worst = std::max(worst, symbol_distance(commutator(l, c).op, PhaseSpaceSymbol::sin_term(1, 0, cd{0.0, hbar})));
    worst = std::max(worst, symbol_distance(anticommutator(l, c).op, PhaseSpaceSymbol::cos_term(1, 1, 2.0)));
    out.push_back(make_result("weyl-symbol-table", "weyl", worst, 0.0, "C,S,L,L2,C^(k),H,LC,CL,[L,C],{L,C}"));

    // Quantization round trips.
    std::mt19937_64 rng(kSeed + 2);
    double worst_op = 0.0;
    std::vector<BandedOperator> ops = {cos_operator(n_max),
                                       sin_operator(n_max),
                                       angular_momentum(n_max, hbar),
                                       angular_momentum_squared(n_max, hbar),
                                       hamiltonian(pend, n_max),
                                       op_mul(l, c).op,
                                       op_mul(c, l).op};
    for (int i = 0; i < 50; ++i) ops.push_back(weyl_quantize(random_symbol(rng, 4, 4), n_max, hbar));
    for (const auto& a : ops) {
        const auto sym = weyl_symbol(a, {.hbar = hbar});
        if (!sym.exact()) {
            worst_op = 1e300;
            break;
        }
        const BandedOperator back = weyl_quantize(*sym.symbol, n_max, hbar);
        const int safe = n_max - a.bandwidth();
        for (int m = -safe; m <= safe; ++m)
            for (int n = -safe; n <= safe; ++n) worst_op = std::max(worst_op, std::abs(back.entry(m, n) - a.entry(m, n)));
    }
    out.push_back(make_result("weyl-quantize-of-symbol", "weyl", worst_op, 1e-12,
                              "operator set + 50 random banded matrices, interior entries"));

    double worst_sym = 0.0;
    for (int i = 0; i < 50; ++i) {
        const PhaseSpaceSymbol s = random_symbol(rng, 4, 4);
        const auto back = weyl_symbol(weyl_quantize(s, n_max, hbar), {.hbar = hbar});
        worst_sym = std::max(worst_sym, back.exact() ? back.symbol->max_coeff_distance(s) : 1e300);
    }
    out.push_back(make_result("weyl-symbol-of-quantize", "weyl", worst_sym, 1e-12, "50 random symbols |k|<=4, deg<=4"));

    double worst_p2 = 0.0;
    const BandedOperator p2 = weyl_quantize(PhaseSpaceSymbol::p_power(2), n_max, hbar);
    for (int m = -n_max; m <= n_max; ++m)
        for (int n = -n_max; n <= n_max; ++n) {
            const cd expected = m == n ? cd{hbar * hbar * m * m, 0.0} : cd{0.0, 0.0};
            worst_p2 = std::max(worst_p2, std::abs(p2.entry(m, n) - expected));
        }
    out.push_back(make_result("weyl-quantize-p-squared", "weyl", worst_p2, 0.0, "p^2 -> hbar^2 m^2 delta_mn"));
    return out;
}

// -------------------------------------------------------------------- star

std::vector<CheckResult> check_star() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(kSeed + 3);
    const double hbar = 1.0;
    const int n_max = 16;

    double worst_hom = 0.0;
    for (int i = 0; i < 50; ++i) {
        const PhaseSpaceSymbol a = random_symbol(rng, 3, 3);
        const PhaseSpaceSymbol b = random_symbol(rng, 3, 3);
        const BandedOperator lhs = weyl_quantize(star(a, b, hbar), n_max, hbar);
        const BandedOperator rhs = op_mul(weyl_quantize(a, n_max, hbar), weyl_quantize(b, n_max, hbar)).op;
        const int safe = n_max - 7;
        for (int m = -safe; m <= safe; ++m)
            for (int n = -safe; n <= safe; ++n) worst_hom = std::max(worst_hom, std::abs(lhs.entry(m, n) - rhs.entry(m, n)));
    }
    out.push_back(make_result("star-homomorphism", "star", worst_hom, 1e-10, "50 random pairs |k|<=3, deg<=3"));

    double worst_assoc = 0.0;
    for (int i = 0; i < 50; ++i) {
        const PhaseSpaceSymbol a = random_symbol(rng, 3, 3);
        const PhaseSpaceSymbol b = random_symbol(rng, 3, 3);
        const PhaseSpaceSymbol c = random_symbol(rng, 3, 3);
        worst_assoc =
            std::max(worst_assoc, star(star(a, b, hbar), c, hbar).max_coeff_distance(star(a, star(b, c, hbar), hbar)));
    }
    out.push_back(make_result("star-associativity", "star", worst_assoc, 0.0, "50 random triples, dyadic data"));

    const PhaseSpaceSymbol p = PhaseSpaceSymbol::p_power(1);
    const PhaseSpaceSymbol cos1 = PhaseSpaceSymbol::cos_term(1);
    const PhaseSpaceSymbol expected_pc =
        PhaseSpaceSymbol::cos_term(1, 1) + PhaseSpaceSymbol::sin_term(1, 0, cd{0.0, 0.5 * hbar});
    const PhaseSpaceSymbol expected_cp =
        PhaseSpaceSymbol::cos_term(1, 1) + PhaseSpaceSymbol::sin_term(1, 0, cd{0.0, -0.5 * hbar});
    double worst_ex = std::max(star(p, cos1, hbar).max_coeff_distance(expected_pc),
                               star(cos1, p, hbar).max_coeff_distance(expected_cp));
    worst_ex = std::max(worst_ex,
                        star_commutator(p, cos1, hbar).max_coeff_distance(PhaseSpaceSymbol::sin_term(1, 0, cd{0.0, hbar})));
    worst_ex = std::max(
        worst_ex, star_anticommutator(p, cos1, hbar).max_coeff_distance(PhaseSpaceSymbol::cos_term(1, 1, 2.0)));
    out.push_back(make_result("star-elementary-products", "star", worst_ex, 0.0, "p*cos, cos*p, commutators"));
    return out;
}

// --------------------------------------------------------------- liouville

std::vector<CheckResult> check_liouville() {
    std::vector<CheckResult> out;

    {
        // Free rotor, two-mode state: transport balances the boundary term.
        const PendulumModel model = PendulumModel::free_rotor(1.0, 1.0);
        const PendulumSolver solver(model, 8);
        WaveFunction psi0(8);
        psi0.set_coeff(1, 1.0 / std::sqrt(2.0));
        psi0.set_coeff(4, 1.0 / std::sqrt(2.0));
        const WaveFunction psi = solver.evolve(psi0, 0.3);
        const auto grid = PhaseSpaceGrid::interior(64, 4.0, 161);
        const auto stats = liouville_residual_state(psi, solver, grid);
        out.push_back(make_result("liouville-free-rotor", "liouville", stats.max_abs, 1e-10,
                                  "two-mode state, 64x161 grid"));
    }

    {
        const PendulumModel model = PendulumModel::pendulum(1.0, 1.0, 1.0);  // gamma = 1/2, A = 1
        const PendulumSolver solver(model, 32);
        WaveFunction psi0(32);
        for (int n = -32; n <= 32; ++n) psi0.set_coeff(n, std::exp(-std::pow(n / 2.5, 2)));
        psi0 = psi0.normalized();
        double worst = 0.0;
        const auto grid = PhaseSpaceGrid::interior(64, 6.0, 161);
        for (double t : {0.2, 0.4, 0.6, 0.8, 1.0}) {
            const WaveFunction psi = solver.evolve(psi0, t);
            worst = std::max(worst, liouville_residual_state(psi, solver, grid).max_abs);
        }
        out.push_back(make_result("liouville-pendulum-evolved", "liouville", worst, 1e-9,
                                  "gamma=1/2, A=1, n_max=32, 5 sampled times in [0,1]"));

        const WaveFunction psi = solver.evolve(psi0, 0.5);
        const auto grid2 = PhaseSpaceGrid::interior(32, 4.0, 81);
        const double r2 = liouville_residual_state(psi, solver, grid2, {PotentialForm::Series, 2}).max_abs;
        const double r6 = liouville_residual_state(psi, solver, grid2, {PotentialForm::Series, 6}).max_abs;
        out.push_back(make_result("liouville-series-convergence", "liouville", r6 / r2, 1e-4,
                                  "residual(n_series=6)/residual(n_series=2), measured r2=" + fmt(r2)));
    }
    return out;
}

// ----------------------------------------------------------------- density

std::vector<CheckResult> check_density() {
    std::vector<CheckResult> out;
    const PendulumModel model = PendulumModel::pendulum(1.0, 1.0, 1.0);
    const int n_max = 16;
    const PendulumSolver solver(model, n_max);

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2 * n_max + 1, 2 * n_max + 1);
    double z = 0.0;
    for (int m = -n_max; m <= n_max; ++m) z += std::exp(-0.3 * m * m);
    for (int m = -n_max; m <= n_max; ++m) rho(m + n_max, m + n_max) = std::exp(-0.3 * m * m) / z;
    const MoyalCoefficients diag = MoyalCoefficients::density(n_max, rho);

    const auto grid = PhaseSpaceGrid::interior(48, 5.0, 129);
    const auto stats = liouville_residual_density(diag, solver, grid);
    out.push_back(make_result("density-diagonal-equation", "density", stats.max_abs, 1e-9,
                              "von Neumann d/dt vs shift-form RHS at t=0"));

    // hbar scaling of the quantum side, field held fixed.
    const ShiftedSincField v = ShiftedSincField::from_moyal(diag);
    const auto small = PhaseSpaceGrid::interior(16, 4.0, 33);
    std::vector<double> hs = {1.0, 0.5, 0.25, 0.125};
    std::vector<double> logs;
    for (double h : hs) logs.push_back(std::log(quantum_term_norm(v, model, small, h)));
    // least-squares slope of log(Q) vs log(hbar)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const double x = std::log(hs[i]);
        sx += x;
        sy += logs[i];
        sxx += x * x;
        sxy += x * logs[i];
    }
    const double n = static_cast<double>(hs.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    out.push_back(make_result("density-hbar-scaling", "density", std::abs(slope - 2.0), 0.1,
                              "measured exponent " + fmt(slope)));
    return out;
}

// ------------------------------------------------------------------ energy

std::vector<CheckResult> check_energy() {
    std::vector<CheckResult> out;
    const PendulumModel model = PendulumModel::pendulum(1.0, 1.0, 1.0);
    const PendulumSolver solver(model, 32);
    const auto grid = PhaseSpaceGrid::interior(48, 6.0, 129);

    double worst = 0.0;
    for (int j = 0; j < 4; ++j) worst = std::max(worst, energy_residual(solver, j, j, grid).max_abs);
    for (const auto& [j, l] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}})
        worst = std::max(worst, energy_residual(solver, j, l, grid).max_abs);
    out.push_back(make_result("energy-pendulum-residual", "energy", worst, 1e-8,
                              "4 lowest eigenstates + 3 Moyal pairs, n_max=32"));

    // Continuity where the identity is exact: pendulum at vartheta = 0 and
    // the free rotor at the boundary vartheta = +-pi.
    std::vector<double> theta_nodes;
    for (int i = 0; i < 41; ++i) theta_nodes.push_back(-kPi + (i + 0.5) * kTwoPi / 41);
    double worst_cont = 0.0;
    const auto& eig = solver.eigensystem();
    for (const auto& [j, l] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}) {
        worst_cont = std::max(worst_cont, continuity_residual(eigenstate(eig, j), eig.energies(j), eigenstate(eig, l),
                                                              eig.energies(l), model, theta_nodes, 0.0)
                                              .raw_max);
    }
    const PendulumModel free_model = PendulumModel::free_rotor(1.0, 1.0);
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{0, 1}, {-2, 3}}) {
        const WaveFunction um = WaveFunction::basis(m, 8);
        const WaveFunction un = WaveFunction::basis(n, 8);
        const double em = free_model.gamma() * m * m;
        const double en = free_model.gamma() * n * n;
        for (double vt : {kPi, -kPi})
            worst_cont =
                std::max(worst_cont, continuity_residual(um, em, un, en, free_model, theta_nodes, vt).raw_max);
    }
    out.push_back(make_result("energy-continuity", "energy", worst_cont, 1e-10,
                              "pendulum pairs at vartheta=0; free rotor at vartheta=+-pi"));

    double worst_free = 0.0;
    const PendulumSolver free_solver(free_model, 8);
    for (int m : {0, 1, 3}) {
        const WaveFunction u = WaveFunction::basis(m, 8);
        const double e = free_model.gamma() * m * m;
        worst_free = std::max(worst_free, energy_residual(u, e, u, e, free_model, grid).max_abs);
    }
    out.push_back(make_result("energy-free-rotor-exact", "energy", worst_free, 1e-12,
                              "closed-form cancellation for basis states"));
    return out;
}

// ---------------------------------------------------------------- recovery

std::vector<CheckResult> check_recovery() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(kSeed + 4);
    const int n_max = 6;
    std::vector<double> theta_grid;
    for (int i = 0; i < 64; ++i) theta_grid.push_back(-kPi + (i + 0.5) * kTwoPi / 64);

    double worst = 0.0;
    int produced = 0;
    while (produced < 20) {
        const WaveFunction psi = WaveFunction::random(n_max, rng);
        if (std::abs(psi.evaluate(0.0)) <= 0.1) continue;
        ++produced;
        const auto field = ShiftedSincField::from_wavefunction(psi);
        const auto wigner = [&field](double theta, double p) { return field.evaluate(theta, p).real(); };
        RecoveryOptions opts;
        opts.pbar_samples = 768;
        const WaveFunction rec = recover_wavefunction(wigner, n_max, theta_grid, opts);
        worst = std::max(worst, 1.0 - std::abs(inner_product(rec, psi)));
    }
    out.push_back(make_result("recovery-round-trip", "recovery", worst, 1e-8,
                              "20 random states with |psi(0)| > 0.1; 1 - fidelity"));
    return out;
}

// --------------------------------------------------------------- marginals

std::vector<CheckResult> check_marginals() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(kSeed + 5);
    double worst_theta = 0.0, worst_filter = 0.0;
    for (int i = 0; i < 40; ++i) {
        const WaveFunction psi = WaveFunction::random(10, rng);
        const auto field = ShiftedSincField::from_wavefunction(psi);
        // theta marginal via the field's exact pbar integral: sum over all
        // centers per mode, against |psi(theta)|^2 / 2pi.
        for (int t = 0; t < 17; ++t) {
            const double theta = -kPi + (t + 0.5) * kTwoPi / 17;
            cd acc = 0.0;
            for (const auto& e : field.entries()) acc += e.f * std::polar(1.0, e.k * theta);
            worst_theta = std::max(worst_theta, std::abs(acc.real() - std::norm(psi.evaluate(theta)) / kTwoPi));
        }
        const WaveFunction chi = WaveFunction::random(10, rng);
        for (int m = -10; m <= 10; m += 5) {
            worst_filter = std::max(worst_filter, std::abs(momentum_filter(psi, psi, m).real() - std::norm(psi.coeff(m))));
            worst_filter =
                std::max(worst_filter, std::abs(momentum_filter(chi, psi, m) - std::conj(chi.coeff(m)) * psi.coeff(m)));
        }
    }
    out.push_back(make_result("marginals-theta", "marginals", worst_theta, 1e-12,
                              "field pbar-integral vs |psi(theta)|^2/2pi"));
    out.push_back(make_result("marginals-momentum-filter", "marginals", worst_filter, 1e-10));
    return out;
}

// ----------------------------------------------------------------- thermal

std::vector<CheckResult> check_thermal() {
    std::vector<CheckResult> out;
    const PendulumModel model = PendulumModel::pendulum(1.0, 1.0, 1.0);
    const PendulumSolver solver(model, 16);

    const double r1 = solver.bloch_residual(1.0, 0.02);
    const double r2 = solver.bloch_residual(1.0, 0.01);
    const double order = std::log2(r1 / r2);
    out.push_back(make_result("thermal-bloch-order", "thermal", std::abs(order - 2.0), 0.1,
                              "finite-difference order " + fmt(order)));

    const MoyalCoefficients rho = solver.thermal_state(0.7);
    const auto field = ShiftedSincField::from_moyal(rho);
    const double norm_err = std::abs(field.integral().real() - 1.0);
    int max_mode = 0;
    for (const auto& e : field.entries()) max_mode = std::max(max_mode, std::abs(e.k));
    const bool band_ok = max_mode <= 2 * solver.n_max();
    out.push_back(make_result("thermal-wigner-normalized", "thermal", norm_err, 1e-12,
                              std::string("band-limited: |k| <= 2 n_max ") + (band_ok ? "(yes)" : "(NO)")));
    return out;
}

}  // namespace

std::vector<std::string> available_suites() {
    return {"kernel", "wigner", "weyl", "star", "liouville", "density", "energy", "recovery", "marginals", "thermal"};
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& suites) {
    const auto all = available_suites();
    std::vector<std::string> wanted = suites.empty() ? all : suites;
    for (const auto& s : wanted)
        if (std::find(all.begin(), all.end(), s) == all.end()) throw ParameterError("unknown check suite: " + s);

    std::vector<CheckResult> out;
    const auto run = [&](const std::string& name, auto fn) {
        if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) return;
        const auto results = fn();
        out.insert(out.end(), results.begin(), results.end());
    };
    run("kernel", check_kernel);
    run("wigner", check_wigner);
    run("weyl", check_weyl);
    run("star", check_star);
    run("liouville", check_liouville);
    run("density", check_density);
    run("energy", check_energy);
    run("recovery", check_recovery);
    run("marginals", check_marginals);
    run("thermal", check_thermal);
    return out;
}

}  // namespace cylwig
