#include "cylwig/wigner_ops.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "cylwig/field.hpp"
#include "cylwig/quadrature.hpp"
#include "cylwig/sinc.hpp"

namespace cylwig {

Marginals marginals(const WaveFunction& psi) {
    Marginals m;
    m.n_max = psi.n_max();
    m.weights.resize(psi.size());
    for (int n = -psi.n_max(); n <= psi.n_max(); ++n) m.weights[n + psi.n_max()] = std::norm(psi.coeff(n));
    m.theta_density = [psi](double theta) { return std::norm(psi.evaluate(theta)) / kTwoPi; };
    const auto weights = m.weights;
    const int n_max = m.n_max;
    m.momentum_density = [weights, n_max](double pbar) {
        double acc = 0.0;
        for (int n = -n_max; n <= n_max; ++n) acc += weights[n + n_max] * sincpi(pbar - n);
        return acc;
    };
    return m;
}

cd momentum_filter(const WaveFunction& psi2, const WaveFunction& psi1, int m) {
    // ∫ dpbar sinc(pi(m-pbar)) ∫ dtheta V_{psi2 psi1}: the theta integral
    // leaves sum_n conj(c2_n) c1_n sinc(pi(pbar-n)); the pbar integral of the
    // sinc pair is sinc(pi(m-n)) in closed form.
    const int n_max = std::max(psi2.n_max(), psi1.n_max());
    cd acc = 0.0;
    for (int n = -n_max; n <= n_max; ++n) acc += std::conj(psi2.coeff(n)) * psi1.coeff(n) * sincpi(static_cast<double>(m - n));
    return acc;
}

double overlap(const WaveFunction& psi2, const WaveFunction& psi1) {
    const auto f2 = ShiftedSincField::from_wavefunction(psi2);
    const auto f1 = ShiftedSincField::from_wavefunction(psi1);
    return kTwoPi * ShiftedSincField::overlap_integral(f2, f1).real();
}

double purity(const WaveFunction& psi) {
    const auto f = ShiftedSincField::from_wavefunction(psi);
    return ShiftedSincField::overlap_integral(f, f).real();
}

double purity(const MoyalCoefficients& rho) {
    const auto f = ShiftedSincField::from_moyal(rho);
    return ShiftedSincField::overlap_integral(f, f).real();
}

double kernel_orthogonality(int k, int l, int m, int n) {
    if (l - k + n - m != 0) return 0.0;
    return sincpi(0.5 * (k + l - m - n));
}

double kernel_orthogonality_quadrature(int k, int l, int m, int n, double window) {
    // 2pi ∫dtheta ∫dpbar V_kl V_mn with the theta integral by exact periodic
    // trapezoid and the pbar integral by windowed quadrature + tail.
    const int delta = l - k + n - m;
    const int nodes = 4 * (std::abs(delta) + 1) + 8;
    const cd theta_part = integrate_periodic([&](double t) { return std::polar(1.0, delta * t); }, nodes);
    const double pbar_part = sinc_pair_quadrature(0.5 * (k + l), 0.5 * (m + n), window);
    return (kTwoPi * theta_part * pbar_part / (kTwoPi * kTwoPi)).real();
}

namespace {

// C-infinity taper: 1 on [0, 1/2], 0 at 1.
double taper(double u) {
    if (u <= 0.5) return 1.0;
    if (u >= 1.0) return 0.0;
    const double t = 2.0 * (u - 0.5);
    const auto f = [](double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; };
    return f(1.0 - t) / (f(t) + f(1.0 - t));
}

// F(theta) = 2pi ∫ dpbar e^{i pbar theta} V(theta/2, hbar*pbar). The
// integrand is band-limited, so the half-integer-spaced trapezoid sum is
// exact up to the smooth window truncation.
cd anchored_product(const std::function<double(double, double)>& wigner, double theta, const RecoveryOptions& opts) {
    const int samples = opts.pbar_samples;
    cd acc = 0.0;
    for (int j = -samples; j <= samples; ++j) {
        const double w = taper(std::abs(j) / static_cast<double>(samples));
        if (w == 0.0) continue;
        const double pbar = 0.5 * j;
        acc += w * wigner(0.5 * theta, opts.hbar * pbar) * std::polar(1.0, pbar * theta);
    }
    return kTwoPi * 0.5 * acc;
}

}  // namespace

WaveFunction recover_wavefunction(const std::function<double(double, double)>& wigner, int n_max,
                                  const std::vector<double>& theta_grid, const RecoveryOptions& opts) {
    const double zero_anchor = anchored_product(wigner, 0.0, opts).real();  // |psi(0)|^2
    if (!(zero_anchor > opts.anchor_threshold * opts.anchor_threshold))
        throw DegenerateAnchorError("|psi(0)| below the anchor threshold; cannot fix the recovery phase");

    // Keep theta away from +-pi, where the pbar sampling window loses margin.
    std::vector<double> nodes;
    for (double t : theta_grid)
        if (std::abs(t) <= kPi - 0.4) nodes.push_back(t);
    const int dim = 2 * n_max + 1;
    if (static_cast<int>(nodes.size()) < dim + 1)
        throw ParameterError("theta grid too small for the requested cutoff");

    Eigen::MatrixXcd design(nodes.size(), dim);
    Eigen::VectorXcd rhs(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        rhs(i) = anchored_product(wigner, nodes[i], opts);
        for (int n = -n_max; n <= n_max; ++n) design(i, n + n_max) = std::polar(1.0, n * nodes[i]);
    }
    Eigen::VectorXcd x = design.colPivHouseholderQr().solve(rhs);

    WaveFunction psi(n_max);
    for (int n = -n_max; n <= n_max; ++n) psi.set_coeff(n, x(n + n_max));
    psi = psi.normalized();

    // Global phase: psi(0) real positive.
    const cd at_zero = psi.evaluate(0.0);
    if (std::abs(at_zero) > 0.0) {
        const cd phase = std::conj(at_zero) / std::abs(at_zero);
        WaveFunction fixed(n_max);
        for (int n = -n_max; n <= n_max; ++n) fixed.set_coeff(n, phase * psi.coeff(n));
        return fixed;
    }
    return psi;
}

}  // namespace cylwig
