#include "cylwig/kernel.hpp"

#include <cmath>

#include "cylwig/field.hpp"
#include "cylwig/quadrature.hpp"
#include "cylwig/sinc.hpp"

namespace cylwig {

cd kernel(int m, int n, double theta, double p, double hbar) {
    const double pbar = p / hbar;
    return std::polar(1.0 / kTwoPi, (n - m) * theta) * sincpi(pbar - 0.5 * (m + n));
}

MoyalCoefficients MoyalCoefficients::pair(const WaveFunction& psi2, const WaveFunction& psi1) {
    const int n_max = std::max(psi2.n_max(), psi1.n_max());
    const WaveFunction a = psi2.padded(n_max);
    const WaveFunction b = psi1.padded(n_max);
    Eigen::MatrixXcd m(2 * n_max + 1, 2 * n_max + 1);
    for (int i = -n_max; i <= n_max; ++i)
        for (int j = -n_max; j <= n_max; ++j) m(i + n_max, j + n_max) = std::conj(a.coeff(i)) * b.coeff(j);
    return MoyalCoefficients(n_max, std::move(m));
}

MoyalCoefficients MoyalCoefficients::density(int n_max, const Eigen::MatrixXcd& rho, double trace_tol) {
    const int dim = 2 * n_max + 1;
    if (rho.rows() != dim || rho.cols() != dim) throw ParameterError("density matrix size does not match n_max");
    if (std::abs(rho.trace() - cd{1.0, 0.0}) > trace_tol) throw ValidationError("density matrix trace differs from 1");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > trace_tol) throw ValidationError("density matrix is not hermitian");
    return MoyalCoefficients(n_max, rho.transpose());
}

bool MoyalCoefficients::is_hermitian(double tol) const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

ShiftedSincField ShiftedSincField::from_moyal(const MoyalCoefficients& m) {
    ShiftedSincField field;
    const int n_max = m.n_max();
    const double norm = 1.0 / kTwoPi;
    for (int i = -n_max; i <= n_max; ++i)
        for (int j = -n_max; j <= n_max; ++j) {
            const cd f = m.coeff(i, j);
            if (f != cd{0.0, 0.0}) field.add_term(j - i, i + j, f * norm);
        }
    field.compress();
    return field;
}

cd moyal_eval(const WaveFunction& psi2, const WaveFunction& psi1, double theta, double p, double hbar) {
    const double pbar = p / hbar;
    cd acc = 0.0;
    for (int m = -psi2.n_max(); m <= psi2.n_max(); ++m) {
        const cd cm = std::conj(psi2.coeff(m));
        if (cm == cd{0.0, 0.0}) continue;
        for (int n = -psi1.n_max(); n <= psi1.n_max(); ++n) {
            const cd cn = psi1.coeff(n);
            if (cn == cd{0.0, 0.0}) continue;
            acc += cm * cn * std::polar(1.0 / kTwoPi, (n - m) * theta) * sincpi(pbar - 0.5 * (m + n));
        }
    }
    return acc;
}

double wigner_eval(const WaveFunction& psi, double theta, double p, double hbar) {
    return moyal_eval(psi, psi, theta, p, hbar).real();
}

double wigner_from_density(const MoyalCoefficients& rho, double theta, double p, double hbar) {
    if (std::abs(rho.trace() - cd{1.0, 0.0}) > 1e-10) throw ValidationError("density trace differs from 1");
    if (!rho.is_hermitian(1e-10)) throw ValidationError("density is not hermitian");
    const double pbar = p / hbar;
    const int n_max = rho.n_max();
    cd acc = 0.0;
    for (int m = -n_max; m <= n_max; ++m)
        for (int n = -n_max; n <= n_max; ++n) {
            const cd f = rho.coeff(m, n);
            if (f == cd{0.0, 0.0}) continue;
            acc += f * std::polar(1.0 / kTwoPi, (n - m) * theta) * sincpi(pbar - 0.5 * (m + n));
        }
    return acc.real();
}

cd moyal_eval_quadrature(const WaveFunction& psi2, const WaveFunction& psi1, double theta, double p, double hbar,
                         int panels, int nodes_per_panel) {
    const double pbar = p / hbar;
    const auto integrand = [&](double vt) {
        return std::polar(1.0, -pbar * vt) * std::conj(psi2.evaluate(theta - 0.5 * vt)) * psi1.evaluate(theta + 0.5 * vt);
    };
    return integrate_panels(integrand, -kPi, kPi, panels, nodes_per_panel) / (kTwoPi * kTwoPi);
}

}  // namespace cylwig
