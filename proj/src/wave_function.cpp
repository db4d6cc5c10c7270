#include "cylwig/wave_function.hpp"

#include <cmath>

namespace cylwig {

WaveFunction::WaveFunction(int n_max) : n_max_(n_max) {
    if (n_max < 0) throw ParameterError("n_max must be >= 0");
    c_.assign(2 * n_max + 1, cd{0.0, 0.0});
}

WaveFunction::WaveFunction(int n_max, std::vector<cd> coeffs) : n_max_(n_max), c_(std::move(coeffs)) {
    if (n_max < 0) throw ParameterError("n_max must be >= 0");
    if (static_cast<int>(c_.size()) != 2 * n_max + 1)
        throw ParameterError("coefficient vector must have 2*n_max+1 entries");
}

WaveFunction WaveFunction::basis(int n, int n_max) {
    if (n < -n_max || n > n_max) throw ParameterError("basis index outside window");
    WaveFunction psi(n_max);
    psi.set_coeff(n, 1.0);
    return psi;
}

WaveFunction WaveFunction::random(int n_max, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    WaveFunction psi(n_max);
    for (int n = -n_max; n <= n_max; ++n) psi.set_coeff(n, cd(g(rng), g(rng)));
    return psi.normalized();
}

void WaveFunction::set_coeff(int n, cd v) {
    if (n < -n_max_ || n > n_max_) throw ParameterError("coefficient index outside window");
    c_[n + n_max_] = v;
}

double WaveFunction::norm() const {
    double s = 0.0;
    for (const cd& v : c_) s += std::norm(v);
    return std::sqrt(s);
}

WaveFunction WaveFunction::normalized(double tol) const {
    const double n = norm();
    if (n < tol) throw ValidationError("cannot normalize a (near-)zero state");
    WaveFunction out(*this);
    for (cd& v : out.c_) v /= n;
    return out;
}

cd WaveFunction::evaluate(double phi) const {
    const double r = std::remainder(phi, kTwoPi);
    const cd w = std::polar(1.0, r);
    // Horner over n = -n_max .. n_max: sum c_n w^n = w^{-n_max} * poly(w).
    cd acc = 0.0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) acc = acc * w + c_[i];
    return acc * std::polar(1.0, -n_max_ * r);
}

WaveFunction WaveFunction::padded(int n_max) const {
    if (n_max < n_max_) throw ParameterError("padding cannot shrink the window");
    WaveFunction out(n_max);
    for (int n = -n_max_; n <= n_max_; ++n) out.set_coeff(n, coeff(n));
    return out;
}

cd inner_product(const WaveFunction& psi2, const WaveFunction& psi1) {
    const int n_max = std::min(psi2.n_max(), psi1.n_max());  // outside either window both vanish
    cd acc = 0.0;
    for (int n = -n_max; n <= n_max; ++n) acc += std::conj(psi2.coeff(n)) * psi1.coeff(n);
    return acc;
}

}  // namespace cylwig
