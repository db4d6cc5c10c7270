#pragma once

#include <random>
#include <span>
#include <vector>

#include "cylwig/common.hpp"

namespace cylwig {

/// State on the circle as a truncated Fourier coefficient vector c_n,
/// n in [-n_max, n_max]. Immutable after construction apart from set_coeff
/// during assembly.
class WaveFunction {
public:
    explicit WaveFunction(int n_max);
    WaveFunction(int n_max, std::vector<cd> coeffs);

    /// The basis state e_n(phi) = exp(i n phi).
    static WaveFunction basis(int n, int n_max);

    /// Haar-ish random normalized state (complex Gaussian coefficients).
    static WaveFunction random(int n_max, std::mt19937_64& rng);

    int n_max() const { return n_max_; }
    int size() const { return 2 * n_max_ + 1; }

    cd coeff(int n) const { return (n < -n_max_ || n > n_max_) ? cd{0.0, 0.0} : c_[n + n_max_]; }
    void set_coeff(int n, cd v);
    std::span<const cd> coeffs() const { return c_; }

    double norm() const;
    WaveFunction normalized(double tol = 1e-14) const;

    /// psi(phi) = sum c_n e^{i n phi}; 2pi-periodic in phi.
    cd evaluate(double phi) const;

    /// Same state with a wider symmetric window (zero padding).
    WaveFunction padded(int n_max) const;

private:
    int n_max_;
    std::vector<cd> c_;
};

/// (psi2, psi1) = sum conj(c2_n) c1_n; differing cutoffs zero-pad implicitly.
cd inner_product(const WaveFunction& psi2, const WaveFunction& psi1);

}  // namespace cylwig
