#pragma once

#include <Eigen/Dense>

#include "cylwig/common.hpp"
#include "cylwig/constants.hpp"
#include "cylwig/wave_function.hpp"

namespace cylwig {

/// Operator on the truncated circle basis: complex matrix A_mn,
/// m,n in [-n_max, n_max], with a declared bandwidth max|m-n|.
class BandedOperator {
public:
    BandedOperator(int n_max, int bandwidth);

    /// Wraps a dense matrix, inferring the bandwidth from its sparsity.
    static BandedOperator from_dense(int n_max, Eigen::MatrixXcd a, double zero_tol = 0.0);

    static BandedOperator identity(int n_max);

    int n_max() const { return n_max_; }
    int size() const { return 2 * n_max_ + 1; }
    int bandwidth() const { return bandwidth_; }

    cd entry(int m, int n) const;
    void set_entry(int m, int n, cd v);

    const Eigen::MatrixXcd& dense() const { return a_; }

    bool is_hermitian(double tol = 0.0) const;

    BandedOperator adjoint() const;
    BandedOperator scaled(cd factor) const;
    BandedOperator plus(const BandedOperator& other, cd factor = 1.0) const;

    /// A psi on the truncated window. If touched_truncation is given, it is
    /// set when psi has weight within one bandwidth of the window edge (the
    /// untruncated image would stick out).
    WaveFunction apply(const WaveFunction& psi, bool* touched_truncation = nullptr) const;

private:
    int n_max_;
    int bandwidth_;
    Eigen::MatrixXcd a_;  // (2n_max+1)^2 dense storage; band invariant enforced on write
};

/// Matrix product on the truncated space. truncation_contact flags entries
/// near the window corners whose untruncated sums were clipped.
struct ProductResult {
    BandedOperator op;
    bool truncation_contact = false;
};

ProductResult op_mul(const BandedOperator& a, const BandedOperator& b);
ProductResult commutator(const BandedOperator& a, const BandedOperator& b);
ProductResult anticommutator(const BandedOperator& a, const BandedOperator& b);

// Standard observables. Matrix elements are exact.
BandedOperator cos_operator(int n_max);                               // C
BandedOperator sin_operator(int n_max);                               // S
BandedOperator cos_k_operator(int k, int n_max);                      // cos(k phi)
BandedOperator sin_k_operator(int k, int n_max);                      // sin(k phi)
BandedOperator angular_momentum(int n_max, double hbar = 1.0);        // L
BandedOperator angular_momentum_squared(int n_max, double hbar = 1.0);
BandedOperator potential_operator(const std::vector<PotentialMode>& modes, int n_max);
BandedOperator hamiltonian(const PendulumModel& model, int n_max);    // gamma L^2 + U

}  // namespace cylwig
