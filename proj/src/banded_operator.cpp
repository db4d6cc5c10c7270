#include "cylwig/banded_operator.hpp"

#include <cmath>

namespace cylwig {

BandedOperator::BandedOperator(int n_max, int bandwidth) : n_max_(n_max), bandwidth_(bandwidth) {
    if (n_max < 0) throw ParameterError("n_max must be >= 0");
    if (bandwidth < 0 || bandwidth > 2 * n_max) throw ParameterError("bandwidth outside [0, 2*n_max]");
    a_ = Eigen::MatrixXcd::Zero(size(), size());
}

BandedOperator BandedOperator::from_dense(int n_max, Eigen::MatrixXcd a, double zero_tol) {
    const int dim = 2 * n_max + 1;
    if (a.rows() != dim || a.cols() != dim) throw ParameterError("matrix size does not match n_max");
    int bw = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (std::abs(a(i, j)) > zero_tol) bw = std::max(bw, std::abs(i - j));
    BandedOperator out(n_max, bw);
    out.a_ = std::move(a);
    return out;
}

BandedOperator BandedOperator::identity(int n_max) {
    BandedOperator out(n_max, 0);
    out.a_.setIdentity();
    return out;
}

cd BandedOperator::entry(int m, int n) const {
    if (std::abs(m) > n_max_ || std::abs(n) > n_max_) return {0.0, 0.0};
    return a_(m + n_max_, n + n_max_);
}

void BandedOperator::set_entry(int m, int n, cd v) {
    if (std::abs(m) > n_max_ || std::abs(n) > n_max_) throw ParameterError("index outside window");
    if (std::abs(m - n) > bandwidth_ && v != cd{0.0, 0.0}) throw ParameterError("entry outside declared bandwidth");
    a_(m + n_max_, n + n_max_) = v;
}

bool BandedOperator::is_hermitian(double tol) const {
    return (a_ - a_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

BandedOperator BandedOperator::adjoint() const {
    BandedOperator out(n_max_, bandwidth_);
    out.a_ = a_.adjoint();
    return out;
}

BandedOperator BandedOperator::scaled(cd factor) const {
    BandedOperator out(n_max_, bandwidth_);
    out.a_ = a_ * factor;
    return out;
}

BandedOperator BandedOperator::plus(const BandedOperator& other, cd factor) const {
    if (other.n_max_ != n_max_) throw ParameterError("cutoff mismatch");
    BandedOperator out(n_max_, std::max(bandwidth_, other.bandwidth_));
    out.a_ = a_ + factor * other.a_;
    return out;
}

WaveFunction BandedOperator::apply(const WaveFunction& psi, bool* touched_truncation) const {
    if (psi.n_max() != n_max_) throw ParameterError("cutoff mismatch");
    Eigen::VectorXcd v(size());
    for (int i = 0; i < size(); ++i) v(i) = psi.coeffs()[i];
    const Eigen::VectorXcd w = a_ * v;
    if (touched_truncation) {
        bool touched = false;
        for (int n = n_max_ - bandwidth_ + 1; n <= n_max_; ++n)
            if (std::abs(psi.coeff(n)) > 0.0 || std::abs(psi.coeff(-n)) > 0.0) touched = true;
        *touched_truncation = touched && bandwidth_ > 0;
    }
    std::vector<cd> out(w.data(), w.data() + w.size());
    return WaveFunction(n_max_, std::move(out));
}

namespace {

// The product sum over the intermediate index gets clipped at the window
// edge iff both factors can reach past it, which needs both bandwidths >= 1.
bool product_touches_truncation(const BandedOperator& a, const BandedOperator& b) {
    return a.bandwidth() >= 1 && b.bandwidth() >= 1;
}

}  // namespace

ProductResult op_mul(const BandedOperator& a, const BandedOperator& b) {
    if (a.n_max() != b.n_max()) throw ParameterError("cutoff mismatch");
    return {BandedOperator::from_dense(a.n_max(), a.dense() * b.dense()), product_touches_truncation(a, b)};
}

ProductResult commutator(const BandedOperator& a, const BandedOperator& b) {
    if (a.n_max() != b.n_max()) throw ParameterError("cutoff mismatch");
    auto ab = a.dense() * b.dense() - b.dense() * a.dense();
    return {BandedOperator::from_dense(a.n_max(), std::move(ab)), product_touches_truncation(a, b)};
}

ProductResult anticommutator(const BandedOperator& a, const BandedOperator& b) {
    if (a.n_max() != b.n_max()) throw ParameterError("cutoff mismatch");
    auto ab = a.dense() * b.dense() + b.dense() * a.dense();
    return {BandedOperator::from_dense(a.n_max(), std::move(ab)), product_touches_truncation(a, b)};
}

BandedOperator cos_operator(int n_max) { return cos_k_operator(1, n_max); }
BandedOperator sin_operator(int n_max) { return sin_k_operator(1, n_max); }

BandedOperator cos_k_operator(int k, int n_max) {
    if (n_max < 1) throw ParameterError("n_max must be >= 1");
    if (k < 0 || k > 2 * n_max) throw ParameterError("mode k outside [0, 2*n_max]");
    BandedOperator c(n_max, k);
    for (int m = -n_max; m <= n_max; ++m) {
        if (m + k <= n_max) c.set_entry(m + k, m, k == 0 ? cd{1.0, 0.0} : cd{0.5, 0.0});
        if (k > 0 && m - k >= -n_max) c.set_entry(m - k, m, 0.5);
    }
    return c;
}

BandedOperator sin_k_operator(int k, int n_max) {
    if (n_max < 1) throw ParameterError("n_max must be >= 1");
    if (k < 1 || k > 2 * n_max) throw ParameterError("mode k outside [1, 2*n_max]");
    BandedOperator s(n_max, k);
    // sin(k phi) = (e^{ik phi} - e^{-ik phi}) / 2i
    for (int m = -n_max; m <= n_max; ++m) {
        if (m + k <= n_max) s.set_entry(m + k, m, cd{0.0, -0.5});
        if (m - k >= -n_max) s.set_entry(m - k, m, cd{0.0, 0.5});
    }
    return s;
}

BandedOperator angular_momentum(int n_max, double hbar) {
    BandedOperator l(n_max, 0);
    for (int m = -n_max; m <= n_max; ++m) l.set_entry(m, m, hbar * m);
    return l;
}

BandedOperator angular_momentum_squared(int n_max, double hbar) {
    BandedOperator l2(n_max, 0);
    for (int m = -n_max; m <= n_max; ++m) l2.set_entry(m, m, hbar * hbar * m * m);
    return l2;
}

BandedOperator potential_operator(const std::vector<PotentialMode>& modes, int n_max) {
    int bw = 0;
    for (const auto& mode : modes) bw = std::max(bw, mode.k);
    BandedOperator u(n_max, std::min(bw, 2 * n_max));
    for (const auto& mode : modes) {
        if (mode.k > 2 * n_max) throw ParameterError("potential mode outside the truncated window");
        if (mode.a_cos != 0.0) u = u.plus(cos_k_operator(mode.k, n_max), mode.a_cos);
        if (mode.b_sin != 0.0) u = u.plus(sin_k_operator(mode.k, n_max), mode.b_sin);
    }
    return u;
}

BandedOperator hamiltonian(const PendulumModel& model, int n_max) {
    BandedOperator h = angular_momentum_squared(n_max, model.hbar()).scaled(model.gamma());
    if (!model.modes().empty()) h = h.plus(potential_operator(model.modes(), n_max));
    return h;
}

double PendulumModel::potential(double theta) const {
    double u = 0.0;
    for (const auto& m : modes_) u += m.a_cos * std::cos(m.k * theta) + m.b_sin * std::sin(m.k * theta);
    return u;
}

double PendulumModel::potential_gradient(double theta) const {
    double du = 0.0;
    for (const auto& m : modes_) du += m.k * (-m.a_cos * std::sin(m.k * theta) + m.b_sin * std::cos(m.k * theta));
    return du;
}

}  // namespace cylwig
