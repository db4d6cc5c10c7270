#pragma once

#include <map>
#include <vector>

#include "cylwig/common.hpp"

namespace cylwig {

/// Polynomial in p with complex coefficients, coeffs()[j] * p^j.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<cd> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(cd v) { return Polynomial({v}); }
    static Polynomial monomial(int degree, cd v = 1.0);

    const std::vector<cd>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    cd coeff(int j) const { return j >= 0 && j < static_cast<int>(c_.size()) ? c_[j] : cd{0.0, 0.0}; }

    cd eval(cd p) const;
    Polynomial derivative() const;
    /// P(p + a) by binomial expansion.
    Polynomial shifted(cd a) const;
    Polynomial conjugated() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(cd v) const;

    void trim(double tol = 0.0);

private:
    std::vector<cd> c_;
};

/// Phase-space function  sum_k P_k(p) e^{i k theta}  with polynomial P_k.
/// Closed under the star product; zero polynomials are never stored.
class PhaseSpaceSymbol {
public:
    PhaseSpaceSymbol() = default;

    static PhaseSpaceSymbol zero() { return {}; }
    /// a * p^j
    static PhaseSpaceSymbol p_power(int j, cd a = 1.0);
    /// a * p^j cos(k theta)
    static PhaseSpaceSymbol cos_term(int k, int j = 0, cd a = 1.0);
    /// a * p^j sin(k theta)
    static PhaseSpaceSymbol sin_term(int k, int j = 0, cd a = 1.0);

    const std::map<int, Polynomial>& terms() const { return terms_; }
    void add_term(int k, const Polynomial& p);
    Polynomial term(int k) const;

    bool is_zero() const { return terms_.empty(); }
    int max_mode() const;
    int max_degree() const;

    cd eval(double theta, double p) const;

    /// Hermitian-symbol condition P_{-k} = conj(P_k): the symbol is real-valued.
    bool is_real_valued(double tol = 1e-12) const;

    PhaseSpaceSymbol operator+(const PhaseSpaceSymbol& o) const;
    PhaseSpaceSymbol operator-(const PhaseSpaceSymbol& o) const;
    PhaseSpaceSymbol scaled(cd v) const;
    /// Pointwise product (the hbar -> 0 limit of the star product).
    PhaseSpaceSymbol pointwise_product(const PhaseSpaceSymbol& o) const;
    PhaseSpaceSymbol conjugated() const;

    /// Drops coefficients with |c| <= tol.
    void prune(double tol);

    double max_coeff_distance(const PhaseSpaceSymbol& o) const;

private:
    std::map<int, Polynomial> terms_;
};

}  // namespace cylwig
