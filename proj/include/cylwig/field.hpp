#pragma once

#include <vector>

#include "cylwig/common.hpp"
#include "cylwig/grid.hpp"
#include "cylwig/wave_function.hpp"

namespace cylwig {

class MoyalCoefficients;

/// One term  f * e^{i k theta} * sinc(pi*(pbar - s)),  s = s2/2.
struct FieldEntry {
    int k;
    int s2;  // twice the sinc center; half-integers stay exact
    cd f;
};

/// Finite sum of angular harmonics times shifted sincs. Wigner/Moyal
/// functions of truncated states live here exactly, and the class is closed
/// under theta-derivatives and half-integer pbar-shifts.
class ShiftedSincField {
public:
    ShiftedSincField() = default;

    static ShiftedSincField from_pair(const WaveFunction& psi2, const WaveFunction& psi1);
    static ShiftedSincField from_wavefunction(const WaveFunction& psi);
    static ShiftedSincField from_moyal(const MoyalCoefficients& m);

    void add_term(int k, int s2, cd f);
    /// Sorts, merges duplicates, drops magnitudes <= tol.
    void compress(double tol = 0.0);

    const std::vector<FieldEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    ShiftedSincField& add_scaled(const ShiftedSincField& other, cd factor);
    ShiftedSincField scaled(cd factor) const;

    /// d/dtheta: multiplies each term by i*k.
    ShiftedSincField theta_derivative() const;

    /// Field evaluated at pbar + ds2/2 (half-integer shift; exact).
    ShiftedSincField shifted_pbar(int ds2) const;

    /// f_{-k,s} == conj(f_{k,s}) within tol (real-valued field).
    bool is_real_field(double tol = 1e-12) const;

    // Point evaluation (pbar = p/hbar).
    cd evaluate(double theta, double pbar) const;
    /// d^order/dpbar^order of the field.
    cd evaluate_dpbar(double theta, double pbar, int order) const;
    /// sum f e^{ik theta} sin(pi(pbar-s)).
    cd evaluate_sin(double theta, double pbar) const;
    /// sum f e^{ik theta} (pbar+s) sin(pi(pbar-s)).
    cd evaluate_sin_flow(double theta, double pbar) const;

    // Grid evaluation, row-major [theta][pbar]; parallel over theta rows.
    std::vector<cd> evaluate_grid(const PhaseSpaceGrid& g) const;
    std::vector<cd> evaluate_grid_dpbar(const PhaseSpaceGrid& g, int order) const;
    std::vector<cd> evaluate_grid_sin(const PhaseSpaceGrid& g) const;
    std::vector<cd> evaluate_grid_sin_flow(const PhaseSpaceGrid& g) const;

    // Exact integrals over the full cylinder (dtheta dpbar).
    cd integral() const;
    /// ∫∫ F * G dtheta dpbar (no conjugation), via mode pairing and the
    /// shifted-sinc orthonormality.
    static cd overlap_integral(const ShiftedSincField& f, const ShiftedSincField& g);

private:
    std::vector<FieldEntry> entries_;
};

}  // namespace cylwig
