#pragma once

#include <vector>

#include "cylwig/symbol.hpp"

namespace cylwig {

/// Moyal star product, exact on the polynomial class via the mode-shift rule
///   (P(p) e^{ik theta}) * (Q(p) e^{il theta})
///     = P(p + hbar l/2) Q(p - hbar k/2) e^{i(k+l) theta},
/// extended bilinearly. Associative; hbar -> 0 gives the pointwise product.
PhaseSpaceSymbol star(const PhaseSpaceSymbol& a, const PhaseSpaceSymbol& b, double hbar = 1.0);

/// A*B - B*A (odd in hbar; leading order i hbar {A,B}_Poisson).
PhaseSpaceSymbol star_commutator(const PhaseSpaceSymbol& a, const PhaseSpaceSymbol& b, double hbar = 1.0);

/// A*B + B*A (even in hbar; leading order 2AB).
PhaseSpaceSymbol star_anticommutator(const PhaseSpaceSymbol& a, const PhaseSpaceSymbol& b, double hbar = 1.0);

/// Taylor coefficients of star(a, b) in the deformation parameter:
/// result[r] multiplies hbar^r. Exact and terminating on polynomials.
std::vector<PhaseSpaceSymbol> hbar_expansion(const PhaseSpaceSymbol& a, const PhaseSpaceSymbol& b, int order);

}  // namespace cylwig
