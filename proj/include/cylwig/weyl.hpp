#pragma once

#include <optional>

#include "cylwig/banded_operator.hpp"
#include "cylwig/grid.hpp"
#include "cylwig/symbol.hpp"

namespace cylwig {

struct WeylOptions {
    double hbar = 1.0;
    /// Band samples dropped at each end of every diagonal before fitting
    /// (they may carry truncation contamination from operator products).
    /// Negative means "use the operator's declared bandwidth".
    int interior_margin = -1;
    /// Residual threshold for accepting a fitted polynomial band.
    double fit_tol = 1e-10;
    /// Bands needing a higher degree than this are treated as unstructured.
    int max_degree = 12;
};

/// Numeric fallback result: 2pi tr[A V(theta,p)] sampled on a grid.
struct SampledSymbol {
    PhaseSpaceGrid grid;
    std::vector<cd> values;  // row-major [theta][pbar]
};

struct WeylSymbolResult {
    std::optional<PhaseSpaceSymbol> symbol;   // set when the band fit is exact
    std::optional<SampledSymbol> sampled;     // set on fallback
    bool exact() const { return symbol.has_value(); }
};

/// Operator -> phase-space function. For banded operators whose diagonals
/// depend polynomially on the band position the result is the exact symbol
/// with A_{n+k,n} = P_k(hbar*(n + k/2)); otherwise a sampled field is
/// returned, flagged non-exact.
WeylSymbolResult weyl_symbol(const BandedOperator& a, const WeylOptions& opts = {});

/// Symbol -> operator: A_mn = P_{m-n}(hbar*(m+n)/2).
BandedOperator weyl_quantize(const PhaseSpaceSymbol& symbol, int n_max, double hbar = 1.0);

/// Regularized moment ∫ dpbar pbar^j sinc(pi(pbar-s)) = s^j (distributional;
/// certified against the Gaussian-regularized quadrature oracle).
double sinc_moment(int j, double s);

/// 2pi tr[V(theta,p) A B] sampled on a grid (the product symbol by trace).
std::vector<cd> product_symbol_samples(const BandedOperator& a, const BandedOperator& b, const PhaseSpaceGrid& grid,
                                       double hbar = 1.0);

/// Convolution kernel G_A(theta,p; theta1,p1) = 2pi tr[V(theta,p) A V(theta1,p1)].
cd convolution_kernel(const BandedOperator& a, double theta, double p, double theta1, double p1, double hbar = 1.0);

/// tr[V(theta,p) V(theta1,p1) V(theta2,p2)] in closed form:
/// (4/(2pi)^3) exp(-2i[p(theta1-theta2) + p1(theta2-theta) + p2(theta-theta1)]/hbar).
cd triple_trace(double theta, double p, double theta1, double p1, double theta2, double p2, double hbar = 1.0);

/// Exact symbol of 2pi tr[V A] as a shifted-sinc expansion is not polynomial;
/// this helper evaluates it pointwise for cross-checks and fallbacks.
cd trace_symbol_eval(const BandedOperator& a, double theta, double p, double hbar = 1.0);

}  // namespace cylwig
