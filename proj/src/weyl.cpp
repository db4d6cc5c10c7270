#include "cylwig/weyl.hpp"

#include <cmath>

#include "cylwig/field.hpp"
#include "cylwig/sinc.hpp"

namespace cylwig {

namespace {

// Newton forward form on the equally spaced nodes x_i = x0 + i*dx, expanded
// into monomial coefficients. Exact for dyadic data.
Polynomial newton_fit(const std::vector<cd>& diffs_head, double x0, double dx, int degree) {
    Polynomial acc;                       // result
    Polynomial basis = Polynomial::constant(1.0);  // prod_{i<j} (p - x_i)
    double fact = 1.0;
    for (int j = 0; j <= degree; ++j) {
        if (j > 0) {
            fact *= j * dx;
            basis = basis * Polynomial({-cd(x0 + (j - 1) * dx), 1.0});
        }
        acc = acc + basis.scaled(diffs_head[j] / fact);
    }
    return acc;
}

}  // namespace

WeylSymbolResult weyl_symbol(const BandedOperator& a, const WeylOptions& opts) {
    const int n_max = a.n_max();
    const double hbar = opts.hbar;
    const int margin = opts.interior_margin >= 0 ? opts.interior_margin : a.bandwidth();
    PhaseSpaceSymbol symbol;
    bool structured = true;

    for (int k = -a.bandwidth(); k <= a.bandwidth() && structured; ++k) {
        int n_lo = std::max(-n_max, -n_max - k);
        int n_hi = std::min(n_max, n_max - k);
        // Drop possibly contaminated samples near the window edge, keeping
        // enough points to resolve max_degree.
        const int len = n_hi - n_lo + 1;
        const int spare = len - (opts.max_degree + 2);
        const int trim = std::max(0, std::min(margin, spare / 2));
        n_lo += trim;
        n_hi -= trim;
        if (n_hi < n_lo) continue;

        std::vector<cd> values;
        values.reserve(n_hi - n_lo + 1);
        double scale = 0.0;
        for (int n = n_lo; n <= n_hi; ++n) {
            values.push_back(a.entry(n + k, n));
            scale = std::max(scale, std::abs(values.back()));
        }
        if (scale == 0.0) continue;

        // Successive finite differences; the first level that vanishes
        // (within fit_tol relative to the data scale) fixes the degree.
        std::vector<cd> heads{values.front()};  // Delta^j y at the left end
        std::vector<cd> work = values;
        int degree = -2;
        for (int d = 0; degree == -2; ++d) {
            bool zero = true;
            for (const cd& v : work)
                if (std::abs(v) > opts.fit_tol * scale) zero = false;
            if (zero) {
                degree = d - 1;  // Delta^d vanished
            } else if (d > opts.max_degree) {
                degree = -1;  // unstructured band
            } else if (work.size() == 1) {
                degree = d;  // plain interpolation through every sample
            } else {
                for (std::size_t i = 0; i + 1 < work.size(); ++i) work[i] = work[i + 1] - work[i];
                work.pop_back();
                heads.push_back(work.front());
            }
        }
        if (degree == -1) {
            structured = false;
            break;
        }
        const double x0 = hbar * (n_lo + 0.5 * k);
        symbol.add_term(k, newton_fit(heads, x0, hbar, degree));
    }

    WeylSymbolResult res;
    if (structured) {
        res.symbol = std::move(symbol);
        return res;
    }
    SampledSymbol sampled;
    sampled.grid = PhaseSpaceGrid::interior(64, n_max + 2.0, 129);
    ShiftedSincField field;
    for (int i = -n_max; i <= n_max; ++i)
        for (int j = -n_max; j <= n_max; ++j) {
            const cd v = a.entry(i, j);
            if (v != cd{0.0, 0.0}) field.add_term(i - j, i + j, v);
        }
    field.compress();
    sampled.values = field.evaluate_grid(sampled.grid);
    res.sampled = std::move(sampled);
    return res;
}

BandedOperator weyl_quantize(const PhaseSpaceSymbol& symbol, int n_max, double hbar) {
    int bw = 0;
    for (const auto& [k, p] : symbol.terms()) bw = std::max(bw, std::abs(k));
    BandedOperator a(n_max, std::min(bw, 2 * n_max));
    for (const auto& [k, poly] : symbol.terms()) {
        if (std::abs(k) > 2 * n_max) continue;  // mode falls outside the window entirely
        for (int n = -n_max; n <= n_max; ++n) {
            const int m = n + k;
            if (m < -n_max || m > n_max) continue;
            a.set_entry(m, n, poly.eval(hbar * (n + 0.5 * k)));
        }
    }
    return a;
}

double sinc_moment(int j, double s) {
    if (j < 0) throw ParameterError("moment order must be >= 0");
    return std::pow(s, j);
}

std::vector<cd> product_symbol_samples(const BandedOperator& a, const BandedOperator& b, const PhaseSpaceGrid& grid,
                                       double hbar) {
    (void)hbar;  // pbar axis already carries p/hbar
    const Eigen::MatrixXcd m = a.dense() * b.dense();
    const int n_max = a.n_max();
    ShiftedSincField field;
    for (int i = -n_max; i <= n_max; ++i)
        for (int j = -n_max; j <= n_max; ++j) {
            const cd v = m(i + n_max, j + n_max);
            if (v != cd{0.0, 0.0}) field.add_term(i - j, i + j, v);
        }
    field.compress();
    return field.evaluate_grid(grid);
}

cd trace_symbol_eval(const BandedOperator& a, double theta, double p, double hbar) {
    const double pbar = p / hbar;
    const int n_max = a.n_max();
    cd acc = 0.0;
    for (int i = -n_max; i <= n_max; ++i)
        for (int j = std::max(-n_max, i - a.bandwidth()); j <= std::min(n_max, i + a.bandwidth()); ++j) {
            const cd v = a.entry(i, j);
            if (v == cd{0.0, 0.0}) continue;
            acc += v * std::polar(1.0, (i - j) * theta) * sincpi(pbar - 0.5 * (i + j));
        }
    return acc;
}

cd convolution_kernel(const BandedOperator& a, double theta, double p, double theta1, double p1, double hbar) {
    const int n_max = a.n_max();
    const double pbar = p / hbar;
    const double pbar1 = p1 / hbar;
    cd acc = 0.0;
    for (int m = -n_max; m <= n_max; ++m)
        for (int n = -n_max; n <= n_max; ++n) {
            // V_mn(theta,p) * sum_k A_nk V_km(theta1,p1)
            const cd vmn = std::polar(1.0 / kTwoPi, (n - m) * theta) * sincpi(pbar - 0.5 * (m + n));
            if (vmn == cd{0.0, 0.0}) continue;
            cd inner = 0.0;
            for (int k = std::max(-n_max, n - a.bandwidth()); k <= std::min(n_max, n + a.bandwidth()); ++k) {
                const cd ank = a.entry(n, k);
                if (ank == cd{0.0, 0.0}) continue;
                inner += ank * std::polar(1.0 / kTwoPi, (m - k) * theta1) * sincpi(pbar1 - 0.5 * (k + m));
            }
            acc += vmn * inner;
        }
    return kTwoPi * acc;
}

cd triple_trace(double theta, double p, double theta1, double p1, double theta2, double p2, double hbar) {
    const double phase = -2.0 * (p * (theta1 - theta2) + p1 * (theta2 - theta) + p2 * (theta - theta1)) / hbar;
    return std::polar(4.0 / (kTwoPi * kTwoPi * kTwoPi), phase);
}

}  // namespace cylwig
